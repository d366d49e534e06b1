#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dixit/digitboard.hpp"
#include "dixit/quantity.hpp"

namespace dixit {

// Two-line board display: the transient partial-product line written above,
// the working line itself, and the multiplier with its presentation shift.
struct BoardSnapshot {
    std::string upper;    // empty when the stage wrote nothing above
    int upper_indent = 0; // columns from the left edge of the board line
    DigitBoard board;
    DigitBoard multiplier;
    int shift = 0; // multiplier indent under the board line

    bool operator==(const BoardSnapshot&) const = default;
};

struct TableRow {
    std::string label;
    std::map<std::string, std::string> cells; // column name -> cell text

    bool operator==(const TableRow&) const = default;
};

struct TableRows {
    std::vector<std::string> columns;
    std::vector<TableRow> rows;

    bool operator==(const TableRows&) const = default;
};

struct Binding {
    std::string name;
    Quantity value;

    bool operator==(const Binding&) const = default;
};

struct Note {
    std::string text;

    bool operator==(const Note&) const = default;
};

using StepPayload = std::variant<BoardSnapshot, TableRows, Binding, Note>;

struct Step {
    int index = 0; // 1-based, contiguous
    std::string label;
    StepPayload payload;

    bool operator==(const Step&) const = default;
};

class Trace {
public:
    explicit Trace(std::string algorithm) : algorithm_(std::move(algorithm)) {}

    const std::string& algorithm() const { return algorithm_; }
    const std::vector<Step>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

    Step& add(std::string label, StepPayload payload);
    Step& add_note(std::string label, std::string text);

    bool operator==(const Trace& other) const {
        return algorithm_ == other.algorithm_ && steps_ == other.steps_;
    }

private:
    std::string algorithm_;
    std::vector<Step> steps_;
};

enum class TraceFormat { Text, Structured };

// Deterministic: identical traces render byte-identically. The structured
// format is versioned JSON ("schema": "1") and round-trips via trace_from_json.
std::string render_trace(const Trace& trace, TraceFormat format);

Json trace_to_json(const Trace& trace);
Trace trace_from_json(const Json& j);
Trace trace_from_json_text(const std::string& text);

} // namespace dixit
