#include "dixit/trace.hpp"

#include <algorithm>
#include <sstream>

namespace dixit {

Step& Trace::add(std::string label, StepPayload payload) {
    Step step;
    step.index = static_cast<int>(steps_.size()) + 1;
    step.label = std::move(label);
    step.payload = std::move(payload);
    steps_.push_back(std::move(step));
    return steps_.back();
}

Step& Trace::add_note(std::string label, std::string text) {
    return add(std::move(label), Note{std::move(text)});
}

namespace {

void render_board_snapshot(std::ostream& os, const BoardSnapshot& s) {
    if (!s.upper.empty())
        os << std::string(static_cast<std::size_t>(std::max(s.upper_indent, 0)), ' ')
           << s.upper << '\n';
    os << render_cells(s.board, BoardStyle::RingGlyph) << '\n';
    os << std::string(static_cast<std::size_t>(std::max(s.shift, 0)), ' ')
       << render_cells(s.multiplier, BoardStyle::RingGlyph) << '\n';
}

void render_table(std::ostream& os, const TableRows& t) {
    // column widths from the widest cell; the label column sized separately
    std::size_t label_width = 0;
    for (const TableRow& row : t.rows)
        label_width = std::max(label_width, row.label.size());
    std::vector<std::size_t> widths;
    widths.reserve(t.columns.size());
    for (const std::string& col : t.columns) {
        std::size_t w = col.size();
        for (const TableRow& row : t.rows) {
            auto it = row.cells.find(col);
            if (it != row.cells.end())
                w = std::max(w, it->second.size());
        }
        widths.push_back(w);
    }
    os << std::string(label_width, ' ');
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << "  " << std::string(widths[i] - t.columns[i].size(), ' ') << t.columns[i];
    os << '\n';
    for (const TableRow& row : t.rows) {
        os << row.label << std::string(label_width - row.label.size(), ' ');
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            auto it = row.cells.find(t.columns[i]);
            const std::string cell = it == row.cells.end() ? "" : it->second;
            os << "  " << std::string(widths[i] - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
}

struct TextRenderer {
    std::ostream& os;

    void operator()(const BoardSnapshot& s) const { render_board_snapshot(os, s); }
    void operator()(const TableRows& t) const { render_table(os, t); }
    void operator()(const Binding& b) const { os << b.name << " = " << b.value.str() << '\n'; }
    void operator()(const Note& n) const {
        if (!n.text.empty())
            os << n.text << '\n';
    }
};

Json payload_to_json(const StepPayload& payload) {
    Json j;
    if (const auto* s = std::get_if<BoardSnapshot>(&payload)) {
        j["kind"] = "board";
        j["upper"] = s->upper;
        j["upper_indent"] = s->upper_indent;
        j["board"] = board_to_json(s->board);
        j["multiplier"] = board_to_json(s->multiplier);
        j["shift"] = s->shift;
    } else if (const auto* t = std::get_if<TableRows>(&payload)) {
        j["kind"] = "table";
        j["columns"] = t->columns;
        Json rows = Json::array();
        for (const TableRow& row : t->rows) {
            Json r;
            r["label"] = row.label;
            Json cells = Json::object();
            for (const auto& [col, cell] : row.cells)
                cells[col] = cell;
            r["cells"] = cells;
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
    } else if (const auto* b = std::get_if<Binding>(&payload)) {
        j["kind"] = "binding";
        j["name"] = b->name;
        j["value"] = quantity_to_json(b->value);
    } else {
        j["kind"] = "note";
        j["text"] = std::get<Note>(payload).text;
    }
    return j;
}

StepPayload payload_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "board") {
        BoardSnapshot s;
        s.upper = j.at("upper").get<std::string>();
        s.upper_indent = j.at("upper_indent").get<int>();
        s.board = board_from_json(j.at("board"));
        s.multiplier = board_from_json(j.at("multiplier"));
        s.shift = j.at("shift").get<int>();
        return s;
    }
    if (kind == "table") {
        TableRows t;
        t.columns = j.at("columns").get<std::vector<std::string>>();
        for (const auto& r : j.at("rows")) {
            TableRow row;
            row.label = r.at("label").get<std::string>();
            for (const auto& [col, cell] : r.at("cells").items())
                row.cells[col] = cell.get<std::string>();
            t.rows.push_back(std::move(row));
        }
        return t;
    }
    if (kind == "binding") {
        Binding b;
        b.name = j.at("name").get<std::string>();
        b.value = quantity_from_json(j.at("value"));
        return b;
    }
    if (kind == "note")
        return Note{j.at("text").get<std::string>()};
    throw Error("unknown trace step kind '" + kind + "'");
}

} // namespace

std::string render_trace(const Trace& trace, TraceFormat format) {
    if (format == TraceFormat::Structured)
        return trace_to_json(trace).dump(2);
    std::ostringstream os;
    os << trace.algorithm() << '\n';
    for (const Step& step : trace.steps()) {
        os << "step " << step.index;
        if (!step.label.empty())
            os << ": " << step.label;
        os << '\n';
        std::visit(TextRenderer{os}, step.payload);
    }
    return os.str();
}

Json trace_to_json(const Trace& trace) {
    Json j;
    j["schema"] = "1";
    j["algorithm"] = trace.algorithm();
    Json steps = Json::array();
    for (const Step& step : trace.steps()) {
        Json s;
        s["index"] = step.index;
        s["label"] = step.label;
        s["payload"] = payload_to_json(step.payload);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j;
}

Trace trace_from_json(const Json& j) {
    if (j.at("schema").get<std::string>() != "1")
        throw Error("unsupported trace schema");
    Trace trace(j.at("algorithm").get<std::string>());
    for (const auto& s : j.at("steps")) {
        Step& step = trace.add(s.at("label").get<std::string>(), payload_from_json(s.at("payload")));
        if (step.index != s.at("index").get<int>())
            throw Error("trace step indices must be contiguous from 1");
    }
    return trace;
}

Trace trace_from_json_text(const std::string& text) {
    return trace_from_json(Json::parse(text));
}

} // namespace dixit
