#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "dixit/quantity.hpp"

namespace dixit {

// One position of a decimal numeral: a digit 1..9, or the ring marking an
// empty place. A position never holds more than 9 nor less than 1 otherwise.
class Cell {
public:
    static Cell ring() { return Cell(0); }
    static Cell digit(int d);
    // 0 becomes the ring, 1..9 a digit.
    static Cell from_value(int v);

    bool is_ring() const { return value_ == 0; }
    int digit() const; // pre: !is_ring()
    int contribution() const { return value_; }

    bool operator==(const Cell&) const = default;

private:
    explicit Cell(int v) : value_(v) {}
    int value_ = 0;
};

enum class BoardStyle { Ascii, RingGlyph };

// A positional decimal numeral, most significant cell first. Algorithms may
// hold widened working copies with leading rings; canonicalization (stripping
// them) happens only at render and compare boundaries.
class DigitBoard {
public:
    DigitBoard() : cells_{Cell::ring()} {} // the nothing-board
    explicit DigitBoard(std::vector<Cell> cells);

    static DigitBoard of_value(const mpz_class& n); // n >= 0

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    const Cell& at(std::size_t i) const { return cells_[i]; }

    mpz_class value() const;
    bool is_nothing() const { return value() == 0; }

    // Leading rings stripped; a zero-valued board collapses to the single ring.
    DigitBoard canonical() const;

    bool operator==(const DigitBoard& other) const;

private:
    std::vector<Cell> cells_;
};

// '0' and the ring glyph 'O' both parse to a ring; leading rings are rejected
// except for the single-ring board itself.
DigitBoard parse_board(std::string_view text);

std::string render_board(const DigitBoard& board, BoardStyle style);

// Raw cell rendering without canonicalization; used by trace displays that
// keep the working board's fixed width.
std::string render_cells(const DigitBoard& board, BoardStyle style);

mpz_class board_value(const DigitBoard& board);
DigitBoard board_of_value(const mpz_class& n);

Json board_to_json(const DigitBoard& board);
DigitBoard board_from_json(const Json& j);

} // namespace dixit
