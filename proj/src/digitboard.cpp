#include "dixit/digitboard.hpp"

#include <algorithm>

namespace dixit {

Cell Cell::digit(int d) {
    if (d < 1 || d > 9)
        throw Error("a digit cell must hold 1..9");
    return Cell(d);
}

Cell Cell::from_value(int v) {
    if (v < 0 || v > 9)
        throw Error("a cell value must be 0..9");
    return Cell(v);
}

int Cell::digit() const {
    if (is_ring())
        throw Error("the ring is not a digit");
    return value_;
}

DigitBoard::DigitBoard(std::vector<Cell> cells) : cells_(std::move(cells)) {
    if (cells_.empty())
        throw Error("a board needs at least one cell");
}

DigitBoard DigitBoard::of_value(const mpz_class& n) {
    if (n < 0)
        throw Error("boards hold nonnegative values");
    if (n == 0)
        return DigitBoard{};
    const std::string digits = n.get_str();
    std::vector<Cell> cells;
    cells.reserve(digits.size());
    for (char ch : digits)
        cells.push_back(Cell::from_value(ch - '0'));
    return DigitBoard(std::move(cells));
}

mpz_class DigitBoard::value() const {
    mpz_class v = 0;
    for (const Cell& c : cells_)
        v = v * 10 + c.contribution();
    return v;
}

DigitBoard DigitBoard::canonical() const {
    auto first = std::find_if(cells_.begin(), cells_.end(),
                              [](const Cell& c) { return !c.is_ring(); });
    if (first == cells_.end())
        return DigitBoard{};
    return DigitBoard(std::vector<Cell>(first, cells_.end()));
}

bool DigitBoard::operator==(const DigitBoard& other) const {
    return canonical().cells() == other.canonical().cells();
}

DigitBoard parse_board(std::string_view text) {
    if (text.empty())
        throw EmptyInput("empty numeral", 0);
    std::vector<Cell> cells;
    cells.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '0' || ch == 'O')
            cells.push_back(Cell::ring());
        else if (ch >= '1' && ch <= '9')
            cells.push_back(Cell::digit(ch - '0'));
        else
            throw InvalidCharacter(std::string("invalid character '") + ch + "' in numeral", i);
    }
    if (cells.front().is_ring() && cells.size() > 1)
        throw NonCanonicalLeadingRing("a numeral must not start with a ring", 0);
    return DigitBoard(std::move(cells));
}

std::string render_cells(const DigitBoard& board, BoardStyle style) {
    std::string out;
    out.reserve(board.size());
    for (const Cell& c : board.cells()) {
        if (c.is_ring())
            out += style == BoardStyle::RingGlyph ? 'O' : '0';
        else
            out += static_cast<char>('0' + c.digit());
    }
    return out;
}

std::string render_board(const DigitBoard& board, BoardStyle style) {
    return render_cells(board.canonical(), style);
}

mpz_class board_value(const DigitBoard& board) { return board.value(); }

DigitBoard board_of_value(const mpz_class& n) { return DigitBoard::of_value(n); }

Json board_to_json(const DigitBoard& board) {
    Json j = Json::array();
    for (const Cell& c : board.cells()) {
        if (c.is_ring())
            j.push_back("ring");
        else
            j.push_back(c.digit());
    }
    return j;
}

DigitBoard board_from_json(const Json& j) {
    std::vector<Cell> cells;
    cells.reserve(j.size());
    for (const auto& item : j) {
        if (item.is_string()) {
            if (item.get<std::string>() != "ring")
                throw Error("unknown cell value in board serialization");
            cells.push_back(Cell::ring());
        } else {
            cells.push_back(Cell::digit(item.get<int>()));
        }
    }
    return DigitBoard(std::move(cells));
}

} // namespace dixit
