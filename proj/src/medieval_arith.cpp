#include "dixit/medieval_arith.hpp"

#include <cassert>
#include <string>
#include <vector>

namespace dixit {

namespace {

mpz_class pow10(std::size_t k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

// least significant digit first; n >= 1
std::vector<int> digits_lsb(const mpz_class& n) {
    const std::string s = n.get_str();
    std::vector<int> d(s.rbegin(), s.rend());
    for (int& v : d)
        v -= '0';
    return d;
}

} // namespace

bool multiplication_state_invariant(const MultiplicationState& state,
                                    const DigitBoard& multiplicand) {
    return multiplication_stage_invariant(multiplicand, state.multiplier, state.board,
                                          state.stage);
}

bool multiplication_stage_invariant(const DigitBoard& multiplicand,
                                    const DigitBoard& multiplier,
                                    const DigitBoard& stage_board,
                                    std::size_t stage) {
    const DigitBoard canon = multiplicand.canonical();
    const auto& cells = canon.cells();
    if (stage >= cells.size())
        return false;
    const std::size_t k = cells.size() - 1 - stage;
    mpz_class prefix = 0, suffix = 0;
    for (std::size_t i = 0; i <= stage; ++i)
        prefix = prefix * 10 + cells[i].contribution();
    for (std::size_t i = stage + 1; i < cells.size(); ++i)
        suffix = suffix * 10 + cells[i].contribution();
    return stage_board.value() == prefix * multiplier.value() * pow10(k) + suffix;
}

MultiplicationResult multiply_indian(const DigitBoard& multiplicand,
                                     const DigitBoard& multiplier) {
    Trace trace("indian-multiplication");
    if (multiplicand.is_nothing() || multiplier.is_nothing())
        return {DigitBoard{}, std::move(trace)};

    const DigitBoard a = multiplicand.canonical();
    const DigitBoard b = multiplier.canonical();
    const mpz_class m_value = b.value();
    const std::string m_text = render_board(b, BoardStyle::Ascii);
    std::vector<Cell> working = a.cells();
    const std::size_t n = working.size();
    MultiplicationState state{a, b, 0, 0};

    for (std::size_t stage = 0; stage < n; ++stage) {
        const std::size_t k = n - 1 - stage; // unprocessed positions to the right
        std::size_t pos = working.size() - 1 - k;
        std::string upper;
        std::string label = "stage " + std::to_string(stage + 1);
        int upper_indent = 0;

        if (working[pos].is_ring()) {
            label += ": ring digit, its product is nothing";
        } else {
            const int d = working[pos].digit();
            label += ": multiply " + std::to_string(d) + " by " + m_text;
            const mpz_class t = d * m_value;
            const std::vector<int> tl = digits_lsb(t);
            upper = t.get_str();

            // make room on the left for the product's higher digits
            const std::size_t need = tl.size() - 1;
            if (need > pos) {
                working.insert(working.begin(), need - pos, Cell::ring());
                pos = need;
            }
            // the units digit of the product replaces the digit just used
            working[pos] = Cell::from_value(tl[0]);
            upper_indent = static_cast<int>(pos - (tl.size() - 1));

            // absorb the remaining digits by column addition, carrying leftward
            bool grew_by_carry = false;
            int carry = 0;
            std::size_t cursor = pos;
            for (std::size_t off = 1; off < tl.size() || carry != 0; ++off) {
                const int incoming = (off < tl.size() ? tl[off] : 0) + carry;
                if (off >= tl.size() && incoming == 0)
                    break;
                if (cursor == 0) {
                    assert(off >= tl.size());
                    working.insert(working.begin(), Cell::ring());
                    ++cursor;
                    ++pos;
                    ++upper_indent;
                    grew_by_carry = true;
                }
                --cursor;
                const int sum = working[cursor].contribution() + incoming;
                carry = sum / 10;
                working[cursor] = Cell::from_value(sum % 10);
            }
            if (grew_by_carry)
                label += " (the board grew a place on the left)";
        }

        // the multiplier moves one place left after each stage but the last
        const std::size_t next_k = k > 0 ? k - 1 : 0;
        state.board = DigitBoard{working};
        state.stage = stage;
        state.shift = static_cast<int>(working.size()) - static_cast<int>(b.size()) -
                      static_cast<int>(next_k);
        assert(multiplication_state_invariant(state, a));

        BoardSnapshot snap;
        snap.upper = upper;
        snap.upper_indent = upper_indent;
        snap.board = state.board;
        snap.multiplier = state.multiplier;
        snap.shift = state.shift;
        trace.add(std::move(label), std::move(snap));
    }

    return {state.board.canonical(), std::move(trace)};
}

MultiplicationResult duplicate_multiply(const DigitBoard& multiplicand,
                                        const DigitBoard& factor) {
    Trace trace("duplication");
    if (multiplicand.is_nothing() || factor.is_nothing()) {
        trace.add_note("ring factor", "a ring in either place makes the whole product nothing");
        return {DigitBoard{}, std::move(trace)};
    }

    const mpz_class a = multiplicand.value();
    const mpz_class f = factor.value();

    // decomposition of the factor into distinct powers of two, greatest first
    std::string decomposition = f.get_str() + " =";
    const std::size_t bits = mpz_sizeinbase(f.get_mpz_t(), 2);
    bool first = true;
    for (std::size_t j = bits; j-- > 0;) {
        if (!mpz_tstbit(f.get_mpz_t(), j))
            continue;
        decomposition += (first ? " " : " + ") + mpz_class(mpz_class(1) << j).get_str();
        first = false;
    }
    trace.add_note("decomposition", decomposition);

    // doubling ladder; each row is the previous one added to itself
    mpz_class row = a;
    mpz_class sum = 0;
    for (std::size_t j = 0; j < bits; ++j) {
        if (j > 0)
            row += row;
        const bool kept = mpz_tstbit(f.get_mpz_t(), j) != 0;
        if (kept)
            sum += row;
        const mpz_class power = mpz_class(1) << j;
        trace.add_note("row " + power.get_str(),
                       power.get_str() + " x " + a.get_str() + " = " + row.get_str() +
                           (kept ? "  (kept)" : ""));
    }
    trace.add_note("sum", "the kept rows add up to " + sum.get_str());
    return {DigitBoard::of_value(sum), std::move(trace)};
}

DimidiationResult dimidiate(const DigitBoard& board, unsigned halvings) {
    if (halvings == 0)
        throw Error("dimidiate requires at least one halving");
    Trace trace("dimidiation");
    mpq_class v(board.value());
    for (unsigned i = 1; i <= halvings; ++i) {
        v /= 2;
        mpz_class integer_part = v.get_num() / v.get_den();
        mpq_class remainder = v - mpq_class(integer_part);
        std::string text;
        if (remainder == 0)
            text = integer_part.get_str();
        else if (integer_part == 0)
            text = remainder.get_str();
        else
            text = integer_part.get_str() + " + " + remainder.get_str();
        if (v == 0)
            text = "nothing";
        trace.add_note("halving " + std::to_string(i), text);
    }
    return {Quantity::from_signed(v), std::move(trace)};
}

} // namespace dixit
