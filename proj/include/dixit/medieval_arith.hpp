#pragma once

#include "dixit/digitboard.hpp"
#include "dixit/quantity.hpp"
#include "dixit/trace.hpp"

namespace dixit {

// Working state of the in-place positional multiplication: the board being
// overwritten, the multiplier, its presentation shift, and the index of the
// multiplicand digit being processed (0 = most significant).
struct MultiplicationState {
    DigitBoard board;
    DigitBoard multiplier;
    int shift = 0;
    std::size_t stage = 0;
};

// After stage i with k unprocessed positions, value(board) must equal
// prefix_i * M * 10^k + suffix_i, where prefix_i is the number formed by the
// first i+1 multiplicand digits and suffix_i the remaining ones.
bool multiplication_stage_invariant(const DigitBoard& multiplicand,
                                    const DigitBoard& multiplier,
                                    const DigitBoard& stage_board,
                                    std::size_t stage);

bool multiplication_state_invariant(const MultiplicationState& state,
                                    const DigitBoard& multiplicand);

struct MultiplicationResult {
    DigitBoard product;
    Trace trace;
};

// In-place positional multiplication, most significant digit first: each stage
// multiplies one multiplicand digit by the whole multiplier, writes the product
// so that its units digit replaces the digit just used, and absorbs the
// overlap by column addition with carries running leftward. Ring digits
// multiply to nothing and leave the board untouched. The trace carries one
// board snapshot per stage.
MultiplicationResult multiply_indian(const DigitBoard& multiplicand,
                                     const DigitBoard& multiplier);

// Multiplication by duplication: the factor is decomposed into distinct powers
// of two, the multiplicand is doubled up a ladder, and the selected rows are
// summed. Never multiplies; only doubles and adds.
MultiplicationResult duplicate_multiply(const DigitBoard& multiplicand,
                                        const DigitBoard& factor);

struct DimidiationResult {
    Quantity quotient;
    Trace trace;
};

// Successive halvings; each step carries its integer part and the exact
// fractional remainder. Requires halvings >= 1.
DimidiationResult dimidiate(const DigitBoard& board, unsigned halvings);

} // namespace dixit
