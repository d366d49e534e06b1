#pragma once

#include <optional>

#include "dixit/polynomial.hpp"
#include "dixit/quantity.hpp"
#include "dixit/surd.hpp"

namespace dixit::oracle {

// Independent modern reference implementations. They share the domain types
// with the rest of the library but none of its algorithm code, so the CLI's
// --verify flag and the test suites can cross-check every result.

// Schoolbook digit-array product; no code shared with the board algorithms.
mpz_class oracle_mul_int(const mpz_class& a, const mpz_class& b); // a, b >= 0

// Plain signed-rational arithmetic, the modern reading of the sign rule.
Quantity oracle_mul(const Quantity& a, const Quantity& b);
Quantity oracle_div(const Quantity& a, const Quantity& b); // throws DivisionByNothing
Quantity oracle_add(const Quantity& a, const Quantity& b);
Quantity oracle_sub(const Quantity& a, const Quantity& b);

struct PolyDivmod {
    Polynomial quotient;
    Polynomial remainder;
};

// Dense-array long division, distinct from the tabular stepping.
PolyDivmod oracle_poly_divmod(const Polynomial& dividend, const Polynomial& divisor);

// Exhaustive search over integer term multisets of two to five terms, each
// term at most `bound`, whose square equals the expression. Enumeration is by
// term count first, then lexicographic; returns the first match.
std::optional<SurdSum> oracle_denest_search(const SurdExpression& e, int bound);

} // namespace dixit::oracle
