#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dixit/quantity.hpp"
#include "dixit/trace.hpp"

namespace dixit {

// Decomposition of a square root: sqrt(radicand) = coefficient * sqrt(cls)
// with cls a squarefree integer; cls == 1 marks a rational root.
struct SurdClass {
    mpq_class coefficient;
    mpz_class cls;
};

SurdClass surd_class_of(const mpq_class& radicand); // radicand > 0

// A nonnegative rational plus a multiset of simple quadratic surds. Radicands
// whose root is rational are folded into the rational part at construction;
// the rest are kept exactly as written (no square-factor extraction), sorted
// increasing. Equality is arithmetic: two expressions are equal when their
// rational parts agree and, class by squarefree class, their combined surd
// coefficients agree (so s24 + s96 equals s216).
class SurdExpression {
public:
    SurdExpression(Quantity rational, std::vector<Quantity> radicands);

    const Quantity& rational_part() const { return rational_; }
    const std::vector<Quantity>& radicands() const { return radicands_; }

    // combined coefficient per squarefree class, sorted by class
    std::vector<std::pair<mpz_class, mpq_class>> class_profile() const;

    std::string str() const; // "16 + s24 + s40 + ..."

    bool operator==(const SurdExpression& other) const;

private:
    Quantity rational_;
    std::vector<Quantity> radicands_;
};

// A sum of simple surds: each term m means sqrt(m). Terms positive, sorted.
class SurdSum {
public:
    SurdSum() = default;
    explicit SurdSum(std::vector<Quantity> terms);

    const std::vector<Quantity>& terms() const { return terms_; }
    std::string str() const; // "s2 + s3 + s5 + s6"

    bool operator==(const SurdSum& other) const { return terms_ == other.terms_; }

private:
    std::vector<Quantity> terms_;
};

// (sum of sqrt(m_j))^2: the rational part collects every m_j plus any pairwise
// double product that happens to be rational; the rest become the radicands
// 4*m_i*m_j.
SurdExpression expand_square(const SurdSum& s);

struct DenestResult {
    SurdSum root;
    Trace trace;
};

// Finds a sum of simple surds whose square is exactly the given expression.
// The classical assignment is tried first (smallest surds pair the smallest
// term; the second term is bound as "the thing") and recorded in the trace;
// when it does not verify, an exhaustive matching of surds to term pairs takes
// over, for roots of up to five terms. Every returned root is re-squared and
// checked against the input before it is returned.
// Throws NotDenestable or AmbiguousTermCount.
DenestResult denest(const SurdExpression& e);

// CLI text form: "16 + s24 + s40" where sN is sqrt(N). No deficient parts.
SurdExpression parse_surd_expression(std::string_view text);

Json surd_expression_to_json(const SurdExpression& e);
Json surd_sum_to_json(const SurdSum& s);

} // namespace dixit
