#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dixit/quantity.hpp"
#include "dixit/trace.hpp"

namespace dixit {

// Exact-coefficient univariate polynomial, kept as a map from degree to
// coefficient. Zero coefficients are never stored; the zero polynomial has an
// empty map and no degree.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(const Quantity& c);
    static Polynomial term(int degree, const Quantity& coeff);

    void set_coeff(int degree, const Quantity& coeff);
    Quantity coeff(int degree) const;
    const std::map<int, Quantity>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    int lowest_degree() const; // pre: !is_zero()
    Quantity leading_coeff() const; // pre: !is_zero()

    Quantity evaluate(const Quantity& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

private:
    std::map<int, Quantity> coeffs_;
};

enum class Notation { Modern, Medieval };

// Modern notation reads terms like "-80x^5 + 20x + 9"; medieval notation reads
// "4dcc + 12ddc + ... + 30r + 9" where a term's degree is the sum of its
// letter weights (r=1, d=2, c=3) in any letter order.
Polynomial parse_poly(std::string_view text, Notation notation);

// Canonical degree names in medieval mode, descending degree, deficient
// coefficients with a leading minus.
std::string render_poly(const Polynomial& p, Notation notation);

// Canonical names: 0 -> "units", 1 -> "r", and for n >= 2 the shortest r-free
// spelling: cc = 6, dc = 5, dd = 4, ddc = 7, dcc = 8, ...
std::string canonical_degree_name(int degree);
int degree_name_exponent(std::string_view letters); // throws UnknownLetter

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
    Trace table;
};

// Tabular long division: each step divides the leading remainder term by the
// leading divisor term, placing the quotient term in its degree column. The
// table keeps a fixed column header from the highest degree down to units and
// labels remainder rows "First Remainder", "Second Remainder", ...
// Stops when the remainder is zero or of lower degree than the divisor.
DivisionResult divide_tabular(const Polynomial& dividend, const Polynomial& divisor);

class NotPerfectSquare : public Error {
public:
    NotPerfectSquare(const std::string& message, Polynomial last_remainder)
        : Error(message), last_remainder_(std::move(last_remainder)) {}

    const Polynomial& last_remainder() const { return last_remainder_; }

private:
    Polynomial last_remainder_;
};

struct SqrtResult {
    Polynomial root;
    Trace trace;
};

// Square root by the highest-rank-term method: take the root of the leading
// term, then repeatedly pick the next term A from leading(R)/(2 * leading root
// term) and subtract 2*A*partial + A*A, until nothing remains. The positive
// branch of the leading coefficient is chosen. Requires p nonzero.
SqrtResult sqrt_poly(const Polynomial& p);

Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

} // namespace dixit
