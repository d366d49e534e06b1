#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "dixit/errors.hpp"

// vendored single-header nlohmann; pulled in once here so every module shares the alias
#include <json.hpp>

namespace dixit {

using Json = nlohmann::ordered_json;

// How a quantity counts in a sum: added in, missing from it, or not there at all.
enum class Polarity { Augmented, Deficient, Nothing };

// Exact rational scalar. Internally a signed reduced rational; the polarity is a
// derived view (negative = deficient, zero = nothing), never stored separately.
class Quantity {
public:
    Quantity() = default; // nothing

    static Quantity nothing() { return Quantity{}; }
    static Quantity augmented(mpq_class magnitude);
    static Quantity deficient(mpq_class magnitude);
    static Quantity from_signed(mpq_class value);
    static Quantity integer(long n);
    static Quantity fraction(long num, long den);

    Polarity polarity() const;
    bool is_nothing() const { return sgn(value_) == 0; }
    bool is_augmented() const { return sgn(value_) > 0; }
    bool is_deficient() const { return sgn(value_) < 0; }

    mpq_class magnitude() const { return abs(value_); }
    const mpq_class& signed_value() const { return value_; }
    mpz_class numerator() const { return abs(value_.get_num()); }
    mpz_class denominator() const { return value_.get_den(); }

    // "nothing", "3", "5/3"; deficient quantities take a leading minus.
    std::string str() const;

    bool operator==(const Quantity& other) const { return value_ == other.value_; }

private:
    explicit Quantity(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_{0};
};

// Multiplication and division follow the sign rule over magnitudes:
// deficient x deficient = augmented, deficient x augmented = deficient,
// and anything combined with nothing is nothing.
Quantity mul(const Quantity& a, const Quantity& b);
Quantity div(const Quantity& a, const Quantity& b); // throws DivisionByNothing
Quantity add(const Quantity& a, const Quantity& b);
Quantity sub(const Quantity& a, const Quantity& b);

inline Quantity operator*(const Quantity& a, const Quantity& b) { return mul(a, b); }
inline Quantity operator/(const Quantity& a, const Quantity& b) { return div(a, b); }
inline Quantity operator+(const Quantity& a, const Quantity& b) { return add(a, b); }
inline Quantity operator-(const Quantity& a, const Quantity& b) { return sub(a, b); }
Quantity operator-(const Quantity& a);

enum class Comparison { FirstGreater, SecondGreater, Equal };

// Orders deficient quantities by how much is missing: deficient 5 outranks
// deficient 1. Throws NotDeficient unless both arguments are deficient.
Comparison deficiency_compare(const Quantity& a, const Quantity& b);

// The modern signed order, provided separately from the deficiency order.
Comparison compare(const Quantity& a, const Quantity& b);

enum class ParityKind { Unit, Odd, EvenlyEven, EvenlyOdd, OddlyEven };

// Classification of positive integers: 1 is the unit; odd numbers > 1 are odd;
// 2^k is evenly-even; 2 * (odd > 1) is evenly-odd; 2^k * (odd > 1) with k >= 2
// is oddly-even. Requires n >= 1.
ParityKind classify_parity(const mpz_class& n);

std::string_view to_string(ParityKind kind);
std::string_view to_string(Polarity polarity);

// Exact square root of a nonnegative rational, when it has one.
std::optional<mpq_class> exact_sqrt(const mpq_class& v);

Json quantity_to_json(const Quantity& q);
Quantity quantity_from_json(const Json& j);

} // namespace dixit
