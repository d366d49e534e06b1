#include "dixit/quantity.hpp"

namespace dixit {

Quantity Quantity::augmented(mpq_class magnitude) {
    magnitude.canonicalize();
    if (sgn(magnitude) <= 0)
        throw Error("an augmented quantity needs a positive magnitude");
    return Quantity(std::move(magnitude));
}

Quantity Quantity::deficient(mpq_class magnitude) {
    magnitude.canonicalize();
    if (sgn(magnitude) <= 0)
        throw Error("a deficient quantity needs a positive magnitude");
    return Quantity(mpq_class(-magnitude));
}

Quantity Quantity::from_signed(mpq_class value) {
    value.canonicalize();
    return Quantity(std::move(value));
}

Quantity Quantity::integer(long n) { return Quantity(mpq_class(n)); }

Quantity Quantity::fraction(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return Quantity(std::move(v));
}

Polarity Quantity::polarity() const {
    const int s = sgn(value_);
    if (s == 0)
        return Polarity::Nothing;
    return s > 0 ? Polarity::Augmented : Polarity::Deficient;
}

std::string Quantity::str() const {
    if (is_nothing())
        return "nothing";
    return value_.get_str();
}

Quantity mul(const Quantity& a, const Quantity& b) {
    // anything multiplied by nothing is nothing
    if (a.is_nothing() || b.is_nothing())
        return Quantity::nothing();
    const bool deficient = a.is_deficient() != b.is_deficient();
    mpq_class magnitude = a.magnitude() * b.magnitude();
    return deficient ? Quantity::deficient(std::move(magnitude))
                     : Quantity::augmented(std::move(magnitude));
}

Quantity div(const Quantity& a, const Quantity& b) {
    if (b.is_nothing())
        throw DivisionByNothing("cannot divide by nothing");
    if (a.is_nothing())
        return Quantity::nothing();
    const bool deficient = a.is_deficient() != b.is_deficient();
    mpq_class magnitude = a.magnitude() / b.magnitude();
    return deficient ? Quantity::deficient(std::move(magnitude))
                     : Quantity::augmented(std::move(magnitude));
}

Quantity add(const Quantity& a, const Quantity& b) {
    return Quantity::from_signed(a.signed_value() + b.signed_value());
}

Quantity sub(const Quantity& a, const Quantity& b) {
    return Quantity::from_signed(a.signed_value() - b.signed_value());
}

Quantity operator-(const Quantity& a) {
    return Quantity::from_signed(mpq_class(-a.signed_value()));
}

Comparison deficiency_compare(const Quantity& a, const Quantity& b) {
    if (!a.is_deficient() || !b.is_deficient())
        throw NotDeficient("deficiency_compare requires two deficient quantities");
    const int c = cmp(a.magnitude(), b.magnitude());
    if (c > 0)
        return Comparison::FirstGreater;
    if (c < 0)
        return Comparison::SecondGreater;
    return Comparison::Equal;
}

Comparison compare(const Quantity& a, const Quantity& b) {
    const int c = cmp(a.signed_value(), b.signed_value());
    if (c > 0)
        return Comparison::FirstGreater;
    if (c < 0)
        return Comparison::SecondGreater;
    return Comparison::Equal;
}

ParityKind classify_parity(const mpz_class& n) {
    if (n < 1)
        throw Error("classify_parity requires a positive integer");
    if (n == 1)
        return ParityKind::Unit;
    if (mpz_odd_p(n.get_mpz_t()))
        return ParityKind::Odd;
    const unsigned long k = mpz_scan1(n.get_mpz_t(), 0); // n = 2^k * m, m odd
    mpz_class m = n >> k;
    if (m == 1)
        return ParityKind::EvenlyEven;
    return k == 1 ? ParityKind::EvenlyOdd : ParityKind::OddlyEven;
}

std::string_view to_string(ParityKind kind) {
    switch (kind) {
    case ParityKind::Unit: return "unit";
    case ParityKind::Odd: return "odd";
    case ParityKind::EvenlyEven: return "evenly-even";
    case ParityKind::EvenlyOdd: return "evenly-odd";
    case ParityKind::OddlyEven: return "oddly-even";
    }
    return "";
}

std::string_view to_string(Polarity polarity) {
    switch (polarity) {
    case Polarity::Augmented: return "augmented";
    case Polarity::Deficient: return "deficient";
    case Polarity::Nothing: return "nothing";
    }
    return "";
}

std::optional<mpq_class> exact_sqrt(const mpq_class& v) {
    if (sgn(v) < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(v.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(v.get_den().get_mpz_t()))
        return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), v.get_den().get_mpz_t());
    return mpq_class(num, den);
}

Json quantity_to_json(const Quantity& q) {
    Json j;
    j["num"] = q.numerator().get_str();
    j["den"] = q.denominator().get_str();
    j["polarity"] = std::string(to_string(q.polarity()));
    return j;
}

Quantity quantity_from_json(const Json& j) {
    const std::string polarity = j.at("polarity").get<std::string>();
    if (polarity == "nothing")
        return Quantity::nothing();
    if (polarity != "augmented" && polarity != "deficient")
        throw Error("unknown polarity '" + polarity + "'");
    mpq_class magnitude(mpz_class(j.at("num").get<std::string>()),
                        mpz_class(j.at("den").get<std::string>()));
    magnitude.canonicalize();
    if (polarity == "deficient")
        return Quantity::deficient(std::move(magnitude));
    return Quantity::augmented(std::move(magnitude));
}

} // namespace dixit
