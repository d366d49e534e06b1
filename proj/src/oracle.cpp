#include "dixit/oracle.hpp"

#include <string>
#include <vector>

namespace dixit::oracle {

mpz_class oracle_mul_int(const mpz_class& a, const mpz_class& b) {
    if (a < 0 || b < 0)
        throw Error("oracle_mul_int takes nonnegative integers");
    if (a == 0 || b == 0)
        return 0;
    const std::string sa = a.get_str();
    const std::string sb = b.get_str();
    std::vector<int> da(sa.rbegin(), sa.rend());
    std::vector<int> db(sb.rbegin(), sb.rend());
    for (int& d : da)
        d -= '0';
    for (int& d : db)
        d -= '0';

    std::vector<int> out(da.size() + db.size(), 0);
    for (std::size_t i = 0; i < da.size(); ++i) {
        int carry = 0;
        for (std::size_t j = 0; j < db.size(); ++j) {
            const int cur = out[i + j] + da[i] * db[j] + carry;
            out[i + j] = cur % 10;
            carry = cur / 10;
        }
        std::size_t k = i + db.size();
        while (carry) {
            const int cur = out[k] + carry;
            out[k] = cur % 10;
            carry = cur / 10;
            ++k;
        }
    }
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    std::string digits;
    digits.reserve(out.size());
    for (auto it = out.rbegin(); it != out.rend(); ++it)
        digits += static_cast<char>('0' + *it);
    return mpz_class(digits);
}

Quantity oracle_mul(const Quantity& a, const Quantity& b) {
    return Quantity::from_signed(mpq_class(a.signed_value() * b.signed_value()));
}

Quantity oracle_div(const Quantity& a, const Quantity& b) {
    if (b.is_nothing())
        throw DivisionByNothing("cannot divide by nothing");
    return Quantity::from_signed(mpq_class(a.signed_value() / b.signed_value()));
}

Quantity oracle_add(const Quantity& a, const Quantity& b) {
    return Quantity::from_signed(mpq_class(a.signed_value() + b.signed_value()));
}

Quantity oracle_sub(const Quantity& a, const Quantity& b) {
    return Quantity::from_signed(mpq_class(a.signed_value() - b.signed_value()));
}

PolyDivmod oracle_poly_divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero())
        throw DivisionByZeroPolynomial("cannot divide by the zero polynomial");

    const int dd = *divisor.degree();
    std::vector<mpq_class> rem(dividend.degree().value_or(0) + 1, mpq_class(0));
    for (const auto& [deg, c] : dividend.coefficients())
        rem[deg] = c.signed_value();
    std::vector<mpq_class> div(dd + 1, mpq_class(0));
    for (const auto& [deg, c] : divisor.coefficients())
        div[deg] = c.signed_value();

    const int nd = static_cast<int>(rem.size()) - 1;
    std::vector<mpq_class> quot(nd >= dd ? nd - dd + 1 : 0, mpq_class(0));
    for (int i = nd; i >= dd; --i) {
        if (rem[i] == 0)
            continue;
        const mpq_class f = rem[i] / div[dd];
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] -= f * div[j];
    }

    PolyDivmod out;
    for (std::size_t i = 0; i < quot.size(); ++i)
        out.quotient.set_coeff(static_cast<int>(i), Quantity::from_signed(quot[i]));
    for (int i = 0; i < dd && i < static_cast<int>(rem.size()); ++i)
        out.remainder.set_coeff(i, Quantity::from_signed(rem[i]));
    return out;
}

namespace {

bool search_terms(const SurdExpression& e, int bound, std::size_t k, std::size_t from,
                  const mpq_class& budget, std::vector<Quantity>& picked,
                  std::optional<SurdSum>& found) {
    if (picked.size() == k) {
        SurdSum candidate(picked);
        if (expand_square(candidate) == e) {
            found = std::move(candidate);
            return true;
        }
        return false;
    }
    for (std::size_t m = from; m <= static_cast<std::size_t>(bound); ++m) {
        // the rational part of the square is at least the sum of the terms
        const long needed = static_cast<long>(m * (k - picked.size()));
        if (budget < needed)
            break;
        picked.push_back(Quantity::integer(static_cast<long>(m)));
        if (search_terms(e, bound, k, m, mpq_class(budget - static_cast<long>(m)), picked,
                         found))
            return true;
        picked.pop_back();
    }
    return false;
}

} // namespace

std::optional<SurdSum> oracle_denest_search(const SurdExpression& e, int bound) {
    if (bound < 1)
        return std::nullopt;
    const mpq_class budget = e.rational_part().signed_value();
    for (std::size_t k = 2; k <= 5; ++k) {
        std::vector<Quantity> picked;
        std::optional<SurdSum> found;
        if (search_terms(e, bound, k, 1, budget, picked, found))
            return found;
    }
    return std::nullopt;
}

} // namespace dixit::oracle
