#include "dixit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace dixit {

Polynomial Polynomial::constant(const Quantity& c) { return term(0, c); }

Polynomial Polynomial::term(int degree, const Quantity& coeff) {
    Polynomial p;
    p.set_coeff(degree, coeff);
    return p;
}

void Polynomial::set_coeff(int degree, const Quantity& coeff) {
    if (degree < 0)
        throw Error("polynomial degrees are nonnegative");
    if (coeff.is_nothing())
        coeffs_.erase(degree);
    else
        coeffs_[degree] = coeff;
}

Quantity Polynomial::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Quantity::nothing() : it->second;
}

std::optional<int> Polynomial::degree() const {
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.rbegin()->first;
}

int Polynomial::lowest_degree() const {
    if (coeffs_.empty())
        throw Error("the zero polynomial has no terms");
    return coeffs_.begin()->first;
}

Quantity Polynomial::leading_coeff() const {
    if (coeffs_.empty())
        throw Error("the zero polynomial has no leading coefficient");
    return coeffs_.rbegin()->second;
}

Quantity Polynomial::evaluate(const Quantity& x) const {
    // Horner over the stored terms, highest degree first
    Quantity acc;
    int last_degree = 0;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (first) {
            acc = it->second;
            last_degree = it->first;
            first = false;
            continue;
        }
        for (int i = it->first; i < last_degree; ++i)
            acc = acc * x;
        acc = acc + it->second;
        last_degree = it->first;
    }
    if (first)
        return Quantity::nothing();
    for (int i = 0; i < last_degree; ++i)
        acc = acc * x;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [deg, c] : other.coeffs_)
        out.set_coeff(deg, out.coeff(deg) + c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [deg, c] : other.coeffs_)
        out.set_coeff(deg, out.coeff(deg) - c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [da, ca] : coeffs_)
        for (const auto& [db, cb] : other.coeffs_)
            out.set_coeff(da + db, out.coeff(da + db) + ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [deg, c] : coeffs_)
        out.set_coeff(deg, -c);
    return out;
}

std::string canonical_degree_name(int degree) {
    if (degree < 0)
        throw Error("degrees are nonnegative");
    if (degree == 0)
        return "units";
    if (degree == 1)
        return "r";
    std::string name;
    int rest = degree;
    switch (rest % 3) {
    case 2: name = "d"; rest -= 2; break;
    case 1: name = "dd"; rest -= 4; break;
    default: break;
    }
    if (rest < 0)
        throw Error("no canonical name for degree " + std::to_string(degree));
    name.append(rest / 3, 'c');
    return name;
}

int degree_name_exponent(std::string_view letters) {
    if (letters == "units")
        return 0;
    if (letters.empty())
        throw UnknownLetter("empty degree name", 0);
    int exponent = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
        case 'r': exponent += 1; break;
        case 'd': exponent += 2; break;
        case 'c': exponent += 3; break;
        default:
            throw UnknownLetter(std::string("unknown degree letter '") + letters[i] + "'", i);
        }
    }
    return exponent;
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;
    Notation notation;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() const { return text[pos]; }

    mpz_class parse_integer() {
        skip_ws();
        const std::size_t start = pos;
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty())
            throw SyntaxError("expected a number", start);
        return mpz_class(digits);
    }

    // integer or integer/integer
    mpq_class parse_rational() {
        mpq_class value(parse_integer());
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            const std::size_t dpos = pos;
            mpz_class den = parse_integer();
            if (den == 0)
                throw SyntaxError("zero denominator", dpos);
            value /= mpq_class(den);
        }
        return value;
    }

    // returns (degree, coefficient)
    std::pair<int, mpq_class> parse_term() {
        skip_ws();
        const std::size_t start = pos;
        bool have_coeff = false;
        mpq_class coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_rational();
            have_coeff = true;
        }
        skip_ws();
        int degree = 0;
        bool have_body = false;
        if (notation == Notation::Modern) {
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                have_body = true;
                degree = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    const std::size_t epos = pos;
                    const mpz_class e = parse_integer();
                    if (e > 1000000)
                        throw SyntaxError("exponent too large", epos);
                    degree = static_cast<int>(e.get_si());
                }
            } else if (pos < text.size() &&
                       std::isalpha(static_cast<unsigned char>(text[pos]))) {
                throw SyntaxError("modern notation uses the indeterminate 'x'", pos);
            }
        } else {
            int exponent = 0;
            while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
                const char ch = text[pos];
                switch (ch) {
                case 'r': exponent += 1; break;
                case 'd': exponent += 2; break;
                case 'c': exponent += 3; break;
                default:
                    throw UnknownLetter(std::string("unknown degree letter '") + ch + "'", pos);
                }
                ++pos;
                have_body = true;
            }
            degree = have_body ? exponent : 0;
        }
        if (!have_coeff && !have_body)
            throw SyntaxError("expected a term", start);
        return {degree, coeff};
    }

    Polynomial parse() {
        Polynomial p;
        if (at_end())
            throw SyntaxError("empty polynomial", pos);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            skip_ws();
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                throw SyntaxError("expected '+' or '-' between terms", pos);
            }
            auto [degree, coeff] = parse_term();
            p.set_coeff(degree, p.coeff(degree) + Quantity::from_signed(sign * coeff));
            first = false;
        }
        return p;
    }
};

std::string coefficient_text(const mpq_class& magnitude) {
    return magnitude.get_str();
}

std::string term_text(int degree, const Quantity& coeff, Notation notation) {
    const mpq_class mag = coeff.magnitude();
    if (degree == 0)
        return coefficient_text(mag);
    std::string body;
    if (notation == Notation::Modern)
        body = degree == 1 ? "x" : "x^" + std::to_string(degree);
    else
        body = canonical_degree_name(degree);
    if (mag == 1)
        return body;
    return coefficient_text(mag) + body;
}

} // namespace

Polynomial parse_poly(std::string_view text, Notation notation) {
    PolyParser parser{text, 0, notation};
    return parser.parse();
}

std::string render_poly(const Polynomial& p, Notation notation) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        const auto& [degree, coeff] = *it;
        if (out.empty())
            out += coeff.is_deficient() ? "-" : "";
        else
            out += coeff.is_deficient() ? " - " : " + ";
        out += term_text(degree, coeff, notation);
    }
    return out;
}

namespace {

std::string ordinal(std::size_t n) {
    static const char* names[] = {"First",  "Second",   "Third",  "Fourth",
                                  "Fifth",  "Sixth",    "Seventh", "Eighth",
                                  "Ninth",  "Tenth",    "Eleventh", "Twelfth"};
    if (n >= 1 && n <= 12)
        return names[n - 1];
    return std::to_string(n) + "th";
}

// cells for every column of the span [hi..lo], zeros included
std::map<std::string, std::string> span_cells(const Polynomial& p, int hi, int lo) {
    std::map<std::string, std::string> cells;
    for (int deg = hi; deg >= lo; --deg) {
        const Quantity c = p.coeff(deg);
        cells[canonical_degree_name(deg)] = c.is_nothing() ? "0" : c.str();
    }
    return cells;
}

std::map<std::string, std::string> term_cells(const Polynomial& p) {
    std::map<std::string, std::string> cells;
    for (const auto& [deg, c] : p.coefficients())
        cells[canonical_degree_name(deg)] = c.str();
    return cells;
}

TableRow poly_row(const std::string& label, const Polynomial& p, int hi) {
    if (p.is_zero())
        return {label, {{canonical_degree_name(hi), "0"}}};
    return {label, span_cells(p, hi, p.lowest_degree())};
}

} // namespace

DivisionResult divide_tabular(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero())
        throw DivisionByZeroPolynomial("cannot divide by the zero polynomial");

    Trace table("tabular-division");
    const int div_deg = *divisor.degree();
    const int top = std::max(dividend.degree().value_or(0), div_deg);
    std::vector<std::string> columns;
    for (int deg = top; deg >= 0; --deg)
        columns.push_back(canonical_degree_name(deg));

    const TableRow divisor_row = poly_row("divisor", divisor, div_deg);

    TableRows setup;
    setup.columns = columns;
    setup.rows.push_back({"quotient", {}});
    if (dividend.is_zero())
        setup.rows.push_back({"dividend", {{canonical_degree_name(0), "0"}}});
    else
        setup.rows.push_back(poly_row("dividend", dividend, *dividend.degree()));
    setup.rows.push_back(divisor_row);
    table.add("layout", std::move(setup));

    Polynomial quotient;
    Polynomial remainder = dividend;
    std::size_t step = 0;
    while (!remainder.is_zero() && *remainder.degree() >= div_deg) {
        ++step;
        const int prev_lead = *remainder.degree();
        const std::string lead_text =
            render_poly(Polynomial::term(prev_lead, remainder.leading_coeff()),
                        Notation::Medieval);
        const Quantity factor = remainder.leading_coeff() / divisor.leading_coeff();
        const int term_degree = prev_lead - div_deg;
        const Polynomial term = Polynomial::term(term_degree, factor);
        quotient = quotient + term;
        remainder = remainder - term * divisor;

        TableRows rows;
        rows.columns = columns;
        rows.rows.push_back({"quotient", term_cells(quotient)});
        rows.rows.push_back(poly_row(ordinal(step) + " Remainder", remainder, prev_lead));
        rows.rows.push_back(divisor_row);
        table.add("divide " + lead_text + " by " +
                      render_poly(Polynomial::term(div_deg, divisor.leading_coeff()),
                                  Notation::Medieval) +
                      ": quotient term " + render_poly(term, Notation::Medieval),
                  std::move(rows));
    }
    return {std::move(quotient), std::move(remainder), std::move(table)};
}

namespace {

std::string medieval(const Polynomial& p) { return render_poly(p, Notation::Medieval); }

} // namespace

SqrtResult sqrt_poly(const Polynomial& p) {
    if (p.is_zero())
        throw Error("sqrt_poly requires a nonzero polynomial");

    Trace trace("polynomial-square-root");
    const int lead_deg = *p.degree();
    if (lead_deg % 2 != 0)
        throw NotPerfectSquare("the highest-rank term has odd degree", p);
    const Quantity lead = p.leading_coeff();
    const auto lead_root = lead.is_augmented() ? exact_sqrt(lead.magnitude()) : std::nullopt;
    if (!lead_root)
        throw NotPerfectSquare("the highest-rank coefficient has no rational square root", p);

    const int half = lead_deg / 2;
    Polynomial root = Polynomial::term(half, Quantity::from_signed(*lead_root));
    const Quantity twice_lead = root.leading_coeff() + root.leading_coeff();
    Polynomial remainder = p - root * root;

    trace.add_note("highest rank",
                   "the root of " + term_text(lead_deg, lead, Notation::Medieval) + " is " +
                       medieval(root));
    trace.add_note("partial root", medieval(root));
    trace.add_note("remainder", remainder.is_zero() ? "0" : medieval(remainder));

    while (!remainder.is_zero()) {
        const int rdeg = *remainder.degree();
        if (rdeg < half)
            throw NotPerfectSquare("a remainder of too low a rank is left over", remainder);
        const Quantity a_coeff = remainder.leading_coeff() / twice_lead;
        const Polynomial a = Polynomial::term(rdeg - half, a_coeff);
        const Polynomial subtracted = a * root + a * root + a * a;
        remainder = remainder - subtracted;
        root = root + a;
        trace.add_note("next term", "the greatest fitting quantity is " + medieval(a) +
                                        "; subtract " + medieval(subtracted));
        trace.add_note("partial root", medieval(root));
        trace.add_note(remainder.is_zero() ? "nothing remains" : "remainder",
                       remainder.is_zero() ? "0" : medieval(remainder));
    }
    return {std::move(root), std::move(trace)};
}

Json poly_to_json(const Polynomial& p) {
    Json j = Json::object();
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
        j[std::to_string(it->first)] = quantity_to_json(it->second);
    return j;
}

Polynomial poly_from_json(const Json& j) {
    Polynomial p;
    for (const auto& [key, value] : j.items())
        p.set_coeff(std::stoi(key), quantity_from_json(value));
    return p;
}

} // namespace dixit
