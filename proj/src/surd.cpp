#include "dixit/surd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace dixit {

namespace {

// n >= 1 as s^2 * f with f squarefree. Trial division up to 2^16; a leftover
// cofactor with no small factors is taken squarefree unless it is a square.
std::pair<mpz_class, mpz_class> squarefree_decompose(mpz_class n) {
    mpz_class s = 1, f = 1;
    mpz_class p = 2;
    while (p < 65536 && p * p <= n) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            for (unsigned i = 0; i < e / 2; ++i)
                s *= p;
            if (e % 2)
                f *= p;
        }
        p = p == 2 ? mpz_class(3) : mpz_class(p + 2);
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            s *= r;
        } else {
            f *= n;
        }
    }
    return {s, f};
}

std::string surd_text(const Quantity& radicand) { return "s" + radicand.str(); }

} // namespace

SurdClass surd_class_of(const mpq_class& radicand) {
    if (sgn(radicand) <= 0)
        throw Error("surd radicands must be positive");
    // sqrt(p/q) = sqrt(p*q)/q
    auto [s, f] = squarefree_decompose(radicand.get_num() * radicand.get_den());
    mpq_class coeff(s, radicand.get_den());
    coeff.canonicalize();
    return {coeff, f};
}

SurdExpression::SurdExpression(Quantity rational, std::vector<Quantity> radicands)
    : rational_(std::move(rational)) {
    if (rational_.is_deficient())
        throw Error("the rational part must not be deficient");
    for (Quantity& r : radicands) {
        if (!r.is_augmented())
            throw Error("surd radicands must be positive");
        const SurdClass c = surd_class_of(r.signed_value());
        if (c.cls == 1)
            rational_ = rational_ + Quantity::from_signed(c.coefficient);
        else
            radicands_.push_back(std::move(r));
    }
    std::sort(radicands_.begin(), radicands_.end(),
              [](const Quantity& a, const Quantity& b) {
                  return a.signed_value() < b.signed_value();
              });
}

std::vector<std::pair<mpz_class, mpq_class>> SurdExpression::class_profile() const {
    std::map<mpz_class, mpq_class> profile;
    for (const Quantity& r : radicands_) {
        const SurdClass c = surd_class_of(r.signed_value());
        profile[c.cls] += c.coefficient;
    }
    return {profile.begin(), profile.end()};
}

std::string SurdExpression::str() const {
    std::string out;
    if (!rational_.is_nothing() || radicands_.empty())
        out = rational_.is_nothing() ? "0" : rational_.str();
    for (const Quantity& r : radicands_) {
        if (!out.empty())
            out += " + ";
        out += surd_text(r);
    }
    return out;
}

bool SurdExpression::operator==(const SurdExpression& other) const {
    return rational_ == other.rational_ && class_profile() == other.class_profile();
}

SurdSum::SurdSum(std::vector<Quantity> terms) : terms_(std::move(terms)) {
    for (const Quantity& t : terms_)
        if (!t.is_augmented())
            throw Error("surd terms must be positive");
    std::sort(terms_.begin(), terms_.end(), [](const Quantity& a, const Quantity& b) {
        return a.signed_value() < b.signed_value();
    });
}

std::string SurdSum::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const Quantity& t : terms_) {
        if (!out.empty())
            out += " + ";
        out += surd_text(t);
    }
    return out;
}

SurdExpression expand_square(const SurdSum& s) {
    Quantity rational;
    std::vector<Quantity> radicands;
    const auto& terms = s.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        rational = rational + terms[i];
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            radicands.push_back(Quantity::integer(4) * terms[i] * terms[j]);
    }
    return SurdExpression(std::move(rational), std::move(radicands));
}

// ---------------------------------------------------------------------------
// denesting

namespace {

using Terms = std::vector<mpq_class>; // candidate term values, sorted

struct MergedClass {
    mpz_class cls;      // squarefree class
    mpq_class coeff;    // combined surd coefficient C
    mpq_class radicand; // C^2 * cls, the class total written as one surd
};

std::vector<MergedClass> merged_classes(const SurdExpression& e) {
    std::vector<MergedClass> out;
    for (const auto& [cls, coeff] : e.class_profile())
        out.push_back({cls, coeff, coeff * coeff * mpq_class(cls)});
    std::sort(out.begin(), out.end(), [](const MergedClass& a, const MergedClass& b) {
        return a.radicand < b.radicand;
    });
    return out;
}

SurdSum to_surd_sum(const Terms& terms) {
    std::vector<Quantity> qs;
    qs.reserve(terms.size());
    for (const mpq_class& t : terms)
        qs.push_back(Quantity::from_signed(t));
    return SurdSum(std::move(qs));
}

bool verify_root(const Terms& terms, const SurdExpression& e) {
    return expand_square(to_surd_sum(terms)) == e;
}

void add_candidate(std::set<Terms>& out, Terms terms) {
    for (const mpq_class& t : terms)
        if (sgn(t) <= 0)
            return;
    std::sort(terms.begin(), terms.end());
    out.insert(std::move(terms));
}

// u + v = R and 4uv = A
void two_term_candidates(const mpq_class& rational, const mpq_class& radicand,
                         std::set<Terms>& out) {
    const auto disc = exact_sqrt(rational * rational - radicand);
    if (!disc)
        return;
    const mpq_class u = (rational + *disc) / 2;
    const mpq_class v = (rational - *disc) / 2;
    if (sgn(v) > 0)
        add_candidate(out, {v, u});
}

// pairs (1,2) -> x, (1,3) -> y, (2,3) -> z determine the first term
std::optional<mpq_class> triangle_first_term(const mpq_class& x, const mpq_class& y,
                                             const mpq_class& z) {
    const auto m1 = exact_sqrt(x * y / (z * 4));
    if (!m1 || sgn(*m1) <= 0)
        return std::nullopt;
    return m1;
}

// Exhaustive matching of the given surd radicands to term pairs: three of them
// form the (1,2)/(1,3)/(2,3) triangle, the rest fill the (1,j) slots; every
// candidate is verified by re-squaring later.
void bijection_candidates(std::size_t k, const std::vector<mpq_class>& rads,
                          std::set<Terms>& out) {
    const std::size_t n = rads.size();
    if (n != k * (k - 1) / 2)
        return;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (l == i || l == j)
                    continue;
                const auto m1 = triangle_first_term(rads[i], rads[j], rads[l]);
                if (!m1)
                    continue;
                const mpq_class m2 = rads[i] / (*m1 * 4);
                const mpq_class m3 = rads[j] / (*m1 * 4);
                std::vector<std::size_t> rest;
                for (std::size_t w = 0; w < n; ++w)
                    if (w != i && w != j && w != l)
                        rest.push_back(w);
                if (k == 3) {
                    add_candidate(out, {*m1, m2, m3});
                } else if (k == 4) {
                    for (std::size_t w : rest)
                        add_candidate(out, {*m1, m2, m3, rads[w] / (*m1 * 4)});
                } else if (k == 5) {
                    for (std::size_t w1 : rest)
                        for (std::size_t w2 : rest) {
                            if (w2 == w1)
                                continue;
                            add_candidate(out, {*m1, m2, m3, rads[w1] / (*m1 * 4),
                                                rads[w2] / (*m1 * 4)});
                        }
                }
            }
        }
    }
}

// c1 + c2 = total and c1 * c2 = product, both positive
std::optional<std::pair<mpq_class, mpq_class>> split_coefficient(const mpq_class& total,
                                                                 const mpq_class& product) {
    const auto disc = exact_sqrt(total * total - product * 4);
    if (!disc)
        return std::nullopt;
    const mpq_class c1 = (total + *disc) / 2;
    const mpq_class c2 = (total - *disc) / 2;
    if (sgn(c2) <= 0)
        return std::nullopt;
    return std::make_pair(c1, c2);
}

// Four-term roots whose squares show only three distinct classes: when the
// product of the four terms is a perfect square, every disjoint term pair
// shares its class with the complementary pair, and each merged class has to
// be split back into its two cross products. The square root of the term
// product is scanned over the integers on an integer-scaled copy.
void split_class_candidates(const mpq_class& rational, const std::vector<MergedClass>& merged,
                            std::set<Terms>& out) {
    if (merged.size() != 3)
        return;

    mpz_class lambda(rational.get_den());
    for (const MergedClass& m : merged)
        mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), m.coeff.get_den().get_mpz_t());
    const mpq_class scale = mpq_class(lambda) * mpq_class(lambda);
    const mpq_class scaled_rational = rational * scale;

    std::vector<MergedClass> scaled;
    for (const MergedClass& m : merged)
        scaled.push_back({m.cls, m.coeff * scale, m.radicand * scale * scale});

    // the term product is at most (sum/4)^4, so its root is at most sum^2/16
    mpq_class bound_q = scaled_rational * scaled_rational / 16;
    mpz_class bound = bound_q.get_num() / bound_q.get_den();
    if (bound > 2000000)
        bound = 2000000;
    for (mpz_class sp = 1; sp <= bound; ++sp) {
        std::vector<mpq_class> rads;
        bool ok = true;
        for (const MergedClass& m : scaled) {
            const mpq_class product = mpq_class(sp) * 4 / mpq_class(m.cls);
            const auto split = split_coefficient(m.coeff, product);
            if (!split) {
                ok = false;
                break;
            }
            rads.push_back(split->first * split->first * mpq_class(m.cls));
            rads.push_back(split->second * split->second * mpq_class(m.cls));
        }
        if (!ok)
            continue;
        std::set<Terms> scaled_out;
        bijection_candidates(4, rads, scaled_out);
        for (const Terms& terms : scaled_out) {
            Terms descaled;
            descaled.reserve(terms.size());
            for (const mpq_class& t : terms)
                descaled.push_back(t / scale);
            add_candidate(out, std::move(descaled));
        }
    }
}

const char* const kTermNames[] = {"m", "n", "p", "q", "t"};

// The classical derivation: with terms in increasing order, the k-1 smallest
// surds pair the smallest term with each of the others and the next surd is
// the product of the second and third terms. The second term is bound as
// "the thing" r and everything else becomes a rational multiple of it.
bool try_historical(const SurdExpression& e, std::size_t k, Trace& trace, SurdSum& root) {
    const mpq_class rational = e.rational_part().signed_value();
    std::vector<mpq_class> a;
    a.reserve(e.radicands().size());
    for (const Quantity& r : e.radicands())
        a.push_back(r.signed_value());

    trace.add_note("term count", std::to_string(a.size()) +
                                     " surds are the doubled pairwise products of " +
                                     std::to_string(k) + " terms");

    if (k == 2) {
        std::set<Terms> out;
        two_term_candidates(rational, a[0], out);
        if (out.empty() || !verify_root(*out.begin(), e))
            return false;
        root = to_surd_sum(*out.begin());
        trace.add_note("two terms", "the terms sum to " + rational.get_str() +
                                        " and their product is " + mpq_class(a[0] / 4).get_str());
        trace.add_note("terms", "m = " + (*out.begin())[0].get_str() +
                                    ", n = " + (*out.begin())[1].get_str());
        return true;
    }

    // coefficients of r for each term, in term order m, n, p, ...
    std::vector<mpq_class> gamma(k);
    gamma[1] = 1;
    for (std::size_t j = 3; j <= k; ++j)
        gamma[j - 1] = a[j - 2] / a[0];
    gamma[0] = a[1] / a[k - 1];

    mpq_class gamma_sum = 0;
    for (const mpq_class& g : gamma)
        gamma_sum += g;
    if (sgn(gamma_sum) <= 0 || sgn(rational) <= 0)
        return false;
    const mpq_class r = rational / gamma_sum;

    Terms terms(k);
    for (std::size_t i = 0; i < k; ++i)
        terms[i] = gamma[i] * r;
    Terms sorted = terms;
    std::sort(sorted.begin(), sorted.end());
    if (!verify_root(sorted, e))
        return false;

    trace.add("the second term is bound as the thing",
              Binding{std::string(kTermNames[1]) + "/r", Quantity::integer(1)});
    for (std::size_t j = 3; j <= k; ++j)
        trace.add(std::string(kTermNames[j - 1]) + " = " + gamma[j - 1].get_str() + "r",
                  Binding{std::string(kTermNames[j - 1]) + "/r",
                          Quantity::from_signed(gamma[j - 1])});
    trace.add(std::string(kTermNames[0]) + " = " + gamma[0].get_str() + "r",
              Binding{std::string(kTermNames[0]) + "/r", Quantity::from_signed(gamma[0])});

    // the sum of the terms equals the rational part, cleared of denominators
    const mpz_class lhs = gamma_sum.get_num() * rational.get_den();
    const mpz_class rhs = rational.get_num() * gamma_sum.get_den();
    trace.add(lhs.get_str() + "r = " + rhs.get_str(), Binding{"r", Quantity::from_signed(r)});

    std::string term_note;
    for (std::size_t i = 0; i < k; ++i) {
        if (!term_note.empty())
            term_note += ", ";
        term_note += std::string(kTermNames[i]) + " = " + terms[i].get_str();
    }
    trace.add_note("terms", term_note);

    root = to_surd_sum(sorted);
    return true;
}

// Rational-only input: the root, if any, is c * sqrt(f) with f squarefree.
// It splits as sqrt(f) + (c-1)*sqrt(f) when c is a whole number of at least 2,
// and as two equal halves otherwise.
SurdSum denest_rational_only(const SurdExpression& e, Trace& trace) {
    const Quantity& rational = e.rational_part();
    if (rational.is_nothing())
        throw NotDenestable("the expression is nothing");
    const SurdClass c = surd_class_of(rational.signed_value());
    if (c.cls == 1)
        throw NotDenestable("not a sum of surds: the root is the rational quantity " +
                            c.coefficient.get_str());
    Terms terms;
    if (c.coefficient.get_den() == 1 && c.coefficient >= 2) {
        const mpq_class rest = c.coefficient - 1;
        trace.add_note("rational input", "the root is " + c.coefficient.get_str() + " s" +
                                             c.cls.get_str() + ", split as s" + c.cls.get_str() +
                                             " + " + rest.get_str() + " s" + c.cls.get_str());
        terms = {mpq_class(c.cls), rest * rest * mpq_class(c.cls)};
    } else {
        const mpq_class half = c.coefficient / 2;
        const mpq_class quarter_term = half * half * mpq_class(c.cls);
        trace.add_note("rational input", "the root is " + c.coefficient.get_str() + " s" +
                                             c.cls.get_str() + ", split into two equal surds");
        terms = {quarter_term, quarter_term};
    }
    std::sort(terms.begin(), terms.end());
    if (!verify_root(terms, e))
        throw NotDenestable("the rational split does not verify");
    return to_surd_sum(terms);
}

} // namespace

DenestResult denest(const SurdExpression& e) {
    Trace trace("denesting");

    if (e.radicands().empty()) {
        SurdSum root = denest_rational_only(e, trace);
        trace.add_note("verification", "squaring " + root.str() + " reproduces " + e.str());
        return {std::move(root), std::move(trace)};
    }

    if (!e.rational_part().is_augmented())
        throw NotDenestable("a sum of surds squares to a positive rational part, "
                            "but the given rational part is nothing");

    // the classical path first: k terms with C(k,2) matching the surd count
    const std::size_t s = e.radicands().size();
    for (std::size_t k = 2; k <= 5; ++k) {
        if (k * (k - 1) / 2 != s)
            continue;
        SurdSum root;
        Trace attempt("denesting");
        if (try_historical(e, k, attempt, root)) {
            attempt.add_note("verification",
                             "squaring " + root.str() + " reproduces " + e.str());
            return {std::move(root), std::move(attempt)};
        }
        trace.add_note("classical path",
                       "the assumed ordering of the surds does not verify; "
                       "falling back to exhaustive pair matching");
        break;
    }

    const std::vector<MergedClass> merged = merged_classes(e);
    const std::size_t k_obs = merged.size();
    if (k_obs > 10)
        throw AmbiguousTermCount("no term count fits: " + std::to_string(k_obs) +
                                 " surd classes exceed the ten pairs of a five-term root");

    std::string class_note;
    for (const MergedClass& m : merged) {
        if (!class_note.empty())
            class_note += ", ";
        class_note += "s" + m.cls.get_str() + " with coefficient " + m.coeff.get_str();
    }
    trace.add_note("surd classes", class_note);

    const mpq_class rational = e.rational_part().signed_value();
    std::set<Terms> candidates;
    if (k_obs == 1)
        two_term_candidates(rational, merged[0].radicand, candidates);
    if (k_obs == 3) {
        std::vector<mpq_class> rads;
        for (const MergedClass& m : merged)
            rads.push_back(m.radicand);
        bijection_candidates(3, rads, candidates);
        split_class_candidates(rational, merged, candidates);
    }
    // five-term roots are matched only in the coincidence-free case, where all
    // ten pair classes are distinct
    if (k_obs == 6 || k_obs == 10) {
        std::vector<mpq_class> rads;
        for (const MergedClass& m : merged)
            rads.push_back(m.radicand);
        bijection_candidates(k_obs == 6 ? 4 : 5, rads, candidates);
    }

    std::vector<Terms> verified;
    for (const Terms& terms : candidates)
        if (verify_root(terms, e))
            verified.push_back(terms);
    if (verified.empty())
        throw NotDenestable("no assignment of the surds to term pairs verifies");

    SurdSum root = to_surd_sum(verified.front());
    trace.add_note("matched", "exhaustive pair matching found " + root.str());
    for (std::size_t i = 1; i < verified.size(); ++i)
        trace.add_note("alternate", "another verified root: " + to_surd_sum(verified[i]).str());
    trace.add_note("verification", "squaring " + root.str() + " reproduces " + e.str());
    return {std::move(root), std::move(trace)};
}

// ---------------------------------------------------------------------------
// text form

namespace {

struct SurdParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

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

    mpq_class parse_rational() {
        mpq_class value(parse_integer());
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            const std::size_t dpos = pos;
            const mpz_class den = parse_integer();
            if (den == 0)
                throw SyntaxError("zero denominator", dpos);
            value /= mpq_class(den);
        }
        return value;
    }

    SurdExpression parse() {
        Quantity rational;
        std::vector<Quantity> radicands;
        bool first = true;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) {
                if (first)
                    throw SyntaxError("empty expression", pos);
                break;
            }
            if (!first) {
                if (text[pos] == '-')
                    throw SyntaxError("deficient parts are not supported here", pos);
                if (text[pos] != '+')
                    throw SyntaxError("expected '+' between parts", pos);
                ++pos;
                skip_ws();
            }
            if (pos < text.size() && text[pos] == '-')
                throw SyntaxError("deficient parts are not supported here", pos);
            if (pos < text.size() && text[pos] == 's') {
                const std::size_t spos = pos;
                ++pos;
                const mpq_class radicand = parse_rational();
                if (sgn(radicand) <= 0)
                    throw SyntaxError("a surd radicand must be positive", spos);
                radicands.push_back(Quantity::from_signed(radicand));
            } else {
                rational = rational + Quantity::from_signed(parse_rational());
            }
            first = false;
        }
        return SurdExpression(std::move(rational), std::move(radicands));
    }
};

} // namespace

SurdExpression parse_surd_expression(std::string_view text) {
    SurdParser parser{text, 0};
    return parser.parse();
}

Json surd_expression_to_json(const SurdExpression& e) {
    Json j;
    j["rational"] = quantity_to_json(e.rational_part());
    Json surds = Json::array();
    for (const Quantity& r : e.radicands())
        surds.push_back(quantity_to_json(r));
    j["surds"] = std::move(surds);
    return j;
}

Json surd_sum_to_json(const SurdSum& s) {
    Json j;
    Json terms = Json::array();
    for (const Quantity& t : s.terms())
        terms.push_back(quantity_to_json(t));
    j["terms"] = std::move(terms);
    return j;
}

} // namespace dixit
