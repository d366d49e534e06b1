#include <doctest.h>

#include <random>

#include "dixit/oracle.hpp"
#include "dixit/surd.hpp"

using namespace dixit;

namespace {

SurdSum sum_of(std::vector<long> terms) {
    std::vector<Quantity> qs;
    for (long t : terms)
        qs.push_back(Quantity::integer(t));
    return SurdSum(std::move(qs));
}

SurdExpression expr_of(long rational, std::vector<long> radicands) {
    std::vector<Quantity> qs;
    for (long r : radicands)
        qs.push_back(Quantity::integer(r));
    return SurdExpression(Quantity::integer(rational), std::move(qs));
}

std::vector<long> term_values(const SurdSum& s) {
    std::vector<long> out;
    for (const Quantity& t : s.terms())
        out.push_back(t.signed_value().get_num().get_si() /
                      t.signed_value().get_den().get_si());
    return out;
}

} // namespace

TEST_SUITE("surd") {

TEST_CASE("squarefree classes") {
    CHECK(surd_class_of(mpq_class(24)).cls == 6);
    CHECK(surd_class_of(mpq_class(24)).coefficient == 2);
    CHECK(surd_class_of(mpq_class(72)).cls == 2);
    CHECK(surd_class_of(mpq_class(72)).coefficient == 6);
    CHECK(surd_class_of(mpq_class(16)).cls == 1);
    CHECK(surd_class_of(mpq_class(16)).coefficient == 4);
    CHECK(surd_class_of(mpq_class(1, 2)).cls == 2);
    CHECK(surd_class_of(mpq_class(1, 2)).coefficient == mpq_class(1, 2));
    CHECK_THROWS_AS(surd_class_of(mpq_class(0)), Error);
}

TEST_CASE("construction folds rational roots and sorts radicands") {
    const SurdExpression e =
        SurdExpression(Quantity::integer(9), {Quantity::integer(16), Quantity::integer(24)});
    CHECK(e.rational_part() == Quantity::integer(13)); // s16 folds to 4
    REQUIRE(e.radicands().size() == 1);
    CHECK(e.radicands()[0] == Quantity::integer(24));
    CHECK_THROWS_AS(SurdExpression(Quantity::deficient(mpq_class(1)), {}), Error);
    CHECK_THROWS_AS(SurdExpression(Quantity::integer(1), {Quantity::nothing()}), Error);
}

TEST_CASE("equality is arithmetic, not typographic") {
    // s24 + s96 = 2s6 + 4s6 = 6s6 = s216
    const SurdExpression a = expr_of(21, {24, 96});
    const SurdExpression b = expr_of(21, {216});
    CHECK(a == b);
    CHECK(!(a == expr_of(21, {24})));
    CHECK(!(a == expr_of(22, {24, 96})));
}

TEST_CASE("squaring the worked four-term sum") {
    const SurdExpression e = expand_square(sum_of({2, 3, 5, 6}));
    CHECK(e.rational_part() == Quantity::integer(16));
    REQUIRE(e.radicands().size() == 6);
    const std::vector<long> expected = {24, 40, 48, 60, 72, 120};
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(e.radicands()[i] == Quantity::integer(expected[i]));
    CHECK(e.str() == "16 + s24 + s40 + s48 + s60 + s72 + s120");
}

TEST_CASE("squaring a single term gives back its radicand") {
    const SurdExpression e = expand_square(sum_of({7}));
    CHECK(e.rational_part() == Quantity::integer(7));
    CHECK(e.radicands().empty());
}

TEST_CASE("rational cross terms fold into the rational part") {
    // (s2 + s8)^2 = 10 + s64 = 18
    const SurdExpression e = expand_square(sum_of({2, 8}));
    CHECK(e.rational_part() == Quantity::integer(18));
    CHECK(e.radicands().empty());
}

TEST_CASE("the worked denesting, through the classical path") {
    const SurdExpression e = expr_of(16, {24, 40, 48, 60, 72, 120});
    const DenestResult r = denest(e);
    CHECK(r.root == sum_of({2, 3, 5, 6}));
    CHECK(r.root.str() == "s2 + s3 + s5 + s6");

    // the trace binds the thing: r = 3, from 16r = 48
    bool bound_r = false;
    bool equation = false;
    for (const Step& step : r.trace.steps()) {
        if (const auto* b = std::get_if<Binding>(&step.payload)) {
            if (b->name == "r" && b->value == Quantity::integer(3)) {
                bound_r = true;
                equation = step.label == "16r = 48";
            }
        }
    }
    CHECK(bound_r);
    CHECK(equation);

    const std::string text = render_trace(r.trace, TraceFormat::Text);
    CHECK(text.find("p = 5/3r") != std::string::npos);
    CHECK(text.find("q = 2r") != std::string::npos);
    CHECK(text.find("m = 2/3r") != std::string::npos);
}

TEST_CASE("a rational-only expression splits along its squarefree class") {
    // 18 = (s2 + s8)^2; the canonical split is s2 + 2 s2
    const SurdExpression e = expr_of(18, {});
    const DenestResult r = denest(e);
    CHECK(r.root == sum_of({2, 8}));
    CHECK(expand_square(r.root) == e);
    // oracle agreement: brute force over small integer sums
    const auto found = oracle::oracle_denest_search(e, 20);
    REQUIRE(found.has_value());
    CHECK(*found == r.root);
}

TEST_CASE("a perfect-square rational is rejected toward the rational root") {
    try {
        denest(expr_of(9, {}));
        FAIL("expected NotDenestable");
    } catch (const NotDenestable& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("expressions that do not denest") {
    CHECK_THROWS_AS(denest(expr_of(18, {8})), NotDenestable);
    CHECK_THROWS_AS(denest(expr_of(0, {3})), NotDenestable);
    CHECK(!oracle::oracle_denest_search(expr_of(18, {8}), 20).has_value());
    // no integer sum squares to a bare 2, though the half-split still does
    CHECK(!oracle::oracle_denest_search(expr_of(2, {}), 20).has_value());
    const DenestResult halves = denest(expr_of(2, {}));
    CHECK(expand_square(halves.root) == expr_of(2, {}));
    CHECK(halves.root == SurdSum({Quantity::fraction(1, 2), Quantity::fraction(1, 2)}));
}

TEST_CASE("too many surd classes for any admissible term count") {
    std::vector<Quantity> surds;
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        surds.push_back(Quantity::integer(p));
    CHECK_THROWS_AS(denest(SurdExpression(Quantity::integer(100), std::move(surds))),
                    AmbiguousTermCount);
}

TEST_CASE("two- and three-term denestings") {
    // (s3 + s7)^2 = 10 + s84
    CHECK(denest(expr_of(10, {84})).root == sum_of({3, 7}));
    // (s2 + s3 + s5)^2 = 10 + s24 + s40 + s60
    CHECK(denest(expr_of(10, {24, 40, 60})).root == sum_of({2, 3, 5}));
}

TEST_CASE("duplicate term classes collapse to one surd per class") {
    // (s2 + s8 + s3)^2 = 21 + s24 + s96, with the 2/8 cross term folded
    const SurdExpression e = expand_square(sum_of({2, 8, 3}));
    CHECK(e.rational_part() == Quantity::integer(21));
    REQUIRE(e.radicands().size() == 2);
    const DenestResult r = denest(e);
    // the class-merged root 3s2 + s3 verifies against the same expression
    CHECK(expand_square(r.root) == e);
    CHECK(r.root == sum_of({3, 18}));
}

TEST_CASE("coincident class pairs are split back apart") {
    // {2,3,5,30}: all three disjoint pair couples land in shared classes
    const SurdExpression e = expand_square(sum_of({2, 3, 5, 30}));
    REQUIRE(e.class_profile().size() == 3);
    const DenestResult r = denest(e);
    CHECK(expand_square(r.root) == e);
    CHECK(r.root == sum_of({2, 3, 5, 30}));

    // {2,3,5,12}: the terms 3 and 12 share a class, so only three classes show
    const SurdExpression partial = expand_square(sum_of({2, 3, 5, 12}));
    REQUIRE(partial.class_profile().size() == 3);
    const DenestResult r2 = denest(partial);
    CHECK(expand_square(r2.root) == partial);
}

TEST_CASE("fractional radicands work through the whole pipeline") {
    // (s(1/2) + s(3/2))^2 = 2 + s3
    const SurdSum s({Quantity::fraction(1, 2), Quantity::fraction(3, 2)});
    const SurdExpression e = expand_square(s);
    CHECK(e.rational_part() == Quantity::integer(2));
    REQUIRE(e.radicands().size() == 1);
    CHECK(e.radicands()[0] == Quantity::integer(3));
    const DenestResult r = denest(e);
    CHECK(r.root == s);
    CHECK(r.root.str() == "s1/2 + s3/2");
}

TEST_CASE("round trip on random sums") {
    std::mt19937_64 rng(60409);
    std::uniform_int_distribution<int> n_terms(1, 4);
    std::uniform_int_distribution<long> radicand(1, 50);
    for (int i = 0; i < 1000; ++i) {
        std::vector<Quantity> terms;
        const int n = n_terms(rng);
        for (int j = 0; j < n; ++j)
            terms.push_back(Quantity::integer(radicand(rng)));
        const SurdSum s(std::move(terms));
        const SurdExpression e = expand_square(s);
        if (e.radicands().empty() && surd_class_of(e.rational_part().signed_value()).cls == 1)
            continue; // the sum collapsed to a rational; nothing to denest
        const DenestResult r = denest(e);
        REQUIRE(expand_square(r.root) == e);
    }
}

TEST_CASE("oracle search returns the first match by size then order") {
    const auto golden = oracle::oracle_denest_search(expr_of(16, {24, 40, 48, 60, 72, 120}), 10);
    REQUIRE(golden.has_value());
    CHECK(term_values(*golden) == std::vector<long>{2, 3, 5, 6});
    CHECK(!oracle::oracle_denest_search(expr_of(2, {}), 20).has_value());
    const auto pair = oracle::oracle_denest_search(expand_square(sum_of({3, 7})), 10);
    REQUIRE(pair.has_value());
    CHECK(term_values(*pair) == std::vector<long>{3, 7});
}

TEST_CASE("parsing the text form") {
    const SurdExpression e = parse_surd_expression("16 + s24 + s40 + s48 + s60 + s72 + s120");
    CHECK(e == expr_of(16, {24, 40, 48, 60, 72, 120}));
    CHECK(parse_surd_expression("s24 + 16 + s40").rational_part() == Quantity::integer(16));
    CHECK(parse_surd_expression("3/2 + s1/2").rational_part() == Quantity::fraction(3, 2));
    CHECK_THROWS_AS(parse_surd_expression(""), SyntaxError);
    CHECK_THROWS_AS(parse_surd_expression("16 - s24"), SyntaxError);
    CHECK_THROWS_AS(parse_surd_expression("16 + s0"), SyntaxError);
    CHECK_THROWS_AS(parse_surd_expression("16 + q24"), SyntaxError);
}

TEST_CASE("json serialization") {
    const SurdExpression e = expr_of(16, {24, 40});
    const Json j = surd_expression_to_json(e);
    CHECK(j["rational"]["num"] == "16");
    CHECK(j["surds"].size() == 2);
    const Json s = surd_sum_to_json(sum_of({2, 3}));
    CHECK(s["terms"].size() == 2);
}

} // TEST_SUITE
