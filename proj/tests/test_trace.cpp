#include <doctest.h>

#include "dixit/medieval_arith.hpp"
#include "dixit/polynomial.hpp"
#include "dixit/surd.hpp"
#include "dixit/trace.hpp"

using namespace dixit;

namespace {

Trace sample_trace() {
    Trace t("indian-multiplication");
    BoardSnapshot snap;
    snap.upper = "428";
    snap.upper_indent = 0;
    snap.board = parse_board("428326");
    snap.multiplier = parse_board("214");
    snap.shift = 1;
    t.add("stage 1", snap);

    TableRows rows;
    rows.columns = {"dcc", "ddc", "cc", "dc", "dd", "c", "d", "r", "units"};
    rows.rows.push_back({"quotient", {{"c", "3"}}});
    rows.rows.push_back({"First Remainder", {{"dcc", "0"}, {"ddc", "4"}}});
    t.add("step", rows);

    t.add("16r = 48", Binding{"r", Quantity::integer(3)});
    t.add_note("nothing remains", "0");
    return t;
}

} // namespace

TEST_SUITE("trace") {

TEST_CASE("board snapshots render as aligned two-line displays") {
    Trace t("indian-multiplication");
    BoardSnapshot snap;
    snap.board = parse_board("428326");
    snap.multiplier = parse_board("214");
    snap.shift = 1;
    t.add("stage 1", snap);
    const std::string text = render_trace(t, TraceFormat::Text);
    CHECK(text.find("428326\n 214\n") != std::string::npos);
}

TEST_CASE("an empty note renders its label verbatim") {
    Trace t("demo");
    t.add_note("nothing remains", "");
    const std::string text = render_trace(t, TraceFormat::Text);
    CHECK(text.find("step 1: nothing remains\n") != std::string::npos);
}

TEST_CASE("tables render with the fixed column header") {
    const std::string text = render_trace(sample_trace(), TraceFormat::Text);
    CHECK(text.find("dcc") != std::string::npos);
    CHECK(text.find("units") != std::string::npos);
    CHECK(text.find("First Remainder") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    const Trace t = sample_trace();
    CHECK(render_trace(t, TraceFormat::Text) == render_trace(t, TraceFormat::Text));
    CHECK(render_trace(t, TraceFormat::Structured) ==
          render_trace(t, TraceFormat::Structured));
}

TEST_CASE("structured output round-trips") {
    const Trace t = sample_trace();
    const std::string dumped = render_trace(t, TraceFormat::Structured);
    const Trace back = trace_from_json_text(dumped);
    CHECK(back == t);
    CHECK(render_trace(back, TraceFormat::Structured) == dumped);
    CHECK(trace_to_json(t)["schema"] == "1");
}

TEST_CASE("step indices are contiguous from 1") {
    const Trace t = sample_trace();
    for (std::size_t i = 0; i < t.steps().size(); ++i)
        CHECK(t.steps()[i].index == static_cast<int>(i) + 1);
}

TEST_CASE("every algorithm's trace survives the structured round trip") {
    std::vector<Trace> traces;
    traces.push_back(multiply_indian(parse_board("2326"), parse_board("214")).trace);
    traces.push_back(duplicate_multiply(parse_board("25"), parse_board("6")).trace);
    traces.push_back(dimidiate(parse_board("7"), 2).trace);
    traces.push_back(
        denest(parse_surd_expression("16 + s24 + s40 + s48 + s60 + s72 + s120")).trace);
    traces.push_back(divide_tabular(parse_poly("6x^8+28x^7+6x^6-80x^5+38x^4+92x^3-200x^2+20x",
                                               Notation::Modern),
                                    parse_poly("2x^5+8x^4-20x^2", Notation::Modern))
                         .table);
    traces.push_back(
        sqrt_poly(parse_poly("4dcc+12ddc+9cc+20dc+42dd+18c+25d+30r+9", Notation::Medieval))
            .trace);
    for (const Trace& t : traces) {
        const std::string dumped = render_trace(t, TraceFormat::Structured);
        const Trace back = trace_from_json_text(dumped);
        CHECK(back == t);
        CHECK(render_trace(back, TraceFormat::Structured) == dumped);
    }
}

} // TEST_SUITE
