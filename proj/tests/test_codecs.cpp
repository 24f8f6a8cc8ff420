#include <gtest/gtest.h>

#include <algorithm>

#include "knotwidth/bubble.hpp"
#include "knotwidth/codecs.hpp"
#include "knotwidth/errors.hpp"
#include "knotwidth/json_io.hpp"
#include "knotwidth/torus_map.hpp"
#include "oracles.hpp"

using namespace knotwidth;
using namespace knotwidth::testing;

namespace {

bool ends_with(const std::string& s, const std::string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

Diagram load(const std::string& path) {
    const std::string text = read_file(path);
    if (ends_with(path, ".pd")) return parse_pd(text);
    if (ends_with(path, ".gauss")) return parse_gauss(text);
    return diagram_from_json(text);
}

}  // namespace

TEST(Pd, TrefoilHasThreeTuples) {
    const Diagram d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    const std::string pd = emit_pd(d);
    EXPECT_EQ(std::count(pd.begin(), pd.end(), 'X'), 3);
    EXPECT_TRUE(isomorphic(parse_pd(pd), d));
}

TEST(Pd, AcceptsBothBracketStylesAndCommas) {
    const Diagram a = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    const Diagram b = parse_pd("X(1, 5, 2, 4),\nX(3,1,4,6),X(5,3,6,2)\n");
    EXPECT_TRUE(isomorphic(a, b));
}

TEST(Pd, EmptyIsUnknot) {
    const Diagram u = parse_pd("  \n");
    EXPECT_EQ(u.num_crossings(), 0);
    EXPECT_TRUE(isomorphic(u, unknot_diagram()));
    EXPECT_EQ(emit_pd(u), "");
}

TEST(Pd, MalformedReportsPosition) {
    try {
        parse_pd("X[1,5,2,4]\nX[3,1;4,6]");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_GT(e.column(), 1);
    }
    EXPECT_THROW(parse_pd("X[1,5,2]"), ParseError);
    EXPECT_THROW(parse_pd("X[1,5,2,4] X[3,1,4,6]"), ParseError);  // labels not paired
    EXPECT_THROW(parse_pd(read_file(fixture_path("malformed.pd"))), ParseError);
}

TEST(Pd, HopfLinkHasTwoComponents) {
    const Diagram d = parse_pd(read_file(fixture_path("corpus/hopf.pd")));
    EXPECT_EQ(count_link_components(d), 2);
    EXPECT_TRUE(isomorphic(parse_pd(emit_pd(d)), d));
}

TEST(Pd, TrueVerticesCannotBeEmitted) {
    EXPECT_EQ(emit_pd(unknot_diagram()), "");
    Diagram theta;
    theta.true_vertices = {{3}, {3}};
    theta.arcs = {{{0, 0}, {1, 2}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 0}}};
    ASSERT_TRUE(validate(theta).valid);
    EXPECT_THROW(emit_pd(theta), UnsupportedInput);
}

TEST(Gauss, TrefoilMatchesPdShadow) {
    const Diagram g = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    const Diagram p = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
    EXPECT_EQ(g.num_crossings(), 3);
    EXPECT_EQ(canonical_code(shadow(g)), canonical_code(shadow(p)));
}

TEST(Gauss, SignsSelectChirality) {
    const Diagram a = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    const Diagram b = parse_gauss("O1- U2- O3- U1- O2- U3-");
    EXPECT_FALSE(isomorphic(a, b));
}

TEST(Gauss, RejectsBadCodes) {
    EXPECT_THROW(parse_gauss("O1+ U2+ O3- U1+ O2+ U4- O4- U3-"), ParseError);  // not planar
    EXPECT_THROW(parse_gauss("O1+ U1+ O1+"), ParseError);
    EXPECT_THROW(parse_gauss("O1+ O1+"), ParseError);
    EXPECT_THROW(parse_gauss("Q1+ U1+"), ParseError);
    EXPECT_THROW(parse_gauss("O1+ U1-"), ParseError);
}

TEST(Gauss, FigureEightMatchesPd) {
    const Diagram g = parse_gauss(read_file(fixture_path("corpus/figure_eight.gauss")));
    const Diagram p = parse_pd(read_file(fixture_path("corpus/figure_eight.pd")));
    EXPECT_EQ(canonical_code(shadow(g)), canonical_code(shadow(p)));
}

TEST(Corpus, RoundTripsThroughEveryFormat) {
    const auto files = corpus_files();
    ASSERT_GE(files.size(), 10u);
    for (const auto& f : files) {
        SCOPED_TRACE(f);
        const Diagram d = load(f);
        EXPECT_TRUE(validate(d).valid);
        EXPECT_TRUE(isomorphic(diagram_from_json(diagram_to_json(d)), d));
        if (d.true_vertices.empty() || d.num_crossings() == 0) {
            const Diagram back = parse_pd(emit_pd(d));
            EXPECT_TRUE(isomorphic(back, d));
            EXPECT_EQ(emit_pd(back), emit_pd(d));
        }
    }
}

TEST(Json, DiagramRejectsWrongSchemaAndInvalidContent) {
    EXPECT_THROW(diagram_from_json("{\"schema\": \"torusmap.v1\"}"), ParseError);
    EXPECT_THROW(diagram_from_json("{not json"), ParseError);
    EXPECT_THROW(diagram_from_json(R"({"schema":"diagram.v1","crossings":[{"over":0}],"true_vertices":[],"arcs":[],"split":false})"),
                 ParseError);
}

TEST(Json, TorusMapRoundTrip) {
    const TorusMap t = torus_map_from_json(read_file(fixture_path("t3_4.torusmap.json")));
    EXPECT_TRUE(validate_torus_map(t).ok());
    EXPECT_EQ(torus_map_to_json(t), read_file(fixture_path("t3_4.torusmap.json")));
    EXPECT_EQ(c_rep_torus(t), 3);
}

TEST(Json, TraceRoundTrip) {
    const std::string text = read_file(fixture_path("appendixA.bubbletrace.json"));
    const auto tr = trace_from_json(text);
    const auto again = trace_from_json(trace_to_json(tr));
    EXPECT_EQ(trace_to_json(again), trace_to_json(tr));
    EXPECT_EQ(again.circle, tr.circle);
    EXPECT_EQ(again.face_owner, tr.face_owner);
}
