#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "foamho/diagram.hpp"

using namespace foamho;

TEST_CASE("parse and reserialize roundtrips") {
    for (const auto& name : corpus_files()) {
        Diagram d = corpus_diagram(name);
        Diagram d2 = parse_diagram(serialize_diagram(d));
        CHECK(serialize_diagram(d2) == serialize_diagram(d));
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_diagram("loop 0\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("surface moebius\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("surface disk\nedge 0\nedge 0\n"), ParseError);
    CHECK_THROWS_AS(
        parse_diagram("surface disk\nedge 0\ncrossing 0 0.0 0.1 1.0 1.1\n"),
        ParseError);
    // dangling edge end
    CHECK_THROWS_AS(parse_diagram("surface disk\nedge 0\n"), ParseError);
    // port used twice
    CHECK_THROWS_AS(
        parse_diagram("surface disk\nedge 0\nedge 1\ncrossing 0 0.0 0.0 1.0 1.1\n"),
        ParseError);
    try {
        parse_diagram("surface disk\nloop x\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("h1 labels are padded to the surface rank") {
    Diagram d = parse_diagram("surface torus\nloop 0 h1 1\n");
    CHECK(d.loops[0].h1 == H1{1, 0});
    CHECK_THROWS_AS(parse_diagram("surface disk\nloop 0 h1 1\n"), ParseError);
}

TEST_CASE("state enumeration: ordinal 0 is all-positive") {
    CHECK(state_from_ordinal(3, 0) == 0u);
    CHECK(state_from_ordinal(2, 1) == 0b10u);  // (+,-): crossing 1 negative
    CHECK(state_from_ordinal(2, 2) == 0b01u);  // (-,+)
    CHECK(state_from_ordinal(2, 3) == 0b11u);
    for (std::uint64_t t = 0; t < 16; ++t)
        CHECK(ordinal_from_state(4, state_from_ordinal(4, t)) == t);
}

TEST_CASE("kink resolves to 1 or 2 circles") {
    Diagram d = corpus_diagram("kink.dg");
    CHECK(resolve_state(d, 0).circles.size() == 1);
    CHECK(resolve_state(d, 1).circles.size() == 2);
    Diagram m = corpus_diagram("kink_pos.dg");
    CHECK(resolve_state(m, 0).circles.size() == 2);
    CHECK(resolve_state(m, 1).circles.size() == 1);
}

TEST_CASE("hopf circle counts per state") {
    Diagram d = corpus_diagram("hopf_pos.dg");
    CHECK(resolve_state(d, 0b00).circles.size() == 2);
    CHECK(resolve_state(d, 0b01).circles.size() == 1);
    CHECK(resolve_state(d, 0b10).circles.size() == 1);
    CHECK(resolve_state(d, 0b11).circles.size() == 2);
}

TEST_CASE("disk circles are always trivial") {
    for (const auto& name : corpus_files()) {
        Diagram d = corpus_diagram(name);
        if (d.surface.kind != SurfaceKind::Disk) continue;
        for (StateMask s = 0; s < (StateMask{1} << d.n()); ++s)
            for (const Circle& c : resolve_state(d, s).circles)
                CHECK(!c.essential);
    }
}

TEST_CASE("essentiality and canonical classes on the annulus") {
    Diagram d = corpus_diagram("annulus_split.dg");
    CircleSet neg = resolve_state(d, 1);
    REQUIRE(neg.circles.size() == 2);
    CHECK(neg.circles[0].essential);
    CHECK(neg.circles[1].essential);
    CHECK(neg.circles[0].canon == H1{1});
    CHECK(neg.circles[1].canon == H1{1});
    CHECK(neg.circles[0].sign * neg.circles[1].sign == -1);
    CircleSet pos = resolve_state(d, 0);
    REQUIRE(pos.circles.size() == 1);
    CHECK(!pos.circles[0].essential);
}

TEST_CASE("transition kinds") {
    CHECK(classify_transition(corpus_diagram("kink.dg"), 0, 0).kind ==
          Transition::Split);
    CHECK(classify_transition(corpus_diagram("kink.dg"), 1, 0).kind ==
          Transition::Merge);
    CHECK(classify_transition(corpus_diagram("kink_pos.dg"), 0, 0).kind ==
          Transition::Merge);
    CHECK(classify_transition(corpus_diagram("torus_selfglue.dg"), 0, 0).kind ==
          Transition::SelfGlue);
}

TEST_CASE("flip changes the circle count by one or keeps it (SelfGlue)") {
    for (const auto& name : corpus_files()) {
        Diagram d = corpus_diagram(name);
        for (StateMask s = 0; s < (StateMask{1} << d.n()); ++s) {
            size_t before = resolve_state(d, s).circles.size();
            for (int p = 0; p < d.n(); ++p) {
                size_t after =
                    resolve_state(d, s ^ (StateMask{1} << p)).circles.size();
                Transition t = classify_transition(d, s, p);
                if (t.kind == Transition::SelfGlue) CHECK(after == before);
                else CHECK((after == before + 1 || after + 1 == before));
            }
        }
    }
}

TEST_CASE("smooth_crossing removes the crossing and keeps relative order") {
    Diagram d = corpus_diagram("hopf_pos.dg");
    for (Smoothing sm : {Smoothing::Positive, Smoothing::Negative}) {
        SmoothedDiagram sd = smooth_crossing(d, 0, sm);
        CHECK(sd.diagram.n() == 1);
        CHECK(sd.diagram.surface.kind == SurfaceKind::Disk);
        // circles of a state of the smaller diagram match the parent count
        StateMask parent = (sm == Smoothing::Negative) ? 1 : 0;
        CHECK(resolve_state(sd.diagram, 0).circles.size() ==
              resolve_state(d, parent).circles.size());
        CHECK(resolve_state(sd.diagram, 1).circles.size() ==
              resolve_state(d, parent | 0b10).circles.size());
    }
}

TEST_CASE("smoothing a 1-crossing diagram leaves only loops") {
    Diagram d = corpus_diagram("kink.dg");
    SmoothedDiagram pos = smooth_crossing(d, 0, Smoothing::Positive);
    CHECK(pos.diagram.n() == 0);
    CHECK(pos.diagram.edges.empty());
    CHECK(pos.diagram.loops.size() == 1);
    SmoothedDiagram neg = smooth_crossing(d, 0, Smoothing::Negative);
    CHECK(neg.diagram.loops.size() == 2);
}

TEST_CASE("smoothing preserves homology labels") {
    Diagram d = corpus_diagram("annulus_braid2.dg");
    SmoothedDiagram sd = smooth_crossing(d, 0, Smoothing::Positive);
    // classes of the traced circles agree with the parent state's circles
    CircleSet sub = resolve_state(sd.diagram, 0);
    CircleSet par = resolve_state(d, 0);
    REQUIRE(sub.circles.size() == par.circles.size());
    // compare canonical classes as unordered multisets
    std::multiset<H1> ca, cb;
    for (const Circle& c : sub.circles)
        ca.insert(c.essential ? c.canon : H1(c.cls.size(), 0));
    for (const Circle& c : par.circles)
        cb.insert(c.essential ? c.canon : H1(c.cls.size(), 0));
    CHECK(ca == cb);
}
