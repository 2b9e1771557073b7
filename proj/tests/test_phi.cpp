#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "foamho/phi.hpp"

using namespace foamho;

TEST_CASE("phi realises the marking dictionary") {
    Cube cube(corpus_diagram("loop_annulus.dg"));
    auto plus = phi_foam(cube, {0, 0});
    REQUIRE(plus.size() == 1);
    CHECK(plus[0].is_vertical_annulus());
    CHECK(plus[0].bottom[0].sign == 1);
    auto minus = phi_foam(cube, {0, 1});
    CHECK(minus[0].bottom[0].sign == -1);

    Cube disk(corpus_diagram("unknot_disk.dg"));
    auto dotted = phi_foam(disk, {0, 0});
    CHECK(dotted[0].is_disk());
    CHECK(dotted[0].dots == 1);
    auto plain = phi_foam(disk, {0, 1});
    CHECK(plain[0].dots == 0);
}

TEST_CASE("phi is a chain map on the whole corpus") {
    for (const auto& name : corpus_files()) {
        Cube cube(corpus_diagram(name));
        Report rep = verify_chain_map(cube);
        INFO(name, rep.ok ? "" : (": " + rep.failures.front()));
        CHECK(rep.ok);
    }
}

TEST_CASE("phi preserves all three gradings on the whole corpus") {
    for (const auto& name : corpus_files()) {
        Cube cube(corpus_diagram(name));
        Report rep = verify_grading_preservation(cube);
        INFO(name);
        CHECK(rep.ok);
    }
}

TEST_CASE("alpha re-inserts a negative smoothing with the documented sign") {
    Diagram d = corpus_diagram("hopf_pos.dg");
    SkeinTriple t(d, 1);
    // D_infty of the hopf at crossing 1 is the 1-crossing diagram; its
    // all-positive state has no negative smoothings before p.
    SignedGen a0 = alpha(t, {0b0, 0});
    CHECK(a0.sign == 1);
    CHECK(smoothing_at(a0.gen.state, 1) == Smoothing::Negative);
    CHECK(smoothing_at(a0.gen.state, 0) == Smoothing::Positive);
    SignedGen a1 = alpha(t, {0b1, 0});
    CHECK(a1.sign == -1);  // crossing 0 negative, before p = 1
    CHECK(a1.gen.state == 0b11u);
}

TEST_CASE("alpha shifts the grading by (-1,-1,0)") {
    Diagram d = corpus_diagram("hopf_pos.dg");
    SkeinTriple t(d, 0);
    for (std::uint64_t s = 0; s < t.cube_infty.num_states(); ++s) {
        StateMask state = state_from_ordinal(t.cube_infty.n(), s);
        int m = t.cube_infty.num_circles(state);
        for (std::uint32_t marks = 0; marks < (std::uint32_t{1} << m); ++marks) {
            Gen g{state, marks};
            Grading before = aps_grade(t.cube_infty, g);
            Grading after = aps_grade(t.cube_p, alpha(t, g).gen);
            CHECK(after.i == before.i - 1);
            CHECK(after.j == before.j - 1);
            CHECK(after.s == before.s);
        }
    }
}

TEST_CASE("beta kills negative-at-p generators and beta(alpha) = 0") {
    Diagram d = corpus_diagram("hopf_pos.dg");
    SkeinTriple t(d, 0);
    CHECK(!beta(t, {0b01, 0}));
    CHECK(beta(t, {0b10, 0}));
    SignedGen a = alpha(t, {0, 0});
    CHECK(!beta(t, a.gen));
}

TEST_CASE("exactness of the kink and hopf skein triples") {
    for (const char* name : {"kink.dg", "kink_pos.dg", "hopf_pos.dg"}) {
        Diagram d = corpus_diagram(name);
        for (int p = 0; p < d.n(); ++p) {
            SkeinTriple t(d, p);
            for (Backend b : {Backend::APS, Backend::Foam}) {
                Report rep = verify_exactness(t, b);
                INFO(name, " p=", p, rep.ok ? "" : (": " + rep.failures.front()));
                CHECK(rep.ok);
            }
        }
    }
}

TEST_CASE("exactness on annulus and torus triples") {
    for (const char* name : {"annulus_split.dg", "annulus_tn_merge.dg",
                             "annulus_braid2.dg", "torus_two_curves.dg"}) {
        Diagram d = corpus_diagram(name);
        SkeinTriple t(d, 0);
        for (Backend b : {Backend::APS, Backend::Foam}) {
            Report rep = verify_exactness(t, b);
            INFO(name, rep.ok ? "" : (": " + rep.failures.front()));
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("phi is a bijection generator by generator") {
    // Both backends enumerate the same Gen set; counting suffices because phi
    // is the identity on the shared encoding and foam normal forms are
    // exactly the decorated-circle assignments.
    for (const auto& name : {"hopf_pos.dg", "annulus_nt.dg"}) {
        Cube cube(corpus_diagram(name));
        for (std::uint64_t s = 0; s < cube.num_states(); ++s) {
            StateMask state = state_from_ordinal(cube.n(), s);
            int m = cube.num_circles(state);
            std::set<std::uint32_t> images;
            for (std::uint32_t marks = 0; marks < (std::uint32_t{1} << m); ++marks)
                images.insert(phi(Gen{state, marks}).marks);
            CHECK(images.size() == (std::uint32_t{1} << m));
        }
    }
}
