#include <chrono>
#include <iostream>

#include "corpus.hpp"
#include "foamho/phi.hpp"
#include "foamho/table_cases.hpp"

using namespace foamho;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Gen> all_gens(const Cube& cube) {
    std::vector<Gen> out;
    for (std::uint64_t t = 0; t < cube.num_states(); ++t) {
        StateMask state = state_from_ordinal(cube.n(), t);
        int m = cube.num_circles(state);
        for (std::uint32_t marks = 0; marks < (std::uint32_t{1} << m); ++marks)
            out.push_back({state, marks});
    }
    return out;
}

struct Criterion {
    bool ok = true;
    std::string detail;
    void fail(const std::string& msg) {
        ok = false;
        if (detail.empty()) detail = msg;
    }
};

// 1. d^2 = 0 on the whole corpus, both backends, under 10 s.
Criterion criterion1() {
    Criterion c;
    auto start = Clock::now();
    for (const auto& name : corpus_files()) {
        Cube cube(corpus_diagram(name));
        for (Backend b : {Backend::APS, Backend::Foam}) {
            D2Report rep = verify_d_squared(assemble_complex(cube, b));
            if (!rep.ok) c.fail(name + ": " + rep.failures.front());
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 10.0)
        c.fail("took " + std::to_string(elapsed) + " s (budget 10 s)");
    if (c.ok) c.detail = std::to_string(elapsed) + " s";
    return c;
}

// 2. Every differential term lands at (i-2,j,s); every rewrite step
// preserves the grading term-wise.
Criterion criterion2() {
    Criterion c;
    for (const auto& name : corpus_files()) {
        Cube cube(corpus_diagram(name));
        Report rep = verify_grading_preservation(cube);
        if (!rep.ok) c.fail(name + ": " + rep.failures.front());
        NormalizeOptions opts;
        opts.check_grading = true;
        for (const Gen& g : all_gens(cube))
            for (int p = 0; p < cube.n(); ++p) {
                try {
                    normalize(cube, bridge(cube, g, p), opts);
                } catch (const InternalError& e) {
                    c.fail(name + ": " + e.what());
                }
            }
    }
    return c;
}

// 3. All 21 table rows match between backends.
Criterion criterion3() {
    Criterion c;
    for (const TableRowResult& r : run_table_cases())
        if (!r.match)
            c.fail("row " + std::to_string(r.row) + ": aps " + r.aps + " vs foam " +
                   r.foam + " expected " + r.expected);
    return c;
}

// 4. Phi o d = d o Phi term-exactly on every corpus generator.
Criterion criterion4() {
    Criterion c;
    for (const auto& name : corpus_files()) {
        Cube cube(corpus_diagram(name));
        Report rep = verify_chain_map(cube);
        if (!rep.ok) c.fail(name + ": " + rep.failures.front());
    }
    return c;
}

// 5. Identical (free rank, torsion) from both backends at every grading.
Criterion criterion5() {
    Criterion c;
    for (const auto& name : corpus_files()) {
        Cube cube(corpus_diagram(name));
        auto a = homology(assemble_complex(cube, Backend::APS));
        auto f = homology(assemble_complex(cube, Backend::Foam));
        for (const auto& [g, h] : a) {
            auto it = f.find(g);
            bool same = it != f.end() && it->second.free_rank == h.free_rank &&
                        it->second.torsion == h.torsion;
            if (!same) c.fail(name + ": backends disagree");
        }
        if (a.size() != f.size()) c.fail(name + ": grading supports differ");
    }
    return c;
}

// 6. 100 randomized rule-order normalizations per corpus RawFoam all agree.
Criterion criterion6() {
    Criterion c;
    std::mt19937 rng(20260823);
    for (const auto& name : corpus_files()) {
        Cube cube(corpus_diagram(name));
        for (const Gen& g : all_gens(cube))
            for (int p = 0; p < cube.n(); ++p) {
                if (smoothing_at(g.state, p) == Smoothing::Negative) continue;
                RawFoam raw = bridge(cube, g, p);
                ChainSum ref = normalize(cube, raw);
                for (int k = 0; k < 100; ++k) {
                    NormalizeOptions opts;
                    opts.rng = &rng;
                    if (normalize(cube, raw, opts) != ref) {
                        c.fail(name + ": confluence failure");
                        break;
                    }
                }
                if (!c.ok) return c;
            }
    }
    return c;
}

// 7. Exactness on the hopf and kink skein triples at every grading.
Criterion criterion7() {
    Criterion c;
    for (const char* name : {"hopf_pos.dg", "kink.dg"}) {
        Diagram d = corpus_diagram(name);
        for (int p = 0; p < d.n(); ++p) {
            SkeinTriple t(d, p);
            for (Backend b : {Backend::APS, Backend::Foam}) {
                Report rep = verify_exactness(t, b);
                if (!rep.ok)
                    c.fail(std::string(name) + " p=" + std::to_string(p) + ": " +
                           rep.failures.front());
            }
        }
    }
    return c;
}

// 8. R2/R3-related pairs have equal tables; the R1 pair matches under the
// documented shift (i,j) -> (i-1,j-3).
Criterion criterion8() {
    Criterion c;
    auto tab = [](const std::string& name) {
        Cube cube(corpus_diagram(name));
        return nonzero_homology(assemble_complex(cube, Backend::APS));
    };
    auto equal_shifted = [&](const std::string& a, const std::string& b, int si,
                             int sj) {
        auto ta = tab(a);
        auto tb = tab(b);
        if (ta.size() != tb.size()) return false;
        for (const auto& [g, h] : ta) {
            Grading gs = g;
            gs.i += si;
            gs.j += sj;
            auto it = tb.find(gs);
            if (it == tb.end() || it->second.free_rank != h.free_rank ||
                it->second.torsion != h.torsion)
                return false;
        }
        return true;
    };
    if (!equal_shifted("loop_annulus.dg", "loop_annulus_r2.dg", 0, 0))
        c.fail("R2 pair differs");
    if (!equal_shifted("r3_a.dg", "r3_b.dg", 0, 0)) c.fail("R3 pair differs");
    if (!equal_shifted("unknot_disk.dg", "kink.dg", -1, -3))
        c.fail("R1 pair differs under the (-1,-3) shift");
    return c;
}

// 9. Desk computations with independent oracles, each under 1 s.
Criterion criterion9() {
    Criterion c;
    auto timed_table = [&](const std::string& name) {
        auto start = Clock::now();
        Cube cube(corpus_diagram(name));
        auto t = nonzero_homology(assemble_complex(cube, Backend::APS));
        if (seconds_since(start) >= 1.0) c.fail(name + ": over the 1 s budget");
        return t;
    };
    {
        auto t = timed_table("unknot_disk.dg");
        bool ok = t.size() == 2 && t.count({0, 2, {}}) && t.count({0, -2, {}});
        if (!ok) c.fail("unknot table wrong");
    }
    {
        auto t = timed_table("loop_annulus.dg");
        bool ok = t.size() == 2 &&
                  t.count({0, 0, {{H1{1}, 1}}}) &&
                  t.count({0, 0, {{H1{1}, -1}}});
        if (!ok) c.fail("annulus loop table wrong");
    }
    {
        auto t = timed_table("hopf_pos.dg");
        long long free_total = 0;
        std::vector<Int> torsion;
        for (const auto& [g, h] : t) {
            free_total += h.free_rank;
            torsion.insert(torsion.end(), h.torsion.begin(), h.torsion.end());
        }
        if (free_total != 4)
            c.fail("hopf total free rank is " + std::to_string(free_total));
        if (torsion != std::vector<Int>{2}) {
            std::string ts;
            for (const Int& d : torsion) ts += " Z/" + d.str();
            c.fail("hopf torsion is [" + (ts.empty() ? " none " : ts) +
                   " ], required exactly one Z/2");
        }
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*run)();
    };
    const Entry entries[] = {
        {"1 d^2=0 corpus suite", criterion1},
        {"2 grading degree and rule preservation", criterion2},
        {"3 21-case conformance", criterion3},
        {"4 chain-map identity", criterion4},
        {"5 homology equality across backends", criterion5},
        {"6 normalization confluence (100 orders)", criterion6},
        {"7 skein triple exactness", criterion7},
        {"8 Reidemeister invariance regression", criterion8},
        {"9 desk computations", criterion9},
    };
    int failures = 0;
    for (const Entry& e : entries) {
        Criterion c;
        try {
            c = e.run();
        } catch (const std::exception& ex) {
            c.fail(std::string("exception: ") + ex.what());
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << e.name;
        if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
        std::cout << "\n";
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
