#include "foamho/foam.hpp"

#include <algorithm>
#include <string>

namespace foamho {

namespace {

int popcount_neg(StateMask m, int n) {
    int c = 0;
    for (int q = 0; q < n; ++q)
        if (smoothing_at(m, q) == Smoothing::Negative) ++c;
    return c;
}

TopCircle top_circle_of(const Circle& c) {
    TopCircle t;
    t.circle = c.id;
    t.essential = c.essential;
    if (c.essential) t.canon = c.canon;
    return t;
}

// An orientation on a component with a single essential top circle over a
// single bottom circle of the same class is forced by compatibility.
void derive_orient(FoamComponent& comp) {
    if (comp.genus != 0 || comp.bottom.size() != 1 || comp.top.size() != 1) return;
    TopCircle& t = comp.top[0];
    if (!t.essential || t.canon != comp.bottom[0].cls) return;
    int sign = comp.bottom[0].sign;
    if (t.orient && *t.orient != sign)
        throw InternalError("incompatible boundary orientation on a vertical annulus");
    t.orient = sign;
}

}  // namespace

std::vector<FoamComponent> foam_components(const Cube& cube, const Gen& g) {
    const CircleSet& cs = cube.circles(g.state);
    std::vector<FoamComponent> comps;
    comps.reserve(cs.circles.size());
    for (size_t k = 0; k < cs.circles.size(); ++k) {
        const Circle& c = cs.circles[k];
        bool bit = cube.mark_bit(g, static_cast<int>(k));
        FoamComponent comp;
        comp.top.push_back(top_circle_of(c));
        if (c.essential) {
            int sign = bit ? -1 : 1;
            comp.bottom.push_back({c.canon, sign});
            comp.top[0].orient = sign;
        } else {
            comp.dots = bit ? 0 : 1;
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

Grading foam_term_grade(const Cube& cube, StateMask state,
                        const std::vector<FoamComponent>& comps) {
    Grading gr;
    const int n = cube.n();
    const int neg = popcount_neg(state, n);
    gr.i = (n - neg) - neg;
    int dots = 0, chi = 0;
    for (const FoamComponent& c : comps) {
        dots += c.dots;
        chi += c.chi();
        for (const BottomCircle& b : c.bottom) add_s(gr.s, b.cls, b.sign);
    }
    gr.j = gr.i + 2 * (2 * dots - chi);
    return gr;
}

Grading foam_grade(const Cube& cube, const Gen& g) {
    return foam_term_grade(cube, g.state, foam_components(cube, g));
}

RawFoam bridge(const Cube& cube, const Gen& g, int p) {
    RawFoam out;
    if (smoothing_at(g.state, p) == Smoothing::Negative) {
        out.state = g.state;
        out.blocked = RawFoam::Block::NegativeSmoothing;
        return out;
    }
    const StateMask flipped = g.state ^ (StateMask{1} << p);
    out.state = flipped;
    const Transition& tr = cube.transition(g.state, p);
    if (tr.kind == Transition::SelfGlue) {
        out.blocked = RawFoam::Block::NOS;
        return out;
    }

    const CircleSet& before = cube.circles(g.state);
    const CircleSet& after = cube.circles(flipped);
    std::vector<FoamComponent> comps = foam_components(cube, g);

    auto comp_over = [&](int circle_id) -> size_t {
        for (size_t k = 0; k < comps.size(); ++k)
            if (comps[k].top.size() == 1 && comps[k].top[0].circle == circle_id) return k;
        throw InternalError("no component over circle");
    };

    if (tr.kind == Transition::Merge) {
        size_t k1 = comp_over(tr.from[0]);
        size_t k2 = comp_over(tr.from[1]);
        const Circle& child = after.by_id(tr.to[0]);
        const FoamComponent &a = comps[k1], &b = comps[k2];
        bool both_oriented = a.top[0].orient && b.top[0].orient;
        if (both_oriented && !child.essential &&
            *a.top[0].orient == *b.top[0].orient) {
            out.blocked = RawFoam::Block::EO;
            return out;
        }
        FoamComponent merged;
        merged.genus = a.genus + b.genus;
        merged.dots = a.dots + b.dots;
        merged.top.push_back(top_circle_of(child));
        if (child.essential && (a.top[0].orient.has_value() != b.top[0].orient.has_value())) {
            // One oriented side: its arcs keep their orientation.
            merged.top[0].orient = a.top[0].orient ? a.top[0].orient : b.top[0].orient;
        }
        merged.bottom = a.bottom;
        merged.bottom.insert(merged.bottom.end(), b.bottom.begin(), b.bottom.end());
        std::vector<FoamComponent> rest;
        for (size_t k = 0; k < comps.size(); ++k)
            if (k != k1 && k != k2) rest.push_back(comps[k]);
        derive_orient(merged);
        rest.push_back(std::move(merged));
        out.components = std::move(rest);
    } else {  // Split
        size_t k0 = comp_over(tr.from[0]);
        FoamComponent split = comps[k0];
        std::optional<int> parent_orient = split.top[0].orient;
        split.top.clear();
        for (int id : tr.to) {
            TopCircle t = top_circle_of(after.by_id(id));
            // Arcs of an oriented parent keep their orientation on an
            // essential child only when the class survives unchanged.
            if (t.essential && parent_orient && tr.to.size() == 2) {
                const Circle& c1 = after.by_id(tr.to[0]);
                const Circle& c2 = after.by_id(tr.to[1]);
                if (c1.essential != c2.essential) t.orient = parent_orient;
            }
            split.top.push_back(std::move(t));
        }
        comps.erase(comps.begin() + static_cast<long>(k0));
        derive_orient(split);
        comps.push_back(std::move(split));
        out.components = std::move(comps);
    }
    return out;
}

namespace {

struct Term {
    long long coeff = 1;
    std::vector<FoamComponent> comps;
};

// Rule ids follow the relation list: 1 two dots, 2 dotless sphere,
// 3 dotted sphere, 4 neck-cutting, 5 NDD, 6 NEC, 7 UTA, 8 BDA.
int match_rule(const FoamComponent& c) {
    if (c.dots >= 2) return 1;
    bool closed = c.boundary_count() == 0;
    if (closed && c.genus == 0 && c.dots == 0) return 2;
    if (closed && c.genus == 0 && c.dots == 1) return 3;
    if (c.has_trivial_top() && !c.is_disk()) return 4;
    if (!closed && !c.has_trivial_top()) {
        if (c.chi() <= 0 && c.dots >= 1) return 5;
        if (c.chi() < 0 && c.dots == 0) return 6;
    }
    if (c.dots == 0 && c.genus == 0 && c.bottom.empty() && c.top.size() == 2 &&
        c.top[0].essential && c.top[1].essential && c.top[0].canon == c.top[1].canon)
        return 7;
    if (c.dots == 0 && c.genus == 0 && c.top.empty() && c.bottom.size() == 2 &&
        c.bottom[0].cls == c.bottom[1].cls && c.bottom[0].sign != c.bottom[1].sign)
        return 8;
    return 0;
}

bool is_normal(const FoamComponent& c) {
    return (c.is_disk() && c.dots <= 1) || c.is_vertical_annulus();
}

FoamComponent disk_over(const TopCircle& t, int dots) {
    FoamComponent d;
    d.dots = dots;
    d.top.push_back(t);
    d.top.back().orient.reset();
    return d;
}

FoamComponent annulus_over(const TopCircle& t, int sign) {
    FoamComponent a;
    a.top.push_back(t);
    a.top.back().orient = sign;
    a.bottom.push_back({t.canon, sign});
    return a;
}

std::string shape_string(const FoamComponent& c) {
    std::string s = "genus=" + std::to_string(c.genus) +
                    " dots=" + std::to_string(c.dots) + " top=[";
    for (const TopCircle& t : c.top) s += t.essential ? "N" : "T";
    s += "] bottom=" + std::to_string(c.bottom.size());
    return s;
}

}  // namespace

ChainSum normalize(const Cube& cube, const RawFoam& raw, NormalizeOptions opts) {
    ChainSum out;
    if (raw.blocked != RawFoam::Block::None) return out;

    std::vector<Term> terms;
    terms.push_back({1, raw.components});

    auto term_grade = [&](const Term& t) {
        return foam_term_grade(cube, raw.state, t.comps);
    };

    // One rewrite step: returns false when no rule matches anywhere.
    auto step = [&]() -> bool {
        struct Match {
            size_t term, comp;
            int rule;
        };
        Match m{0, 0, 0};
        if (opts.rng) {
            std::vector<Match> all;
            for (size_t ti = 0; ti < terms.size(); ++ti)
                for (size_t ci = 0; ci < terms[ti].comps.size(); ++ci)
                    if (int r = match_rule(terms[ti].comps[ci]); r != 0)
                        all.push_back({ti, ci, r});
            if (all.empty()) return false;
            std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
            m = all[pick(*opts.rng)];
        } else {
            bool found = false;
            for (size_t ti = 0; ti < terms.size() && !found; ++ti)
                for (size_t ci = 0; ci < terms[ti].comps.size() && !found; ++ci)
                    if (int r = match_rule(terms[ti].comps[ci]); r != 0) {
                        m = {ti, ci, r};
                        found = true;
                    }
            if (!found) return false;
        }

        Grading before;
        if (opts.check_grading) before = term_grade(terms[m.term]);

        Term& t = terms[m.term];
        FoamComponent& c = t.comps[m.comp];
        std::vector<Term> produced;

        switch (m.rule) {
            case 1:
            case 2:
            case 5:
            case 6:
                terms.erase(terms.begin() + static_cast<long>(m.term));
                break;
            case 3:
            case 8:
                t.comps.erase(t.comps.begin() + static_cast<long>(m.comp));
                produced.push_back(t);
                terms.erase(terms.begin() + static_cast<long>(m.term));
                break;
            case 4: {  // neck-cutting at the first trivial top circle
                size_t ti = 0;
                while (ti < c.top.size() && c.top[ti].essential) ++ti;
                TopCircle cut = c.top[ti];
                FoamComponent rem = c;
                rem.top.erase(rem.top.begin() + static_cast<long>(ti));
                derive_orient(rem);
                Term a;
                a.coeff = t.coeff;
                a.comps = t.comps;
                a.comps.erase(a.comps.begin() + static_cast<long>(m.comp));
                Term b = a;
                a.comps.push_back(disk_over(cut, 1));
                a.comps.push_back(rem);
                rem.dots += 1;
                b.comps.push_back(disk_over(cut, 0));
                b.comps.push_back(rem);
                produced.push_back(std::move(a));
                produced.push_back(std::move(b));
                terms.erase(terms.begin() + static_cast<long>(m.term));
                break;
            }
            case 7: {  // unoriented top annulus = sum of oriented annulus pairs
                TopCircle t1 = c.top[0], t2 = c.top[1];
                Term a;
                a.coeff = t.coeff;
                a.comps = t.comps;
                a.comps.erase(a.comps.begin() + static_cast<long>(m.comp));
                Term b = a;
                a.comps.push_back(annulus_over(t1, 1));
                a.comps.push_back(annulus_over(t2, -1));
                b.comps.push_back(annulus_over(t1, -1));
                b.comps.push_back(annulus_over(t2, 1));
                produced.push_back(std::move(a));
                produced.push_back(std::move(b));
                terms.erase(terms.begin() + static_cast<long>(m.term));
                break;
            }
            default:
                throw InternalError("unknown rewrite rule");
        }

        if (opts.check_grading)
            for (const Term& pt : produced)
                if (term_grade(pt) != before)
                    throw InternalError("rewrite rule changed the grading");
        for (Term& pt : produced) terms.push_back(std::move(pt));
        return true;
    };

    int guard = 0;
    while (step()) {
        if (++guard > 200000) throw InternalError("normalization did not terminate");
    }

    // Collect: every term must now consist of normal-form components covering
    // the state's circles exactly once.
    const CircleSet& cs = cube.circles(raw.state);
    for (const Term& t : terms) {
        Gen g{raw.state, 0};
        std::uint32_t seen = 0;
        for (const FoamComponent& c : t.comps) {
            if (!is_normal(c))
                throw InternalError("unreachable surface shape: " + shape_string(c));
            int pos = cs.pos_of_id(c.top[0].circle);
            if (pos < 0 || (seen & (1u << pos)))
                throw InternalError("normal form does not cover the state circles");
            seen |= (1u << pos);
            bool bit = c.is_disk() ? (c.dots == 0) : (c.bottom[0].sign < 0);
            if (bit) g.marks |= (1u << pos);
        }
        if (seen + 1 != (1u << cs.circles.size()))
            throw InternalError("normal form misses a state circle");
        accumulate(out, g, t.coeff);
    }
    return out;
}

ChainSum foam_partial(const Cube& cube, const Gen& g, int p) {
    return normalize(cube, bridge(cube, g, p));
}

ChainSum foam_differential(const Cube& cube, const Gen& g) {
    ChainSum out;
    for (int p = 0; p < cube.n(); ++p) {
        if (smoothing_at(g.state, p) == Smoothing::Negative) continue;
        long long sign = (neg_after(g.state, cube.n(), p) % 2 == 0) ? 1 : -1;
        accumulate(out, foam_partial(cube, g, p), sign);
    }
    return out;
}

}  // namespace foamho
