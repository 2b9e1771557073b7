#include "foamho/aps.hpp"

#include <algorithm>

namespace foamho {

namespace {

int popcount_neg(StateMask m, int n) {
    int c = 0;
    for (int q = 0; q < n; ++q)
        if (smoothing_at(m, q) == Smoothing::Negative) ++c;
    return c;
}

// Builds the marks word of a generator on the flipped state: untouched
// circles keep their marks; circles listed in `assign` get explicit bits.
Gen remap_gen(const Cube& cube, const Gen& src, StateMask new_state,
              const std::vector<int>& involved_old,
              const std::map<int, bool>& assign) {
    const CircleSet& before = cube.circles(src.state);
    const CircleSet& after = cube.circles(new_state);
    Gen out{new_state, 0};
    for (size_t k = 0; k < after.circles.size(); ++k) {
        int id = after.circles[k].id;
        bool bit;
        auto it = assign.find(id);
        if (it != assign.end()) {
            bit = it->second;
        } else {
            int old_pos = before.pos_of_id(id);
            if (old_pos < 0 ||
                std::find(involved_old.begin(), involved_old.end(), id) != involved_old.end())
                throw InternalError("circle bookkeeping mismatch in partial");
            bit = cube.mark_bit(src, old_pos);
        }
        if (bit) out.marks |= (1u << k);
    }
    return out;
}

}  // namespace

Grading aps_grade(const Cube& cube, const Gen& g) {
    Grading gr;
    const int n = cube.n();
    const int neg = popcount_neg(g.state, n);
    gr.i = (n - neg) - neg;
    const CircleSet& cs = cube.circles(g.state);
    int plus = 0, minus = 0;
    for (size_t k = 0; k < cs.circles.size(); ++k) {
        const Circle& c = cs.circles[k];
        bool bit = cube.mark_bit(g, static_cast<int>(k));
        if (c.essential) {
            add_s(gr.s, c.canon, bit ? -1 : 1);
        } else {
            (bit ? minus : plus) += 1;
        }
    }
    gr.j = gr.i + 2 * (plus - minus);
    return gr;
}

ChainSum aps_partial(const Cube& cube, const Gen& g, int p) {
    ChainSum out;
    if (smoothing_at(g.state, p) == Smoothing::Negative) return out;
    const StateMask flipped = g.state ^ (StateMask{1} << p);
    const Transition& tr = cube.transition(g.state, p);
    const CircleSet& before = cube.circles(g.state);
    const CircleSet& after = cube.circles(flipped);

    auto mark_of = [&](int circle_id) {
        return cube.mark_bit(g, before.pos_of_id(circle_id));  // true = Minus/MinusZero
    };
    auto emit = [&](const std::map<int, bool>& assign, long long coeff) {
        accumulate(out, remap_gen(cube, g, flipped, tr.from, assign), coeff);
    };

    switch (tr.kind) {
        case Transition::SelfGlue:
            return out;
        case Transition::Split: {
            const Circle& parent = before.by_id(tr.from[0]);
            const Circle& c1 = after.by_id(tr.to[0]);
            const Circle& c2 = after.by_id(tr.to[1]);
            bool minus = mark_of(parent.id);
            if (!parent.essential) {
                if (!c1.essential && !c2.essential) {
                    // T -> TT
                    if (!minus) {
                        emit({{c1.id, false}, {c2.id, false}}, 1);
                    } else {
                        emit({{c1.id, false}, {c2.id, true}}, 1);
                        emit({{c1.id, true}, {c2.id, false}}, 1);
                    }
                } else if (c1.essential && c2.essential) {
                    // T -> NN
                    if (minus) {
                        emit({{c1.id, false}, {c2.id, true}}, 1);
                        emit({{c1.id, true}, {c2.id, false}}, 1);
                    }
                } else {
                    throw InternalError("trivial circle split into mixed kinds");
                }
            } else {
                if (c1.essential != c2.essential) {
                    // N -> NT: the essential child keeps the mark, trivial gets Plus.
                    const Circle& ess = c1.essential ? c1 : c2;
                    const Circle& triv = c1.essential ? c2 : c1;
                    emit({{ess.id, minus}, {triv.id, false}}, 1);
                }
                // N -> NN contributes nothing.
            }
            return out;
        }
        case Transition::Merge: {
            const Circle& p1 = before.by_id(tr.from[0]);
            const Circle& p2 = before.by_id(tr.from[1]);
            const Circle& child = after.by_id(tr.to[0]);
            bool m1 = mark_of(p1.id), m2 = mark_of(p2.id);
            if (!p1.essential && !p2.essential) {
                // TT -> T: (+,+) -> 0; (+,-) -> +; (-,-) -> -.
                if (m1 || m2) emit({{child.id, m1 && m2}}, 1);
            } else if (p1.essential && p2.essential) {
                if (!child.essential) {
                    // NN -> T: opposite marks give Plus, equal marks vanish.
                    if (m1 != m2) emit({{child.id, false}}, 1);
                }
                // NN -> N contributes nothing.
            } else {
                // TN -> N: Plus on the trivial side kills the term.
                bool triv_mark = p1.essential ? m2 : m1;
                bool ess_mark = p1.essential ? m1 : m2;
                if (child.essential) {
                    if (triv_mark) emit({{child.id, ess_mark}}, 1);
                } else {
                    throw InternalError("TN merge produced a trivial circle");
                }
            }
            return out;
        }
    }
    return out;
}

ChainSum aps_differential(const Cube& cube, const Gen& g) {
    ChainSum out;
    for (int p = 0; p < cube.n(); ++p) {
        if (smoothing_at(g.state, p) == Smoothing::Negative) continue;
        long long sign = (neg_after(g.state, cube.n(), p) % 2 == 0) ? 1 : -1;
        accumulate(out, aps_partial(cube, g, p), sign);
    }
    return out;
}

}  // namespace foamho
