#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foamho/complex.hpp"

namespace foamho {

struct Report {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// The translation between enhanced states and normal-form foams: Plus <->
// dotted disk, Minus <-> plain disk, PlusZero/MinusZero <-> positively /
// negatively oriented vertical annulus. Both backends share the Gen encoding
// with exactly this dictionary, so Phi is the identity on Gen; its content
// lives in the decorated-surface realisation.
inline Gen phi(const Gen& g) { return g; }
std::vector<FoamComponent> phi_foam(const Cube& cube, const Gen& g);

// Phi o aps_partial == foam_partial o Phi for every generator and crossing,
// and the signed totals agree.
Report verify_chain_map(const Cube& cube);

// aps_grade == foam_grade(phi) in all three indices, plus degree (i-2,j,s)
// of every differential term, for both backends.
Report verify_grading_preservation(const Cube& cube);

// D_p keeps crossing p; D_infty / D_zero smooth it Negative / Positive and
// delete it (remaining crossings keep their relative order).
struct SkeinTriple {
    int p = 0;
    SmoothedDiagram sm_infty;
    SmoothedDiagram sm_zero;
    Cube cube_p;
    Cube cube_infty;
    Cube cube_zero;

    SkeinTriple(const Diagram& d, int p, int cap = 16);
};

// For each circle position of `sub` (a state of the smoothed diagram), the
// position of the matching circle in `par` (the corresponding parent state).
std::vector<int> circle_correspondence(const Diagram& parent, const SmoothedDiagram& sd,
                                       const CircleSet& sub, const CircleSet& par);

// alpha: C_{i,j,s}(D_infty) -> C_{i-1,j-1,s}(D_p); re-inserts p smoothed
// Negative with sign (-1)^{# crossings before p smoothed Negative}.
struct SignedGen {
    Gen gen;
    long long sign = 1;
};
SignedGen alpha(const SkeinTriple& t, const Gen& g);

// beta: C(D_p) -> C(D_zero); kills generators Negative at p.
std::optional<Gen> beta(const SkeinTriple& t, const Gen& g);

// Exactness of 0 -> C(D_infty) -> C(D_p) -> C(D_zero) -> 0 per grading, plus
// alpha/beta commuting with the differentials of the given backend.
Report verify_exactness(const SkeinTriple& t, Backend b);

}  // namespace foamho
