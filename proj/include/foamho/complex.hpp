#pragma once

#include <map>
#include <string>
#include <vector>

#include "foamho/aps.hpp"
#include "foamho/foam.hpp"
#include "foamho/grading.hpp"
#include "foamho/snf.hpp"

namespace foamho {

enum class Backend { APS, Foam };

Grading grade(const Cube& cube, Backend b, const Gen& g);
ChainSum differential(const Cube& cube, Backend b, const Gen& g);

// Per-grading chain groups with integer boundary matrices
// d : C_{i,j,s} -> C_{i-2,j,s}, keyed by the source grading.
struct GradedComplex {
    std::map<Grading, std::vector<Gen>> basis;
    std::map<Grading, IntMatrix> boundary;
    std::map<Gen, std::pair<Grading, size_t>> index;

    size_t dim(const Grading& g) const {
        auto it = basis.find(g);
        return it == basis.end() ? 0 : it->second.size();
    }
};

GradedComplex assemble_complex(const Cube& cube, Backend b);

struct HomologyGroup {
    long long free_rank = 0;
    std::vector<Int> torsion;  // divisors >= 2, each dividing the next
};

struct D2Report {
    bool ok = true;
    std::vector<std::string> failures;
};

D2Report verify_d_squared(const GradedComplex& c);

// Throws InternalError when d^2 != 0.
std::map<Grading, HomologyGroup> homology(const GradedComplex& c);

// Drops zero groups; what the CLI prints.
std::map<Grading, HomologyGroup> nonzero_homology(const GradedComplex& c);

}  // namespace foamho
