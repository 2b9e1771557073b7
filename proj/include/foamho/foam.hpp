#pragma once

#include <optional>
#include <random>
#include <vector>

#include "foamho/cube.hpp"
#include "foamho/grading.hpp"

namespace foamho {

// Foam backend: generators are normal-form decorated surfaces (disks with at
// most one dot over trivial circles, oriented vertical annuli over essential
// circles); the partial differential places a bridge and rewrites the result
// back into normal form with the skein relations.

struct TopCircle {
    int circle = -1;     // circle id in the foam's state
    bool essential = false;
    H1 canon;            // canonical class when essential
    // Boundary orientation relative to the canonical class, when determined.
    std::optional<int> orient;
    friend auto operator<=>(const TopCircle&, const TopCircle&) = default;
};

struct BottomCircle {
    H1 cls;   // canonical class
    int sign = 1;
    friend auto operator<=>(const BottomCircle&, const BottomCircle&) = default;
};

struct FoamComponent {
    int genus = 0;
    int dots = 0;
    std::vector<TopCircle> top;
    std::vector<BottomCircle> bottom;

    int boundary_count() const {
        return static_cast<int>(top.size() + bottom.size());
    }
    int chi() const { return 2 - 2 * genus - boundary_count(); }

    bool is_disk() const {
        return genus == 0 && bottom.empty() && top.size() == 1 && !top[0].essential;
    }
    bool is_vertical_annulus() const {
        return genus == 0 && dots == 0 && bottom.size() == 1 && top.size() == 1 &&
               top[0].essential && top[0].canon == bottom[0].cls;
    }
    bool has_trivial_top() const {
        for (const TopCircle& t : top)
            if (!t.essential) return true;
        return false;
    }
};

struct RawFoam {
    enum class Block { None, NegativeSmoothing, EO, NOS };
    StateMask state = 0;
    Block blocked = Block::None;
    std::vector<FoamComponent> components;  // absent when blocked
};

// Decorated-surface realisation of a generator.
std::vector<FoamComponent> foam_components(const Cube& cube, const Gen& g);

Grading foam_grade(const Cube& cube, const Gen& g);

// Grading of an arbitrary (possibly non-normal) term with the given state.
Grading foam_term_grade(const Cube& cube, StateMask state,
                        const std::vector<FoamComponent>& comps);

// Places a bridge at crossing p; blocking is a value, not an error.
RawFoam bridge(const Cube& cube, const Gen& g, int p);

struct NormalizeOptions {
    std::mt19937* rng = nullptr;  // when set, rewrite steps pick random matches
    bool check_grading = false;   // verify every rule application preserves (i,j,s)
};

// Rewrites a raw foam to a sum of normal-form generators; a blocked foam
// normalizes to the empty sum. Throws InternalError on an unreachable shape.
ChainSum normalize(const Cube& cube, const RawFoam& raw, NormalizeOptions opts = {});

ChainSum foam_partial(const Cube& cube, const Gen& g, int p);
ChainSum foam_differential(const Cube& cube, const Gen& g);

}  // namespace foamho
