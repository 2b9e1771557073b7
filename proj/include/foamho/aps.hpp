#pragma once

#include "foamho/cube.hpp"
#include "foamho/grading.hpp"

namespace foamho {

// Enhanced-state backend: the differential is read off the merge/split table
// directly, with the trivial/essential kind of every circle deciding the row.

Grading aps_grade(const Cube& cube, const Gen& g);

// The partial differential at crossing p: zero unless p is smoothed
// positively; otherwise flips p to negative and applies the table row picked
// by the transition kind and the markings of the circles involved.
ChainSum aps_partial(const Cube& cube, const Gen& g, int p);

// Signed sum of partials over all positively smoothed crossings.
ChainSum aps_differential(const Cube& cube, const Gen& g);

}  // namespace foamho
