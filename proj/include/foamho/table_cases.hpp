#pragma once

#include <string>
#include <vector>

#include "foamho/complex.hpp"

namespace foamho {

// The 21 merge/split marking cases, each realised on a minimal synthetic
// 1-crossing diagram: the input generator sits on the all-positive state and
// the bridge is placed at the unique crossing.
struct TableCase {
    int row = 0;
    std::string label;          // e.g. "T->TT  +"
    std::string diagram_text;   // .dg source of the synthetic diagram
    std::uint32_t in_marks = 0;
    std::vector<std::uint32_t> expected_marks;  // terms on the flipped state
};

std::vector<TableCase> table_cases();

struct TableRowResult {
    int row = 0;
    std::string label;
    std::string aps;       // rendered APS partial
    std::string foam;      // rendered normalized foam partial
    std::string expected;  // rendered expected sum
    bool match = false;
};

std::vector<TableRowResult> run_table_cases();

// Rendering used by both the CLI and the tests.
std::string render_aps_sum(const Cube& cube, const ChainSum& s);
std::string render_foam_sum(const Cube& cube, const ChainSum& s);

}  // namespace foamho
