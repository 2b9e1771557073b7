#include "foamho/table_cases.hpp"

#include <sstream>

namespace foamho {

namespace {

// Minimal 1-crossing diagrams; all-positive state on the left of each row.
const char* kSplitDisk =
    "surface disk\nedge 0\nedge 1\ncrossing 0 0.1 1.0 1.1 0.0\n";
const char* kSplitAnnulusNN =
    "surface annulus\nedge 0 h1 1\nedge 1 h1 -1\ncrossing 0 0.1 1.0 1.1 0.0\n";
const char* kSplitAnnulusNT =
    "surface annulus\nedge 0 h1 1\nedge 1\ncrossing 0 0.1 1.0 1.1 0.0\n";
const char* kSplitTorusNN =
    "surface torus\nedge 0 h1 1 0\nedge 1 h1 0 1\ncrossing 0 0.1 1.0 1.1 0.0\n";
const char* kMergeDisk =
    "surface disk\nedge 0\nedge 1\ncrossing 0 0.1 0.0 1.1 1.0\n";
const char* kMergeAnnulusNN =
    "surface annulus\nedge 0 h1 1\nedge 1 h1 -1\ncrossing 0 0.1 0.0 1.1 1.0\n";
const char* kMergeTorusNN =
    "surface torus\nedge 0 h1 1 0\nedge 1 h1 0 1\ncrossing 0 0.1 0.0 1.1 1.0\n";
const char* kMergeAnnulusTN =
    "surface annulus\nedge 0 h1 1\nedge 1\ncrossing 0 0.1 0.0 1.1 1.0\n";

}  // namespace

std::vector<TableCase> table_cases() {
    // Marking bits: bit k decorates the k-th circle (sorted by id);
    // 0 = Plus/PlusZero, 1 = Minus/MinusZero. The merge diagrams put the
    // edge-0 circle at bit 0 and the edge-1 circle at bit 1.
    return {
        {1, "T->TT   (+)       -> (+,+)", kSplitDisk, 0b0, {0b00}},
        {2, "T->TT   (-)       -> (+,-)+(-,+)", kSplitDisk, 0b1, {0b10, 0b01}},
        {3, "T->NN   (+)       -> 0", kSplitAnnulusNN, 0b0, {}},
        {4, "T->NN   (-)       -> (+0,-0)+(-0,+0)", kSplitAnnulusNN, 0b1, {0b10, 0b01}},
        {5, "N->NT   (+0)      -> (+0,+)", kSplitAnnulusNT, 0b0, {0b00}},
        {6, "N->NT   (-0)      -> (-0,+)", kSplitAnnulusNT, 0b1, {0b01}},
        {7, "N->NN   (+0)      -> 0", kSplitTorusNN, 0b0, {}},
        {8, "N->NN   (-0)      -> 0", kSplitTorusNN, 0b1, {}},
        {9, "TT->T   (+,+)     -> 0", kMergeDisk, 0b00, {}},
        {10, "TT->T   (+,-)     -> (+)", kMergeDisk, 0b10, {0b0}},
        {11, "TT->T   (-,-)     -> (-)", kMergeDisk, 0b11, {0b1}},
        {12, "NN->T   (+0,+0)   -> 0", kMergeAnnulusNN, 0b00, {}},
        {13, "NN->T   (+0,-0)   -> (+)", kMergeAnnulusNN, 0b10, {0b0}},
        {14, "NN->T   (-0,-0)   -> 0", kMergeAnnulusNN, 0b11, {}},
        {15, "NN->N   (+0,+0)   -> 0", kMergeTorusNN, 0b00, {}},
        {16, "NN->N   (+0,-0)   -> 0", kMergeTorusNN, 0b10, {}},
        {17, "NN->N   (-0,-0)   -> 0", kMergeTorusNN, 0b11, {}},
        // In the TN diagram bit 0 is the essential circle, bit 1 the trivial one.
        {18, "TN->N   (+,+0)    -> 0", kMergeAnnulusTN, 0b00, {}},
        {19, "TN->N   (+,-0)    -> 0", kMergeAnnulusTN, 0b01, {}},
        {20, "TN->N   (-,+0)    -> (+0)", kMergeAnnulusTN, 0b10, {0b0}},
        {21, "TN->N   (-,-0)    -> (-0)", kMergeAnnulusTN, 0b11, {0b1}},
    };
}

std::string render_aps_sum(const Cube& cube, const ChainSum& s) {
    if (s.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : s) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c << "*";
        const CircleSet& cs = cube.circles(g.state);
        out << "(";
        for (size_t k = 0; k < cs.circles.size(); ++k) {
            if (k) out << ",";
            bool bit = cube.mark_bit(g, static_cast<int>(k));
            if (cs.circles[k].essential)
                out << (bit ? "-0" : "+0");
            else
                out << (bit ? "-" : "+");
        }
        out << ")";
    }
    return out.str();
}

std::string render_foam_sum(const Cube& cube, const ChainSum& s) {
    if (s.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : s) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c << "*";
        out << "[";
        std::vector<FoamComponent> comps = foam_components(cube, g);
        for (size_t k = 0; k < comps.size(); ++k) {
            if (k) out << " ";
            const FoamComponent& fc = comps[k];
            if (fc.is_disk())
                out << (fc.dots == 1 ? "disk*" : "disk");
            else
                out << (fc.bottom[0].sign > 0 ? "A+" : "A-");
        }
        out << "]";
    }
    return out.str();
}

std::vector<TableRowResult> run_table_cases() {
    std::vector<TableRowResult> results;
    for (const TableCase& tc : table_cases()) {
        Cube cube(parse_diagram(tc.diagram_text));
        Gen g{0, tc.in_marks};
        ChainSum aps = aps_partial(cube, g, 0);
        ChainSum foam = foam_partial(cube, g, 0);
        ChainSum expected;
        for (std::uint32_t marks : tc.expected_marks)
            accumulate(expected, Gen{1, marks}, 1);
        TableRowResult r;
        r.row = tc.row;
        r.label = tc.label;
        r.aps = render_aps_sum(cube, aps);
        r.foam = render_foam_sum(cube, foam);
        r.expected = render_aps_sum(cube, expected);
        r.match = (aps == foam) && (aps == expected);
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace foamho
