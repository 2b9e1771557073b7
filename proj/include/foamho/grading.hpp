#pragma once

#include <compare>
#include <map>
#include <string>

#include "foamho/diagram.hpp"

namespace foamho {

// The triple grading: i = signed smoothing count, j = quantum grading,
// s = formal signed sum of canonical essential curve classes (no zero
// coefficients stored).
struct Grading {
    int i = 0;
    int j = 0;
    std::map<H1, int> s;
    friend auto operator<=>(const Grading&, const Grading&) = default;
};

inline void add_s(std::map<H1, int>& s, const H1& canon, int coeff) {
    auto it = s.find(canon);
    if (it == s.end()) {
        if (coeff != 0) s.emplace(canon, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) s.erase(it);
}

// Canonical text form, e.g. "0" or "+1[1] -2[0,1]"; terms sorted by class.
std::string s_string(const std::map<H1, int>& s);

}  // namespace foamho
