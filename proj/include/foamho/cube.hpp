#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "foamho/diagram.hpp"

namespace foamho {

// A chain-group generator, shared by both backends: the decoration bit of the
// k-th circle (circles sorted by id) reads as
//   bit 0: Plus / PlusZero  (APS)  ==  dotted disk / positively oriented
//          vertical annulus (foam),
//   bit 1: Minus / MinusZero  ==  plain disk / negatively oriented annulus.
struct Gen {
    StateMask state = 0;
    std::uint32_t marks = 0;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

using ChainSum = std::map<Gen, long long>;

inline void accumulate(ChainSum& acc, const Gen& g, long long c) {
    auto it = acc.find(g);
    if (it == acc.end()) {
        if (c != 0) acc.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second == 0) acc.erase(it);
}

inline void accumulate(ChainSum& acc, const ChainSum& other, long long scale = 1) {
    for (const auto& [g, c] : other) accumulate(acc, g, scale * c);
}

// Number of crossings strictly after p that the state smooths negatively;
// the sign of the p-th partial in the differential is (-1)^neg_after.
inline int neg_after(StateMask m, int n, int p) {
    int t = 0;
    for (int q = p + 1; q < n; ++q)
        if (smoothing_at(m, q) == Smoothing::Negative) ++t;
    return t;
}

// Caches circle sets and transitions for all 2^n states of a diagram.
class Cube {
public:
    explicit Cube(Diagram d, int cap = 16);

    const Diagram& diagram() const { return d_; }
    int n() const { return d_.n(); }
    std::uint64_t num_states() const { return std::uint64_t{1} << n(); }

    const CircleSet& circles(StateMask s) const { return circles_[s]; }
    // Flip of crossing p (in either direction), classified.
    const Transition& transition(StateMask s, int p) const {
        return trans_[s][static_cast<size_t>(p)];
    }

    int num_circles(StateMask s) const {
        return static_cast<int>(circles(s).circles.size());
    }
    bool mark_bit(const Gen& g, int circle_pos) const {
        return (g.marks >> circle_pos) & 1u;
    }

private:
    Diagram d_;
    std::vector<CircleSet> circles_;
    std::vector<std::vector<Transition>> trans_;
};

}  // namespace foamho
