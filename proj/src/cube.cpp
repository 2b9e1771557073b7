#include "foamho/cube.hpp"

#include <string>

namespace foamho {

Cube::Cube(Diagram d, int cap) : d_(std::move(d)) {
    if (d_.n() > cap)
        throw CapExceeded("diagram has " + std::to_string(d_.n()) +
                          " crossings, cap is " + std::to_string(cap));
    const std::uint64_t states = num_states();
    circles_.reserve(states);
    trans_.reserve(states);
    for (std::uint64_t m = 0; m < states; ++m)
        circles_.push_back(resolve_state(d_, static_cast<StateMask>(m)));
    for (std::uint64_t m = 0; m < states; ++m) {
        std::vector<Transition> row;
        row.reserve(static_cast<size_t>(n()));
        for (int p = 0; p < n(); ++p)
            row.push_back(classify_transition(d_, static_cast<StateMask>(m), p));
        trans_.push_back(std::move(row));
    }
}

}  // namespace foamho
