#include "foamho/grading.hpp"

#include <sstream>

namespace foamho {

std::string s_string(const std::map<H1, int>& s) {
    if (s.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [cls, coeff] : s) {
        if (!first) out << " ";
        first = false;
        out << (coeff >= 0 ? "+" : "-") << (coeff >= 0 ? coeff : -coeff) << "[";
        for (size_t k = 0; k < cls.size(); ++k) {
            if (k) out << ",";
            out << cls[k];
        }
        out << "]";
    }
    return out.str();
}

}  // namespace foamho
