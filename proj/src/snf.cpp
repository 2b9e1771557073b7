#include "foamho/snf.hpp"

#include <algorithm>

namespace foamho {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
    SmithResult res;
    size_t t = 0;  // current corner
    while (t < m.rows && t < m.cols) {
        // Find the entry of smallest absolute value in the remaining block.
        size_t pr = t, pc = t;
        Int best = 0;
        for (size_t r = t; r < m.rows; ++r)
            for (size_t c = t; c < m.cols; ++c) {
                const Int& v = m.at(r, c);
                if (v == 0) continue;
                Int a = abs_int(v);
                if (best == 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (best == 0) break;  // remaining block is zero

        for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
        for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

        bool clean = true;
        for (size_t r = t + 1; r < m.rows; ++r) {
            if (m.at(r, t) == 0) continue;
            Int q = m.at(r, t) / m.at(t, t);
            for (size_t c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
            if (m.at(r, t) != 0) clean = false;
        }
        for (size_t c = t + 1; c < m.cols; ++c) {
            if (m.at(t, c) == 0) continue;
            Int q = m.at(t, c) / m.at(t, t);
            for (size_t r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
            if (m.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // pivot shrank; redo this corner

        // Pivot must divide every entry of the remaining block; if not, fold
        // an offending row into the pivot row and restart the corner.
        bool divides = true;
        for (size_t r = t + 1; r < m.rows && divides; ++r)
            for (size_t c = t + 1; c < m.cols; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    for (size_t k = t; k < m.cols; ++k) m.at(t, k) += m.at(r, k);
                    divides = false;
                    break;
                }
        if (!divides) continue;

        if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
        res.divisors.push_back(m.at(t, t));
        ++t;
    }
    res.rank = res.divisors.size();
    return res;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows, b.cols);
    for (size_t r = 0; r < a.rows; ++r)
        for (size_t k = 0; k < a.cols; ++k) {
            const Int& v = a.at(r, k);
            if (v == 0) continue;
            for (size_t c = 0; c < b.cols; ++c) out.at(r, c) += v * b.at(k, c);
        }
    return out;
}

}  // namespace foamho
