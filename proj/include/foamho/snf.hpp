#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace foamho {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.
struct IntMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}

    Int& at(size_t r, size_t c) { return data[r * cols + c]; }
    const Int& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

struct SmithResult {
    std::vector<Int> divisors;  // nonzero diagonal entries d1 | d2 | ..., all > 0
    size_t rank = 0;            // = divisors.size()
};

// Smith normal form over the integers (divisors only; transforms discarded).
SmithResult smith_normal_form(IntMatrix m);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

}  // namespace foamho
