#include "foamho/complex.hpp"

#include <sstream>

namespace foamho {

Grading grade(const Cube& cube, Backend b, const Gen& g) {
    return b == Backend::APS ? aps_grade(cube, g) : foam_grade(cube, g);
}

ChainSum differential(const Cube& cube, Backend b, const Gen& g) {
    return b == Backend::APS ? aps_differential(cube, g) : foam_differential(cube, g);
}

namespace {

std::string grading_string(const Grading& g) {
    std::ostringstream out;
    out << "(" << g.i << "," << g.j << "," << s_string(g.s) << ")";
    return out.str();
}

}  // namespace

GradedComplex assemble_complex(const Cube& cube, Backend b) {
    GradedComplex c;
    for (std::uint64_t t = 0; t < cube.num_states(); ++t) {
        StateMask state = state_from_ordinal(cube.n(), t);
        int m = cube.num_circles(state);
        for (std::uint32_t marks = 0; marks < (std::uint32_t{1} << m); ++marks) {
            Gen g{state, marks};
            Grading gr = grade(cube, b, g);
            auto& bucket = c.basis[gr];
            c.index.emplace(g, std::make_pair(gr, bucket.size()));
            bucket.push_back(g);
        }
    }
    for (const auto& [gr, bucket] : c.basis) {
        Grading target = gr;
        target.i -= 2;
        auto tit = c.basis.find(target);
        size_t rows = tit == c.basis.end() ? 0 : tit->second.size();
        IntMatrix m(rows, bucket.size());
        for (size_t col = 0; col < bucket.size(); ++col) {
            for (const auto& [out_gen, coeff] : differential(cube, b, bucket[col])) {
                auto idx = c.index.find(out_gen);
                if (idx == c.index.end())
                    throw InternalError("differential output is not a basis generator");
                if (idx->second.first != target)
                    throw InternalError("differential term violates degree (i-2,j,s) at " +
                                        grading_string(gr));
                m.at(idx->second.second, col) = coeff;
            }
        }
        c.boundary[gr] = std::move(m);
    }
    return c;
}

D2Report verify_d_squared(const GradedComplex& c) {
    D2Report rep;
    for (const auto& [gr, d1] : c.boundary) {
        Grading target = gr;
        target.i -= 2;
        auto it = c.boundary.find(target);
        if (it == c.boundary.end() || it->second.rows == 0 || d1.cols == 0) continue;
        IntMatrix comp = matmul(it->second, d1);
        for (size_t r = 0; r < comp.rows; ++r)
            for (size_t col = 0; col < comp.cols; ++col)
                if (comp.at(r, col) != 0) {
                    rep.ok = false;
                    std::ostringstream msg;
                    msg << "d^2 != 0 at grading " << grading_string(gr)
                        << " generator " << col << " (entry " << r << ")";
                    rep.failures.push_back(msg.str());
                }
    }
    return rep;
}

std::map<Grading, HomologyGroup> homology(const GradedComplex& c) {
    D2Report rep = verify_d_squared(c);
    if (!rep.ok) throw InternalError(rep.failures.front());

    std::map<Grading, SmithResult> snf;
    for (const auto& [gr, m] : c.boundary) snf[gr] = smith_normal_form(m);

    std::map<Grading, HomologyGroup> out;
    for (const auto& [gr, bucket] : c.basis) {
        Grading source = gr;
        source.i += 2;
        size_t rank_out = snf.at(gr).rank;
        HomologyGroup h;
        size_t rank_in = 0;
        auto sit = snf.find(source);
        if (sit != snf.end()) {
            rank_in = sit->second.rank;
            for (const Int& d : sit->second.divisors)
                if (d > 1) h.torsion.push_back(d);
        }
        h.free_rank = static_cast<long long>(bucket.size()) -
                      static_cast<long long>(rank_out) -
                      static_cast<long long>(rank_in);
        if (h.free_rank < 0) throw InternalError("negative free rank");
        out[gr] = std::move(h);
    }
    return out;
}

std::map<Grading, HomologyGroup> nonzero_homology(const GradedComplex& c) {
    std::map<Grading, HomologyGroup> out;
    for (auto& [gr, h] : homology(c))
        if (h.free_rank != 0 || !h.torsion.empty()) out.emplace(gr, std::move(h));
    return out;
}

}  // namespace foamho
