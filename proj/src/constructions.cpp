#include "upbkit/constructions.hpp"

#include <algorithm>

namespace upbkit {

ProductVectorSet shifts(const Tolerance& tol) {
    const CVec zero{1.0, 0.0};
    const CVec one{0.0, 1.0};
    const CVec plus{1.0, 1.0};
    const CVec minus{1.0, -1.0};
    std::vector<ProductVector> v;
    v.emplace_back(std::vector<CVec>{zero, zero, zero});
    v.emplace_back(std::vector<CVec>{one, plus, minus});
    v.emplace_back(std::vector<CVec>{minus, one, plus});
    v.emplace_back(std::vector<CVec>{plus, minus, one});
    return validate_set(SystemShape({2, 2, 2}), std::move(v), tol);
}

ProductVectorSet flag_construction(const std::vector<ProductVectorSet>& bases,
                                   const Tolerance& tol) {
    if (bases.size() < 2)
        throw std::invalid_argument("flag_construction: need at least 2 input sets");
    const SystemShape& inner = bases.front().shape();
    for (const auto& b : bases)
        if (!(b.shape() == inner))
            throw DimensionMismatch("flag_construction: input sets must share one shape");
    const int m = static_cast<int>(bases.size());
    std::vector<int> dims{m};
    dims.insert(dims.end(), inner.local_dims.begin(), inner.local_dims.end());
    std::vector<ProductVector> out;
    for (int i = 0; i < m; ++i)
        for (const ProductVector& v : bases[static_cast<std::size_t>(i)].vectors()) {
            std::vector<CVec> factors{CVec::basis(m, i)};
            factors.insert(factors.end(), v.factors().begin(), v.factors().end());
            out.emplace_back(std::move(factors));
        }
    return validate_set(SystemShape(std::move(dims)), std::move(out), tol);
}

FlagWitness flag_witness(const std::vector<ProductVectorSet>& bases, const Tolerance& tol) {
    const ProductVectorSet flagged = flag_construction(bases, tol);
    std::vector<CVec> span_of_first;
    for (const ProductVector& v : bases.front().vectors()) span_of_first.push_back(flatten(v));
    const SubspaceBasis span =
        span_basis(span_of_first, static_cast<int>(bases.front().shape().total_dim()), tol);
    const SubspaceBasis comp = orthocomplement(span, tol);
    if (comp.rank() == 0)
        throw std::invalid_argument("flag_witness: input set 0 spans its whole space");
    const CVec flag_part = CVec::basis(static_cast<int>(bases.size()), 0);
    const CVec bulk_part = comp.basis().front();
    std::vector<int> inner_sites;
    for (int j = 1; j <= bases.front().shape().sites(); ++j) inner_sites.push_back(j);
    double max_overlap = 0.0;
    for (const ProductVector& v : flagged.vectors()) {
        const double o = std::abs(inner(flag_part, v.factor(0))) *
                         std::abs(inner(bulk_part, kron_sites(v, inner_sites)));
        max_overlap = std::max(max_overlap, o);
    }
    if (max_overlap > tol.ortho_tol)
        throw std::logic_error("flag_witness: constructed witness failed validation");
    return FlagWitness{flag_part, bulk_part, max_overlap};
}

ProductVectorSet tensor_construction(const ProductVectorSet& a, const ProductVectorSet& b,
                                     const Tolerance& tol) {
    std::vector<int> dims = a.shape().local_dims;
    dims.insert(dims.end(), b.shape().local_dims.begin(), b.shape().local_dims.end());
    std::vector<ProductVector> out;
    out.reserve(static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()));
    for (const ProductVector& va : a.vectors())
        for (const ProductVector& vb : b.vectors()) {
            std::vector<CVec> factors = va.factors();
            factors.insert(factors.end(), vb.factors().begin(), vb.factors().end());
            out.emplace_back(std::move(factors));
        }
    return validate_set(SystemShape(std::move(dims)), std::move(out), tol);
}

ProductVectorSet grouping_reduction(const ProductVectorSet& set,
                                    const std::vector<std::vector<int>>& groups,
                                    const Tolerance& tol) {
    return group_sites(set, groups, tol);
}

}  // namespace upbkit
