// Shared fixtures and independent oracles for the test binaries.
#pragma once

#include "upbkit/constructions.hpp"
#include "upbkit/extendibility.hpp"
#include "upbkit/linalg.hpp"
#include "upbkit/product_states.hpp"
#include "upbkit/prover.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using namespace upbkit;

inline CVec e(int dim, int i) { return CVec::basis(dim, i); }
inline CVec plus_state() { return CVec{1.0, 1.0}; }
inline CVec minus_state() { return CVec{1.0, -1.0}; }
inline CVec qubit_dir(double t) { return CVec{std::cos(t), std::sin(t)}; }
inline CVec qubit_perp(double t) { return CVec{-std::sin(t), std::cos(t)}; }

inline ProductVector pv(std::vector<CVec> factors) { return ProductVector(std::move(factors)); }

// |i0>|i1>...|i{n-1}> over every index tuple of the shape.
inline ProductVectorSet complete_basis(const SystemShape& shape, const Tolerance& tol = {}) {
    std::vector<ProductVector> vs;
    std::vector<int> idx(static_cast<std::size_t>(shape.sites()), 0);
    while (true) {
        std::vector<CVec> factors;
        for (int m = 0; m < shape.sites(); ++m)
            factors.push_back(CVec::basis(shape.dim(m), idx[static_cast<std::size_t>(m)]));
        vs.push_back(ProductVector(std::move(factors)));
        int m = shape.sites() - 1;
        while (m >= 0) {
            const auto um = static_cast<std::size_t>(m);
            if (++idx[um] < shape.dim(m)) break;
            idx[um] = 0;
            --m;
        }
        if (m < 0) break;
    }
    return validate_set(shape, std::move(vs), tol);
}

// Worst |<w|v_i>| over the flattened set.
inline double witness_overlap(const CVec& w, const ProductVectorSet& set) {
    double worst = 0.0;
    for (int i = 0; i < set.size(); ++i)
        worst = std::max(worst, std::abs(inner(w, flatten(set.vector(i)))));
    return worst;
}

// Exhaustive 2^k oracle for the bipartite partition criterion: some split
// (B1, B2) with B1's left factors and B2's right factors both rank-deficient.
inline bool brute_force_bipartite(const ProductVectorSet& set, const Tolerance& tol = {}) {
    const int k = set.size();
    const int d0 = set.shape().dim(0);
    const int d1 = set.shape().dim(1);
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        std::vector<CVec> left, right;
        for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1ul)
                left.push_back(set.vector(i).factor(0));
            else
                right.push_back(set.vector(i).factor(1));
        }
        if (numeric_rank(left, tol) < d0 && numeric_rank(right, tol) < d1) return true;
    }
    return false;
}

// Six 3-qubit vectors whose same-site orthogonal-neighbor counts are all
// exactly 2 = ceil((6-1)/3), the pigeonhole minimum: three vector pairs, each
// pair separated on one site and separating the other two pairs there.
inline ProductVectorSet minimal_degree_qubit_set(const Tolerance& tol = {}) {
    const CVec z0 = e(2, 0), z1 = e(2, 1);
    const CVec a = qubit_dir(0.7), ap = qubit_perp(0.7);
    const CVec b = qubit_dir(0.9), bp = qubit_perp(0.9);
    const CVec c = qubit_dir(1.1), cp = qubit_perp(1.1);
    std::vector<ProductVector> vs;
    vs.push_back(pv({z0, z0, c}));
    vs.push_back(pv({z0, z0, cp}));
    vs.push_back(pv({z1, b, z0}));
    vs.push_back(pv({z1, bp, z0}));
    vs.push_back(pv({a, z1, z1}));
    vs.push_back(pv({ap, z1, z1}));
    return validate_set(SystemShape({2, 2, 2}), std::move(vs), tol);
}

// Thirteen vectors over (3,3,3): distinct cells of the 3x3x3 grid realized
// with one rotated orthonormal basis per site, so ortho_sites(i,j) is exactly
// the coordinates where the cells differ. Exceeds the baseline guarantee
// regime (12) but keeps vertex 0 with five same-site neighbors on site 0.
inline ProductVectorSet high_degree_cell_set(const Tolerance& tol = {}) {
    const std::vector<std::array<int, 3>> cells = {
        {0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {2, 1, 0}, {1, 2, 0}, {0, 0, 1},
        {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 2, 0}, {0, 2, 1}};
    std::mt19937_64 rng(20240817);
    std::vector<Eigen::MatrixXcd> site_basis;
    for (int m = 0; m < 3; ++m) site_basis.push_back(random_unitary(3, rng));
    std::vector<ProductVector> vs;
    for (const auto& cell : cells) {
        std::vector<CVec> factors;
        for (int m = 0; m < 3; ++m)
            factors.push_back(CVec::from_unit(site_basis[static_cast<std::size_t>(m)].col(cell[static_cast<std::size_t>(m)])));
        vs.push_back(ProductVector(std::move(factors)));
    }
    return validate_set(SystemShape({3, 3, 3}), std::move(vs), tol);
}

}  // namespace testutil
