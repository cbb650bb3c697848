// Multipartite product vectors, mutually orthogonal product-vector sets,
// bipartitions, and coarse-graining across cuts. Sites are 0-indexed.
#pragma once

#include "upbkit/linalg.hpp"

#include <string>
#include <vector>

namespace upbkit {

// Local dimensions d_0..d_{n-1} of an n-site system, n >= 2, each d_m >= 2.
struct SystemShape {
    std::vector<int> local_dims;

    explicit SystemShape(std::vector<int> dims);

    int sites() const { return static_cast<int>(local_dims.size()); }
    int dim(int m) const { return local_dims[static_cast<std::size_t>(m)]; }
    long long total_dim() const;
    // Product of all local dimensions except site m.
    long long dim_excluding(int m) const;

    bool operator==(const SystemShape&) const = default;
};

// Fully product vector: one normalized factor per site.
class ProductVector {
  public:
    explicit ProductVector(std::vector<CVec> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("ProductVector: no factors");
    }

    int sites() const { return static_cast<int>(factors_.size()); }
    const CVec& factor(int m) const { return factors_[static_cast<std::size_t>(m)]; }
    const std::vector<CVec>& factors() const { return factors_; }

    bool matches(const SystemShape& shape) const;

  private:
    std::vector<CVec> factors_;
};

// Kronecker product of the factors at the given sites, ascending site order.
// A single site returns that factor unchanged.
CVec kron_sites(const ProductVector& v, const std::vector<int>& sites);

// Full tensor of all factors in site order.
CVec flatten(const ProductVector& v);

// Sites m with |<a_m|b_m>| <= ortho_tol, ascending. May be empty.
std::vector<int> ortho_sites(const ProductVector& a, const ProductVector& b,
                             const Tolerance& tol = {});

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One offending pair in a failed orthogonality validation: vector indices and
// the per-site overlap magnitudes (all above tolerance).
struct NonOrthogonalPair {
    int i;
    int j;
    std::vector<double> site_overlaps;
};

class NotMutuallyOrthogonal : public std::runtime_error {
  public:
    explicit NotMutuallyOrthogonal(std::vector<NonOrthogonalPair> pairs);
    const std::vector<NonOrthogonalPair>& pairs() const { return pairs_; }

  private:
    std::vector<NonOrthogonalPair> pairs_;
};

// Mutually orthogonal product-vector set. Orthogonality is enforced at
// construction (every pair must share at least one orthogonal site); analysis
// code relies on it and never re-checks.
class ProductVectorSet {
  public:
    const SystemShape& shape() const { return shape_; }
    int size() const { return static_cast<int>(vectors_.size()); }
    const ProductVector& vector(int i) const { return vectors_[static_cast<std::size_t>(i)]; }
    const std::vector<ProductVector>& vectors() const { return vectors_; }

  private:
    ProductVectorSet(SystemShape shape, std::vector<ProductVector> vectors)
        : shape_(std::move(shape)), vectors_(std::move(vectors)) {}
    friend ProductVectorSet validate_set(const SystemShape&, std::vector<ProductVector>,
                                         const Tolerance&);

    SystemShape shape_;
    std::vector<ProductVector> vectors_;
};

// Checks factor dimensions against the shape and pairwise mutual
// orthogonality. Throws DimensionMismatch or NotMutuallyOrthogonal (the
// latter listing every offending pair with per-site overlaps).
ProductVectorSet validate_set(const SystemShape& shape, std::vector<ProductVector> vectors,
                              const Tolerance& tol = {});

// Nonempty proper split of the sites into left (S) and right (complement).
// Canonical form keeps site 0 in left, so each cut has one representation.
class Bipartition {
  public:
    Bipartition(std::vector<int> subset, int n_sites);

    const std::vector<int>& left() const { return left_; }
    const std::vector<int>& right() const { return right_; }
    int sites() const { return static_cast<int>(left_.size() + right_.size()); }

    // e.g. "{0,2}|{1}"
    std::string label() const;

    bool operator==(const Bipartition&) const = default;
    bool operator<(const Bipartition& o) const { return left_ < o.left_; }

  private:
    std::vector<int> left_;
    std::vector<int> right_;
};

// All 2^(n-1) - 1 canonical cuts of an n-site system.
std::vector<Bipartition> all_bipartitions(int n_sites);

// Views the set across a cut as a 2-site set with shape
// (prod_{m in S} d_m, prod_{m in S-bar} d_m); factors are Kronecker products
// in ascending site order. Orthogonality is preserved.
ProductVectorSet coarse_grain(const ProductVectorSet& set, const Bipartition& cut,
                              const Tolerance& tol = {});

// Merges arbitrary site groups (each ascending, jointly a partition of the
// sites) into one site per group; generalizes coarse_grain.
ProductVectorSet group_sites(const ProductVectorSet& set,
                             const std::vector<std::vector<int>>& groups,
                             const Tolerance& tol = {});

}  // namespace upbkit
