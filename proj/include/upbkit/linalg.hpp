// Tolerance-aware dense complex linear algebra: inner products, numerical
// rank, orthonormal span bases, orthocomplements, Kronecker products.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace upbkit {

using Complex = std::complex<double>;

// Numerical policy for orthogonality and rank decisions.
//   ortho_tol: absolute bound on |<u|v>| for normalized vectors to count as
//              orthogonal.
//   rank_tol:  singular values below rank_tol * sigma_max are treated as zero.
struct Tolerance {
    double ortho_tol = 1e-9;
    double rank_tol = 1e-9;

    Tolerance() = default;
    Tolerance(double ortho, double rank) : ortho_tol(ortho), rank_tol(rank) {
        if (!(ortho > 0.0) || !(rank > 0.0) || ortho >= 1e-3 || rank >= 1e-3)
            throw std::invalid_argument("Tolerance: values must be in (0, 1e-3)");
    }
};

// Normalized complex vector. Construction normalizes; a zero or non-finite
// input is rejected.
class CVec {
  public:
    explicit CVec(Eigen::VectorXcd v) : v_(std::move(v)) {
        if (v_.size() == 0) throw std::invalid_argument("CVec: empty vector");
        const double n = v_.norm();
        if (!std::isfinite(n) || n == 0.0)
            throw std::invalid_argument("CVec: vector must have finite nonzero norm");
        v_ /= n;
    }
    CVec(std::initializer_list<Complex> entries)
        : CVec(Eigen::Map<const Eigen::VectorXcd>(std::data(entries),
                                                  static_cast<Eigen::Index>(entries.size()))) {}

    // Computational basis vector |index> in the given dimension.
    static CVec basis(int dim, int index);

    // Wraps a vector already known to be unit (norm within 1e-12 of 1),
    // skipping the normalizing division so exact entries stay exact.
    static CVec from_unit(Eigen::VectorXcd v);

    int dim() const { return static_cast<int>(v_.size()); }
    const Eigen::VectorXcd& vec() const { return v_; }
    Complex operator[](int i) const { return v_(i); }

  private:
    struct unit_tag {};
    CVec(Eigen::VectorXcd v, unit_tag) : v_(std::move(v)) {}
    Eigen::VectorXcd v_;
};

// <a|b> with conjugation on the first argument. Throws on dimension mismatch.
Complex inner(const CVec& a, const CVec& b);

// Kronecker product, entries in lexicographic order: out[i*b.dim()+j] = a[i]*b[j].
CVec kron(const CVec& a, const CVec& b);

// Orthonormal basis of a subspace of C^ambient_dim. The basis may be empty
// (the zero-dimensional subspace). Orthonormality is checked at construction.
class SubspaceBasis {
  public:
    SubspaceBasis(int ambient_dim, std::vector<CVec> basis, const Tolerance& tol = {});

    int ambient_dim() const { return ambient_dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<CVec>& basis() const { return basis_; }

    // Column matrix of the basis vectors (ambient_dim x rank).
    Eigen::MatrixXcd matrix() const;

  private:
    int ambient_dim_;
    std::vector<CVec> basis_;
};

// Orthonormal basis of span(vectors); rank decided by rank_tol on singular
// values. The empty list yields the zero-dimensional subspace.
SubspaceBasis span_basis(const std::vector<CVec>& vectors, int ambient_dim,
                         const Tolerance& tol = {});
// Convenience overload inferring the ambient dimension; input must be nonempty.
SubspaceBasis span_basis(const std::vector<CVec>& vectors, const Tolerance& tol = {});

// Basis of the orthogonal complement; ranks sum to the ambient dimension.
SubspaceBasis orthocomplement(const SubspaceBasis& s, const Tolerance& tol = {});

// Numerical rank of a set of vectors (singular-value count above threshold).
int numeric_rank(const std::vector<CVec>& vectors, const Tolerance& tol = {});

// Haar-ish random unit vector (complex Gaussian entries, normalized).
CVec random_unit(int dim, std::mt19937_64& rng);

// Random unit vector inside the subspace spanned by `s` (uniform combination
// of the basis). Throws if the subspace is zero-dimensional.
CVec random_unit_in(const SubspaceBasis& s, std::mt19937_64& rng);

// Haar random unitary via QR of a complex Ginibre matrix.
Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng);

}  // namespace upbkit
