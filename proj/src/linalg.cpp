#include "upbkit/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace upbkit {

CVec CVec::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim)
        throw std::invalid_argument("CVec::basis: index out of range");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(index) = 1.0;
    return CVec(std::move(v), unit_tag{});
}

CVec CVec::from_unit(Eigen::VectorXcd v) {
    const double n = v.norm();
    if (std::abs(n - 1.0) > 1e-12)
        throw std::invalid_argument("CVec::from_unit: vector is not unit norm");
    return CVec(std::move(v), unit_tag{});
}

Complex inner(const CVec& a, const CVec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    return a.vec().dot(b.vec());  // Eigen's dot conjugates the left factor
}

CVec kron(const CVec& a, const CVec& b) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) out(static_cast<Eigen::Index>(i) * b.dim() + j) = a[i] * b[j];
    // product of unit vectors is unit; skip renormalization to keep exact
    // entries (basis-like inputs) exact
    return CVec::from_unit(std::move(out));
}

SubspaceBasis::SubspaceBasis(int ambient_dim, std::vector<CVec> basis, const Tolerance& tol)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_dim_ < 1) throw std::invalid_argument("SubspaceBasis: ambient_dim < 1");
    if (static_cast<int>(basis_.size()) > ambient_dim_)
        throw std::invalid_argument("SubspaceBasis: more basis vectors than ambient dimension");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].dim() != ambient_dim_)
            throw std::invalid_argument("SubspaceBasis: basis vector dimension mismatch");
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(inner(basis_[i], basis_[j])) > tol.ortho_tol)
                throw std::invalid_argument("SubspaceBasis: basis is not orthonormal");
    }
}

Eigen::MatrixXcd SubspaceBasis::matrix() const {
    Eigen::MatrixXcd m(ambient_dim_, rank());
    for (int c = 0; c < rank(); ++c) m.col(c) = basis_[static_cast<std::size_t>(c)].vec();
    return m;
}

namespace {

Eigen::MatrixXcd stack_columns(const std::vector<CVec>& vectors, int ambient_dim) {
    Eigen::MatrixXcd m(ambient_dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t c = 0; c < vectors.size(); ++c) {
        if (vectors[c].dim() != ambient_dim)
            throw std::invalid_argument("span_basis: vector dimension mismatch");
        m.col(static_cast<Eigen::Index>(c)) = vectors[c].vec();
    }
    return m;
}

}  // namespace

SubspaceBasis span_basis(const std::vector<CVec>& vectors, int ambient_dim,
                         const Tolerance& tol) {
    if (vectors.empty()) return SubspaceBasis(ambient_dim, {}, tol);
    const Eigen::MatrixXcd m = stack_columns(vectors, ambient_dim);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = tol.rank_tol * sv(0);
    int rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    std::vector<CVec> basis;
    basis.reserve(static_cast<std::size_t>(rank));
    for (int c = 0; c < rank; ++c) basis.push_back(CVec(svd.matrixU().col(c)));
    return SubspaceBasis(ambient_dim, std::move(basis), tol);
}

SubspaceBasis span_basis(const std::vector<CVec>& vectors, const Tolerance& tol) {
    if (vectors.empty())
        throw std::invalid_argument("span_basis: empty input needs an explicit ambient dimension");
    return span_basis(vectors, vectors.front().dim(), tol);
}

SubspaceBasis orthocomplement(const SubspaceBasis& s, const Tolerance& tol) {
    const int d = s.ambient_dim();
    if (s.rank() == 0) {
        std::vector<CVec> full;
        full.reserve(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) full.push_back(CVec::basis(d, i));
        return SubspaceBasis(d, std::move(full), tol);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.matrix(), Eigen::ComputeFullU);
    std::vector<CVec> comp;
    comp.reserve(static_cast<std::size_t>(d - s.rank()));
    for (int c = s.rank(); c < d; ++c) comp.push_back(CVec(svd.matrixU().col(c)));
    return SubspaceBasis(d, std::move(comp), tol);
}

int numeric_rank(const std::vector<CVec>& vectors, const Tolerance& tol) {
    if (vectors.empty()) return 0;
    return span_basis(vectors, tol).rank();
}

CVec random_unit(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
    return CVec(std::move(v));
}

CVec random_unit_in(const SubspaceBasis& s, std::mt19937_64& rng) {
    if (s.rank() == 0)
        throw std::invalid_argument("random_unit_in: zero-dimensional subspace");
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s.ambient_dim());
    for (const CVec& b : s.basis()) v += Complex(g(rng), g(rng)) * b.vec();
    return CVec(std::move(v));
}

Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    Eigen::MatrixXcd q = qr.householderQ();
    // fix column phases so the decomposition is unique
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const Complex rjj = r(j, j);
        if (std::abs(rjj) > 0) q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

}  // namespace upbkit
