#include "upbkit/extendibility.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace upbkit {

namespace {

// Orthonormal accumulator with stack discipline for DFS backtracking.
class GramStack {
  public:
    explicit GramStack(double tol) : tol_(tol) {}

    int rank() const { return static_cast<int>(basis_.size()); }

    double residual_norm(const Eigen::VectorXcd& v) const { return residual(v).norm(); }

    // Adds v's residual direction if it is numerically new; reports whether
    // the rank grew, which the matching pop needs.
    bool push(const Eigen::VectorXcd& v) {
        Eigen::VectorXcd r = residual(v);
        const double n = r.norm();
        if (n <= tol_) return false;
        basis_.push_back(r / n);
        return true;
    }

    void pop(bool added) {
        if (added) basis_.pop_back();
    }

  private:
    Eigen::VectorXcd residual(const Eigen::VectorXcd& v) const {
        Eigen::VectorXcd r = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis_) r -= b.dot(r) * b;
        return r;
    }

    double tol_;
    std::vector<Eigen::VectorXcd> basis_;
};

// Vectors that create rank pressure early prune best, so order by largest
// summed residual against the spans of the already-ordered prefix.
std::vector<int> pressure_order(const std::vector<std::vector<Eigen::VectorXcd>>& factors,
                                double tol) {
    const int n = static_cast<int>(factors.size());
    const int k = static_cast<int>(factors[0].size());
    std::vector<GramStack> acc(static_cast<std::size_t>(n), GramStack(tol));
    std::vector<int> order;
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    for (int step = 0; step < k; ++step) {
        int best = -1;
        double best_score = -1.0;
        for (int i = 0; i < k; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            double score = 0.0;
            for (int j = 0; j < n; ++j)
                score += acc[static_cast<std::size_t>(j)].residual_norm(
                    factors[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            if (score > best_score) {
                best_score = score;
                best = i;
            }
        }
        order.push_back(best);
        used[static_cast<std::size_t>(best)] = 1;
        for (int j = 0; j < n; ++j)
            acc[static_cast<std::size_t>(j)].push(
                factors[static_cast<std::size_t>(j)][static_cast<std::size_t>(best)]);
    }
    return order;
}

struct PartitionSearch {
    const std::vector<std::vector<Eigen::VectorXcd>>& factors;  // [site][vector]
    const std::vector<int>& caps;                               // d_j - 1 per site
    const std::vector<int>& order;
    std::vector<GramStack>& acc;
    std::vector<int>& assign;
    double tol;

    bool dfs(std::size_t depth) {
        if (depth == order.size()) return true;
        const int i = order[depth];
        for (int side = 0; side < static_cast<int>(acc.size()); ++side) {
            auto& stack = acc[static_cast<std::size_t>(side)];
            const auto& v = factors[static_cast<std::size_t>(side)][static_cast<std::size_t>(i)];
            const int inc = stack.residual_norm(v) > tol ? 1 : 0;
            if (stack.rank() + inc > caps[static_cast<std::size_t>(side)]) continue;
            const bool added = stack.push(v);
            assign[static_cast<std::size_t>(i)] = side;
            if (dfs(depth + 1)) return true;
            stack.pop(added);
            assign[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    }
};

// Assignment of every vector to a site such that each site's assigned
// factors stay rank-deficient there, or nullopt if none exists.
std::optional<std::vector<int>> find_partition(const ProductVectorSet& set, double tol) {
    const int n = set.shape().sites();
    const int k = set.size();
    std::vector<std::vector<Eigen::VectorXcd>> factors(static_cast<std::size_t>(n));
    std::vector<int> caps(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        caps[static_cast<std::size_t>(j)] = set.shape().dim(j) - 1;
        for (int i = 0; i < k; ++i)
            factors[static_cast<std::size_t>(j)].push_back(set.vector(i).factor(j).vec());
    }
    const std::vector<int> order = pressure_order(factors, tol);
    std::vector<GramStack> acc(static_cast<std::size_t>(n), GramStack(tol));
    std::vector<int> assign(static_cast<std::size_t>(k), -1);
    PartitionSearch search{factors, caps, order, acc, assign, tol};
    if (!search.dfs(0)) return std::nullopt;
    return assign;
}

bool spans_everything(const ProductVectorSet& set, const Tolerance& tol) {
    const long long total = set.shape().total_dim();
    if (set.size() < total) return false;
    std::vector<CVec> flat;
    flat.reserve(static_cast<std::size_t>(set.size()));
    for (const ProductVector& v : set.vectors()) flat.push_back(flatten(v));
    return numeric_rank(flat, tol) == total;
}

// Per-site orthocomplement witness for a found partition, with its span
// ranks. partition[j] holds the ascending indices assigned to site j.
struct PartitionWitness {
    std::vector<CVec> xi;
    std::vector<int> ranks;
    std::vector<std::vector<int>> partition;
    double max_overlap = 0.0;
};

PartitionWitness build_partition_witness(const ProductVectorSet& set,
                                         const std::vector<int>& assign, const Tolerance& tol) {
    const int n = set.shape().sites();
    const int k = set.size();
    PartitionWitness w;
    w.partition.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < k; ++i)
        w.partition[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i);
    for (int j = 0; j < n; ++j) {
        std::vector<CVec> cols;
        for (int i : w.partition[static_cast<std::size_t>(j)]) cols.push_back(set.vector(i).factor(j));
        const SubspaceBasis span = span_basis(cols, set.shape().dim(j), tol);
        w.ranks.push_back(span.rank());
        const SubspaceBasis comp = orthocomplement(span, tol);
        if (comp.rank() == 0)
            throw std::logic_error("partition witness: assigned factors span the full site");
        w.xi.push_back(comp.basis().front());
    }
    for (int i = 0; i < k; ++i) {
        double o = 1.0;
        for (int j = 0; j < n; ++j)
            o *= std::abs(inner(w.xi[static_cast<std::size_t>(j)], set.vector(i).factor(j)));
        w.max_overlap = std::max(w.max_overlap, o);
    }
    if (w.max_overlap > tol.ortho_tol)
        throw std::logic_error("partition witness failed validation against the set");
    return w;
}

}  // namespace

MultipartiteDecision is_extendible_multipartite(const ProductVectorSet& set,
                                                const SearchOptions& opts) {
    MultipartiteDecision out;
    if (spans_everything(set, opts.tol)) {
        out.status = SearchStatus::Unextendible;
        return out;
    }
    if (set.size() > opts.max_exact_k) {
        out.status = SearchStatus::Infeasible;
        return out;
    }
    const auto assign = find_partition(set, opts.tol.rank_tol);
    if (!assign) {
        out.status = SearchStatus::Unextendible;
        return out;
    }
    PartitionWitness w = build_partition_witness(set, *assign, opts.tol);
    out.status = SearchStatus::Extendible;
    out.witness = ProductVector(std::move(w.xi));
    out.partition = std::move(w.partition);
    out.max_overlap = w.max_overlap;
    return out;
}

BipartiteDecision is_extendible_bipartite(const ProductVectorSet& set,
                                          const SearchOptions& opts) {
    if (set.shape().sites() != 2)
        throw DimensionMismatch("is_extendible_bipartite: set must have exactly 2 sites");
    const MultipartiteDecision m = is_extendible_multipartite(set, opts);
    BipartiteDecision out;
    out.status = m.status;
    if (m.status != SearchStatus::Extendible) return out;
    std::vector<CVec> lefts, rights;
    for (int i : m.partition[0]) lefts.push_back(set.vector(i).factor(0));
    for (int i : m.partition[1]) rights.push_back(set.vector(i).factor(1));
    out.certificate = ExtendibilityCertificate{
        m.partition[0],          m.partition[1],
        m.witness->factor(0),    m.witness->factor(1),
        numeric_rank(lefts, opts.tol), numeric_rank(rights, opts.tol),
        m.max_overlap};
    return out;
}

GupbVerdict check_gupb(const ProductVectorSet& set, const SearchOptions& opts) {
    if (set.shape().sites() < 3)
        throw DimensionMismatch("check_gupb: set must have at least 3 sites");
    GupbVerdict verdict;
    bool any_extendible = false;
    bool any_infeasible = false;
    for (const Bipartition& cut : all_bipartitions(set.shape().sites())) {
        BipartiteDecision d = is_extendible_bipartite(coarse_grain(set, cut, opts.tol), opts);
        any_extendible |= d.status == SearchStatus::Extendible;
        any_infeasible |= d.status == SearchStatus::Infeasible;
        verdict.cuts.emplace(cut, std::move(d));
    }
    verdict.status = any_extendible    ? SearchStatus::Extendible
                     : any_infeasible ? SearchStatus::Infeasible
                                      : SearchStatus::Unextendible;
    return verdict;
}

SeesawResult seesaw_search(const ProductVectorSet& set, const std::optional<Bipartition>& cut,
                           const SeesawOptions& opts) {
    const ProductVectorSet* target = &set;
    std::optional<ProductVectorSet> grained;
    if (cut) {
        grained = coarse_grain(set, *cut, opts.tol);
        target = &*grained;
    }
    const int n = target->shape().sites();
    const int k = target->size();
    std::mt19937_64 rng(opts.seed);

    const auto exact_residual = [&](const std::vector<Eigen::VectorXcd>& w) {
        double f = 0.0;
        for (int i = 0; i < k; ++i) {
            Complex p = 1.0;
            for (int j = 0; j < n; ++j) p *= w[static_cast<std::size_t>(j)].dot(
                target->vector(i).factor(j).vec());
            f += std::norm(p);
        }
        return f;
    };

    double best = std::numeric_limits<double>::infinity();
    std::vector<Eigen::VectorXcd> best_w;
    for (int restart = 0; restart < opts.restarts; ++restart) {
        std::vector<Eigen::VectorXcd> w;
        for (int j = 0; j < n; ++j) w.push_back(random_unit(target->shape().dim(j), rng).vec());
        double f_prev = std::numeric_limits<double>::infinity();
        for (int iter = 0; iter < opts.iters; ++iter) {
            double f = 0.0;
            for (int m = 0; m < n; ++m) {
                const int d = target->shape().dim(m);
                Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(d, d);
                for (int i = 0; i < k; ++i) {
                    double coef = 1.0;
                    for (int j = 0; j < n; ++j)
                        if (j != m)
                            coef *= std::norm(w[static_cast<std::size_t>(j)].dot(
                                target->vector(i).factor(j).vec()));
                    const auto& u = target->vector(i).factor(m).vec();
                    op.noalias() += coef * (u * u.adjoint());
                }
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op);
                w[static_cast<std::size_t>(m)] = es.eigenvectors().col(0);
                f = std::max(es.eigenvalues()(0), 0.0);
            }
            if (std::abs(f_prev - f) < 1e-12) break;
            f_prev = f;
        }
        const double f = exact_residual(w);
        if (f < best) {
            best = f;
            best_w = w;
        }
        if (best <= opts.found_tol) break;
    }

    SeesawResult out;
    out.residual = best;
    out.found = best <= opts.found_tol;
    if (out.found) {
        std::vector<CVec> factors;
        for (auto& v : best_w) factors.push_back(CVec(std::move(v)));
        out.witness = ProductVector(std::move(factors));
    }
    return out;
}

}  // namespace upbkit
