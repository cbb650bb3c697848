#include "upbkit/product_states.hpp"

#include <algorithm>
#include <sstream>

namespace upbkit {

SystemShape::SystemShape(std::vector<int> dims) : local_dims(std::move(dims)) {
    if (local_dims.size() < 2)
        throw std::invalid_argument("SystemShape: need at least 2 sites");
    for (int d : local_dims)
        if (d < 2) throw std::invalid_argument("SystemShape: local dimensions must be >= 2");
}

long long SystemShape::total_dim() const {
    long long p = 1;
    for (int d : local_dims) p *= d;
    return p;
}

long long SystemShape::dim_excluding(int m) const {
    long long p = 1;
    for (int j = 0; j < sites(); ++j)
        if (j != m) p *= dim(j);
    return p;
}

bool ProductVector::matches(const SystemShape& shape) const {
    if (sites() != shape.sites()) return false;
    for (int m = 0; m < sites(); ++m)
        if (factor(m).dim() != shape.dim(m)) return false;
    return true;
}

CVec kron_sites(const ProductVector& v, const std::vector<int>& sites) {
    if (sites.empty()) throw std::invalid_argument("kron_sites: empty site list");
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i] < 0 || sites[i] >= v.sites())
            throw std::invalid_argument("kron_sites: site index out of range");
        if (i > 0 && sites[i] <= sites[i - 1])
            throw std::invalid_argument("kron_sites: sites must be strictly ascending");
    }
    CVec out = v.factor(sites[0]);
    for (std::size_t i = 1; i < sites.size(); ++i) out = kron(out, v.factor(sites[i]));
    return out;
}

CVec flatten(const ProductVector& v) {
    std::vector<int> all(static_cast<std::size_t>(v.sites()));
    for (int m = 0; m < v.sites(); ++m) all[static_cast<std::size_t>(m)] = m;
    return kron_sites(v, all);
}

std::vector<int> ortho_sites(const ProductVector& a, const ProductVector& b,
                             const Tolerance& tol) {
    if (a.sites() != b.sites()) throw DimensionMismatch("ortho_sites: site count mismatch");
    std::vector<int> out;
    for (int m = 0; m < a.sites(); ++m) {
        if (a.factor(m).dim() != b.factor(m).dim())
            throw DimensionMismatch("ortho_sites: factor dimension mismatch");
        if (std::abs(inner(a.factor(m), b.factor(m))) <= tol.ortho_tol) out.push_back(m);
    }
    return out;
}

namespace {

std::string describe_pairs(const std::vector<NonOrthogonalPair>& pairs) {
    std::ostringstream os;
    os << pairs.size() << " vector pair(s) fail mutual orthogonality:";
    const std::size_t shown = std::min<std::size_t>(pairs.size(), 8);
    for (std::size_t p = 0; p < shown; ++p) {
        os << " (" << pairs[p].i << "," << pairs[p].j << ") site overlaps [";
        for (std::size_t m = 0; m < pairs[p].site_overlaps.size(); ++m) {
            if (m) os << ",";
            os << pairs[p].site_overlaps[m];
        }
        os << "];";
    }
    if (shown < pairs.size()) os << " ...";
    return os.str();
}

}  // namespace

NotMutuallyOrthogonal::NotMutuallyOrthogonal(std::vector<NonOrthogonalPair> pairs)
    : std::runtime_error(describe_pairs(pairs)), pairs_(std::move(pairs)) {}

ProductVectorSet validate_set(const SystemShape& shape, std::vector<ProductVector> vectors,
                              const Tolerance& tol) {
    if (vectors.empty()) throw std::invalid_argument("validate_set: empty vector list");
    for (std::size_t i = 0; i < vectors.size(); ++i)
        if (!vectors[i].matches(shape)) {
            std::ostringstream os;
            os << "validate_set: vector " << i << " does not match shape";
            throw DimensionMismatch(os.str());
        }
    std::vector<NonOrthogonalPair> bad;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            std::vector<double> overlaps(static_cast<std::size_t>(shape.sites()));
            bool ortho = false;
            for (int m = 0; m < shape.sites(); ++m) {
                const double o = std::abs(inner(vectors[i].factor(m), vectors[j].factor(m)));
                overlaps[static_cast<std::size_t>(m)] = o;
                if (o <= tol.ortho_tol) ortho = true;
            }
            if (!ortho)
                bad.push_back({static_cast<int>(i), static_cast<int>(j), std::move(overlaps)});
        }
    if (!bad.empty()) throw NotMutuallyOrthogonal(std::move(bad));
    return ProductVectorSet(shape, std::move(vectors));
}

Bipartition::Bipartition(std::vector<int> subset, int n_sites) {
    if (n_sites < 2) throw std::invalid_argument("Bipartition: need at least 2 sites");
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty() || static_cast<int>(subset.size()) >= n_sites)
        throw std::invalid_argument("Bipartition: subset must be nonempty and proper");
    if (subset.front() < 0 || subset.back() >= n_sites)
        throw std::invalid_argument("Bipartition: site index out of range");
    std::vector<int> complement;
    for (int m = 0, p = 0; m < n_sites; ++m) {
        if (p < static_cast<int>(subset.size()) && subset[static_cast<std::size_t>(p)] == m)
            ++p;
        else
            complement.push_back(m);
    }
    if (subset.front() == 0) {
        left_ = std::move(subset);
        right_ = std::move(complement);
    } else {
        left_ = std::move(complement);
        right_ = std::move(subset);
    }
}

std::string Bipartition::label() const {
    auto part = [](const std::vector<int>& v) {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i];
        }
        os << "}";
        return os.str();
    };
    return part(left_) + "|" + part(right_);
}

std::vector<Bipartition> all_bipartitions(int n_sites) {
    if (n_sites < 2) throw std::invalid_argument("all_bipartitions: need at least 2 sites");
    std::vector<Bipartition> cuts;
    const unsigned full = (1u << (n_sites - 1)) - 1u;
    for (unsigned mask = 0; mask < full; ++mask) {
        std::vector<int> left{0};
        for (int b = 0; b + 1 < n_sites; ++b)
            if (mask & (1u << b)) left.push_back(b + 1);
        cuts.emplace_back(std::move(left), n_sites);
    }
    return cuts;
}

namespace {

int checked_int_dim(long long p) {
    if (p > (1ll << 30)) throw std::invalid_argument("coarse-grained dimension too large");
    return static_cast<int>(p);
}

}  // namespace

ProductVectorSet coarse_grain(const ProductVectorSet& set, const Bipartition& cut,
                              const Tolerance& tol) {
    if (cut.sites() != set.shape().sites())
        throw DimensionMismatch("coarse_grain: cut does not match shape");
    return group_sites(set, {cut.left(), cut.right()}, tol);
}

ProductVectorSet group_sites(const ProductVectorSet& set,
                             const std::vector<std::vector<int>>& groups,
                             const Tolerance& tol) {
    const int n = set.shape().sites();
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& g : groups) {
        if (g.empty()) throw std::invalid_argument("group_sites: empty group");
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] < 0 || g[i] >= n || seen[static_cast<std::size_t>(g[i])]++)
                throw std::invalid_argument("group_sites: groups must partition the sites");
            if (i > 0 && g[i] <= g[i - 1])
                throw std::invalid_argument("group_sites: group sites must be ascending");
        }
    }
    for (int m = 0; m < n; ++m)
        if (!seen[static_cast<std::size_t>(m)])
            throw std::invalid_argument("group_sites: groups must partition the sites");
    if (groups.size() < 2) throw std::invalid_argument("group_sites: need at least 2 groups");

    std::vector<int> dims;
    dims.reserve(groups.size());
    for (const auto& g : groups) {
        long long p = 1;
        for (int m : g) p *= set.shape().dim(m);
        dims.push_back(checked_int_dim(p));
    }
    std::vector<ProductVector> out;
    out.reserve(static_cast<std::size_t>(set.size()));
    for (const ProductVector& v : set.vectors()) {
        std::vector<CVec> factors;
        factors.reserve(groups.size());
        for (const auto& g : groups) factors.push_back(kron_sites(v, g));
        out.emplace_back(std::move(factors));
    }
    return validate_set(SystemShape(std::move(dims)), std::move(out), tol);
}

}  // namespace upbkit
