#include "upbkit/prover.hpp"

#include "upbkit/ortho_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace upbkit {

namespace {

std::vector<int> sites_except(int n, int m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j)
        if (j != m) out.push_back(j);
    return out;
}

bool homogeneous(const SystemShape& shape) {
    for (int m = 1; m < shape.sites(); ++m)
        if (shape.dim(m) != shape.dim(0)) return false;
    return true;
}

}  // namespace

ProveResult prove_biproduct(const ProductVectorSet& set, const Tolerance& tol) {
    const int n = set.shape().sites();
    const int k = set.size();
    if (n < 3) throw DimensionMismatch("prove_biproduct: set must have at least 3 sites");

    const OrthoGraph g = build_graph(set, tol);
    const DegreeProfile prof = degree_profile(g);

    // Highest same-site neighbor count first; if its cut is too small, the
    // pair with the largest slack against its own bulk dimension.
    int top_v = 0, top_m = 0, top_t = -1;
    int slack_v = 0, slack_m = 0, slack_t = 0;
    long long slack_margin = std::numeric_limits<long long>::min();
    for (int v = 0; v < k; ++v)
        for (int m = 0; m < n; ++m) {
            const int t = prof.full[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)];
            if (t > top_t) {
                top_t = t;
                top_v = v;
                top_m = m;
            }
            const long long margin = (set.shape().dim_excluding(m) - 1) - (k - t);
            if (margin > slack_margin) {
                slack_margin = margin;
                slack_v = v;
                slack_m = m;
                slack_t = t;
            }
        }

    int v = top_v, m = top_m, t = top_t;
    if ((set.shape().dim_excluding(m) - 1) - (k - t) < 0) {
        v = slack_v;
        m = slack_m;
        t = slack_t;
    }

    ProveResult out;
    const long long bulk_dim = set.shape().dim_excluding(m);
    if ((bulk_dim - 1) - (k - t) < 0) {
        GuaranteeGap gap;
        gap.vertex = slack_v;
        gap.site = slack_m;
        gap.t = slack_t;
        gap.needed_t = k - (set.shape().dim_excluding(slack_m) - 1);
        gap.margin = slack_margin;
        out.gap = gap;
        return out;
    }

    std::vector<int> b1, b2;
    for (int u = 0; u < k; ++u) {
        if (u == v) {
            b2.push_back(u);
            continue;
        }
        const auto& colors = g.colors(v, u);
        if (std::find(colors.begin(), colors.end(), m) != colors.end())
            b1.push_back(u);
        else
            b2.push_back(u);
    }

    const std::vector<int> bulk_sites = sites_except(n, m);
    std::vector<CVec> bulk_factors;
    for (int i : b2) bulk_factors.push_back(kron_sites(set.vector(i), bulk_sites));
    const SubspaceBasis span = span_basis(bulk_factors, static_cast<int>(bulk_dim), tol);
    const SubspaceBasis comp = orthocomplement(span, tol);
    if (comp.rank() == 0)
        throw std::logic_error("prove_biproduct: bulk factors span the whole cut space");
    const CVec local_part = set.vector(v).factor(m);
    const CVec bulk_part = comp.basis().front();

    double max_overlap = 0.0;
    for (int i = 0; i < k; ++i) {
        const double o = std::abs(inner(local_part, set.vector(i).factor(m))) *
                         std::abs(inner(bulk_part, kron_sites(set.vector(i), bulk_sites)));
        max_overlap = std::max(max_overlap, o);
    }
    if (max_overlap > tol.ortho_tol)
        throw std::logic_error("prove_biproduct: constructed witness failed validation");

    out.witness = BiproductWitness{m,  n,  local_part,   bulk_part,
                                   v,  std::move(b1),    std::move(b2),
                                   span.rank(), max_overlap, !homogeneous(set.shape())};
    return out;
}

namespace {

using EdgePattern = std::map<std::pair<int, int>, int>;

// classes[m][v] = which of site m's d_m orthonormal directions vertex v uses;
// adjacent vertices in site m's constraint graph must differ.
using ClassAssignment = std::vector<std::vector<int>>;

// Greedy proper coloring of one site's constraint graph with at most d
// classes, randomized vertex order, a few attempts.
std::optional<std::vector<int>> color_site(int k, int d,
                                           const std::vector<std::pair<int, int>>& edges,
                                           std::mt19937_64& rng, int attempts) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    for (auto [i, j] : edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> color(static_cast<std::size_t>(k), -1);
        bool ok = true;
        for (int v : order) {
            std::vector<char> taken(static_cast<std::size_t>(d), 0);
            for (int u : adj[static_cast<std::size_t>(v)])
                if (color[static_cast<std::size_t>(u)] >= 0)
                    taken[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])] = 1;
            std::vector<int> free;
            for (int c = 0; c < d; ++c)
                if (!taken[static_cast<std::size_t>(c)]) free.push_back(c);
            if (free.empty()) {
                ok = false;
                break;
            }
            color[static_cast<std::size_t>(v)] =
                free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
        }
        if (ok) return color;
    }
    return std::nullopt;
}

ClassAssignment color_all_sites(const SystemShape& shape, int k, const EdgePattern& pattern,
                                std::mt19937_64& rng, int attempts) {
    const int n = shape.sites();
    std::vector<std::vector<std::pair<int, int>>> site_edges(static_cast<std::size_t>(n));
    for (const auto& [pair, m] : pattern) site_edges[static_cast<std::size_t>(m)].push_back(pair);
    ClassAssignment classes;
    for (int m = 0; m < n; ++m) {
        auto c = color_site(k, shape.dim(m), site_edges[static_cast<std::size_t>(m)], rng,
                            attempts);
        if (!c)
            throw InfeasiblePattern(
                "pattern needs more orthogonality classes than a site's dimension allows");
        classes.push_back(std::move(*c));
    }
    return classes;
}

ProductVectorSet realize(const SystemShape& shape, int k, const EdgePattern& pattern,
                         const ClassAssignment& classes, std::mt19937_64& rng,
                         const GenOptions& opts) {
    const int n = shape.sites();
    // Rotated-basis initialization: class c at site m becomes column c of a
    // random unitary, so patterned pairs are orthogonal exactly.
    std::vector<std::vector<CVec>> factors(static_cast<std::size_t>(k));
    std::vector<Eigen::MatrixXcd> bases;
    for (int m = 0; m < n; ++m) bases.push_back(random_unitary(shape.dim(m), rng));
    for (int v = 0; v < k; ++v)
        for (int m = 0; m < n; ++m)
            factors[static_cast<std::size_t>(v)].push_back(CVec(
                bases[static_cast<std::size_t>(m)].col(
                    classes[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)])));

    // Randomization: redraw single factors inside the orthocomplement of the
    // factors they are constrained against, keeping the pattern intact.
    std::vector<std::vector<std::vector<int>>> constrained(
        static_cast<std::size_t>(k),
        std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
    for (const auto& [pair, m] : pattern) {
        constrained[static_cast<std::size_t>(pair.first)][static_cast<std::size_t>(m)].push_back(
            pair.second);
        constrained[static_cast<std::size_t>(pair.second)][static_cast<std::size_t>(m)].push_back(
            pair.first);
    }
    for (int sweep = 0; sweep < opts.randomize_sweeps; ++sweep)
        for (int v = 0; v < k; ++v)
            for (int m = 0; m < n; ++m) {
                std::vector<CVec> against;
                for (int u : constrained[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)])
                    against.push_back(factors[static_cast<std::size_t>(u)][static_cast<std::size_t>(m)]);
                const SubspaceBasis span = span_basis(against, shape.dim(m), opts.tol);
                if (span.rank() >= shape.dim(m)) continue;
                factors[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)] =
                    random_unit_in(orthocomplement(span, opts.tol), rng);
            }

    std::vector<ProductVector> vectors;
    vectors.reserve(static_cast<std::size_t>(k));
    for (auto& f : factors) vectors.emplace_back(std::move(f));
    return validate_set(shape, std::move(vectors), opts.tol);
}

EdgePattern uniform_pattern(int k, int n, std::mt19937_64& rng) {
    EdgePattern pattern;
    std::uniform_int_distribution<int> site(0, n - 1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) pattern[{i, j}] = site(rng);
    return pattern;
}

// Signatures: k distinct cells of the d_0 x ... x d_{n-1} grid. Pairs differ
// somewhere by construction; the edge color is a uniform differing site and
// the classes are the signature coordinates, so coloring never fails.
std::pair<EdgePattern, ClassAssignment> signature_pattern(const SystemShape& shape, int k,
                                                          std::mt19937_64& rng) {
    const int n = shape.sites();
    const long long total = shape.total_dim();
    std::vector<std::vector<int>> sig;
    if (total <= 4096) {
        std::vector<long long> cells(static_cast<std::size_t>(total));
        std::iota(cells.begin(), cells.end(), 0ll);
        std::shuffle(cells.begin(), cells.end(), rng);
        for (int i = 0; i < k; ++i) {
            long long c = cells[static_cast<std::size_t>(i)];
            std::vector<int> s(static_cast<std::size_t>(n));
            for (int m = n - 1; m >= 0; --m) {
                s[static_cast<std::size_t>(m)] = static_cast<int>(c % shape.dim(m));
                c /= shape.dim(m);
            }
            sig.push_back(std::move(s));
        }
    } else {
        std::set<std::vector<int>> seen;
        while (static_cast<int>(sig.size()) < k) {
            std::vector<int> s;
            for (int m = 0; m < n; ++m)
                s.push_back(std::uniform_int_distribution<int>(0, shape.dim(m) - 1)(rng));
            if (seen.insert(s).second) sig.push_back(std::move(s));
        }
    }
    EdgePattern pattern;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<int> diff;
            for (int m = 0; m < n; ++m)
                if (sig[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] !=
                    sig[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)])
                    diff.push_back(m);
            pattern[{i, j}] =
                diff[std::uniform_int_distribution<std::size_t>(0, diff.size() - 1)(rng)];
        }
    ClassAssignment classes(static_cast<std::size_t>(n),
                            std::vector<int>(static_cast<std::size_t>(k)));
    for (int m = 0; m < n; ++m)
        for (int v = 0; v < k; ++v)
            classes[static_cast<std::size_t>(m)][static_cast<std::size_t>(v)] =
                sig[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)];
    return {std::move(pattern), std::move(classes)};
}

}  // namespace

ProductVectorSet generate_orthogonal_set(const SystemShape& shape, int k,
                                         const GenOptions& opts) {
    if (k < 1) throw std::invalid_argument("generate_orthogonal_set: k must be >= 1");
    if (k > shape.total_dim())
        throw InfeasiblePattern("requested cardinality exceeds the total dimension");
    std::mt19937_64 rng(opts.seed);
    if (k == 1) {
        std::vector<CVec> f;
        for (int m = 0; m < shape.sites(); ++m) f.push_back(random_unit(shape.dim(m), rng));
        return validate_set(shape, {ProductVector(std::move(f))}, opts.tol);
    }
    // Uniformly colored patterns first (more varied structure); they often
    // need more classes than the dimensions allow, so fall back to
    // signature-derived patterns, which always realize.
    const int uniform_tries = std::max(1, opts.max_pattern_tries / 2);
    for (int attempt = 0; attempt < uniform_tries; ++attempt) {
        EdgePattern pattern = uniform_pattern(k, shape.sites(), rng);
        try {
            ClassAssignment classes = color_all_sites(shape, k, pattern, rng, 4);
            return realize(shape, k, pattern, classes, rng, opts);
        } catch (const InfeasiblePattern&) {
        }
    }
    auto [pattern, classes] = signature_pattern(shape, k, rng);
    return realize(shape, k, pattern, classes, rng, opts);
}

ProductVectorSet generate_from_pattern(const SystemShape& shape, int k,
                                       const std::map<std::pair<int, int>, int>& edge_site,
                                       const GenOptions& opts) {
    if (k < 2) throw std::invalid_argument("generate_from_pattern: k must be >= 2");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto it = edge_site.find({i, j});
            if (it == edge_site.end())
                throw std::invalid_argument("generate_from_pattern: pair without a site");
            if (it->second < 0 || it->second >= shape.sites())
                throw std::invalid_argument("generate_from_pattern: site out of range");
        }
    if (edge_site.size() != static_cast<std::size_t>(k) * (k - 1) / 2)
        throw std::invalid_argument("generate_from_pattern: unexpected extra pairs");
    std::mt19937_64 rng(opts.seed);
    ClassAssignment classes =
        color_all_sites(shape, k, edge_site, rng, std::max(4, opts.max_pattern_tries));
    return realize(shape, k, edge_site, classes, rng, opts);
}

}  // namespace upbkit
