// Extendibility decisions for product-vector sets: exact branch-and-bound
// search over vector partitions (bipartite rank criterion and its n-site
// generalization) with certificate extraction, the all-cuts scan, and an
// independent numerical seesaw oracle.
#pragma once

#include "upbkit/product_states.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace upbkit {

enum class SearchStatus { Extendible, Unextendible, Infeasible };

struct SearchOptions {
    Tolerance tol{};
    // Exact search is exponential in k; larger sets report Infeasible unless
    // the set spans the full space (then Unextendible is immediate).
    int max_exact_k = 24;
};

// Witnessed partition for an extendible 2-site set: the left factors of b1
// and the right factors of b2 are both rank-deficient, and the product of
// the two orthocomplement vectors is orthogonal to every set element.
struct ExtendibilityCertificate {
    std::vector<int> b1;  // ascending vector indices
    std::vector<int> b2;
    CVec left_witness;   // in the left local space, orthogonal to b1's left factors
    CVec right_witness;  // in the right local space, orthogonal to b2's right factors
    int left_rank = 0;   // rank of b1's left factors, < left dim
    int right_rank = 0;  // rank of b2's right factors, < right dim
    double max_overlap = 0.0;  // max |<witness|v_i>| over the set
};

struct BipartiteDecision {
    SearchStatus status = SearchStatus::Infeasible;
    std::optional<ExtendibilityCertificate> certificate;  // present iff Extendible
};

// Exact decision for a 2-site set: extendible iff some partition (B1,B2)
// leaves B1's left factors short of spanning the left space and B2's right
// factors short of spanning the right space.
BipartiteDecision is_extendible_bipartite(const ProductVectorSet& set,
                                          const SearchOptions& opts = {});

struct MultipartiteDecision {
    SearchStatus status = SearchStatus::Infeasible;
    std::optional<ProductVector> witness;  // fully product, orthogonal to the whole set
    std::vector<std::vector<int>> partition;  // partition[j] = indices of B_j (iff Extendible)
    double max_overlap = 0.0;
};

// n-site generalization: extendible iff some ordered partition (B_1..B_n)
// has rank(site-j factors of B_j) < d_j for every j; the witness is the
// tensor product of one orthocomplement vector per site.
MultipartiteDecision is_extendible_multipartite(const ProductVectorSet& set,
                                                const SearchOptions& opts = {});

struct GupbVerdict {
    std::map<Bipartition, BipartiteDecision> cuts;
    // Extendible: some cut is extendible. Unextendible: every cut is
    // unextendible. Infeasible: no cut extendible but some cut undecided.
    SearchStatus status = SearchStatus::Infeasible;

    bool is_gupb_candidate() const { return status == SearchStatus::Unextendible; }
};

// Runs the bipartite decision across every canonical cut of an n >= 3 site
// set; the set is a genuine-unextendibility candidate iff no cut is
// extendible.
GupbVerdict check_gupb(const ProductVectorSet& set, const SearchOptions& opts = {});

struct SeesawOptions {
    int restarts = 100;
    int iters = 200;
    std::uint64_t seed = 0;
    // "found" iff the best residual (sum over the set of squared overlaps
    // with the normalized witness) is at most found_tol.
    double found_tol = 1e-14;
    Tolerance tol{};
};

struct SeesawResult {
    bool found = false;
    double residual = 0.0;  // best over restarts
    std::optional<ProductVector> witness;  // present iff found
};

// Alternating minimization of the summed squared overlap between a product
// witness and the set. With all factors but one fixed the optimum is the
// bottom eigenvector of a site-local PSD operator. Heuristic and one-sided:
// "found" certifies extendibility, "not found" certifies nothing. With a cut
// the search runs over the coarse-grained 2-site set.
SeesawResult seesaw_search(const ProductVectorSet& set,
                           const std::optional<Bipartition>& cut = std::nullopt,
                           const SeesawOptions& opts = {});

}  // namespace upbkit
