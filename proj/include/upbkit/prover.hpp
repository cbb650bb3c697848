// Constructive biproduct-witness prover: for a mutually orthogonal fully
// product set on n >= 3 sites, pick the (vector, site) pair with the most
// same-site orthogonal neighbors, put those neighbors in B1 and the rest in
// B2; whenever B2 is small enough that its bulk factors cannot span the
// complementary space, an explicit biproduct vector orthogonal to the whole
// set exists and is returned. Also the random orthogonal-set generator the
// property tests feed on.
#pragma once

#include "upbkit/product_states.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace upbkit {

struct BiproductWitness {
    int site = 0;        // m: the single-site half of the cut {m}|rest
    int n_sites = 0;
    CVec local_part;     // dimension d_m, the chosen vector's site-m factor
    CVec bulk_part;      // dimension prod_{j!=m} d_j, orthogonal to B2's bulk span
    int chosen_vertex = 0;
    std::vector<int> b1;  // the same-site orthogonal neighbors (ascending)
    std::vector<int> b2;  // everything else, including chosen_vertex
    int bulk_rank = 0;    // rank of B2's coarse-grained bulk factors
    double max_overlap = 0.0;  // validation: max |<witness|v_i>| over the set
    // True when the shape is heterogeneous: the cardinality regime for this
    // cut uses the actual bulk dimension, a bound not derived in source.
    bool heterogeneous_bound_extrapolated = false;

    Bipartition cut() const { return Bipartition({site}, n_sites); }
};

// Why no witness was produced: even the best (vertex, site) pair leaves B2
// with enough vectors to possibly span the bulk space.
struct GuaranteeGap {
    int vertex = 0;
    int site = 0;
    int t = 0;             // best same-site orthogonal-neighbor count at that pair
    long long needed_t = 0;  // smallest t that would have sufficed there
    long long margin = 0;    // (bulk_dim - 1) - (k - t), negative here
};

struct ProveResult {
    std::optional<BiproductWitness> witness;
    std::optional<GuaranteeGap> gap;  // populated iff no witness
};

// Sound, not complete: a returned witness always validates (hard error
// otherwise); a gap only means this construction cannot certify the set.
ProveResult prove_biproduct(const ProductVectorSet& set, const Tolerance& tol = {});

struct InfeasiblePattern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenOptions {
    std::uint64_t seed = 0;
    // Attempts at realizing a sampled orthogonality pattern before giving up.
    int max_pattern_tries = 64;
    // Rounds of single-factor redraws inside orthocomplements, per (vector,
    // site) pair, applied after the initial rotated-basis realization.
    int randomize_sweeps = 2;
    Tolerance tol{};
};

// Random mutually orthogonal product set of size k: sample which site makes
// each pair orthogonal, realize each site's orthogonality constraints with
// rotated-basis classes, then randomize factors inside the orthocomplements
// the constraints leave free. Deterministic for a fixed seed. Throws
// InfeasiblePattern when k exceeds the total dimension.
ProductVectorSet generate_orthogonal_set(const SystemShape& shape, int k,
                                         const GenOptions& opts = {});

// Same realization machinery for a caller-fixed pattern: edge_site maps each
// unordered pair {i,j} (i<j, 0-based) to the site that must make it
// orthogonal. Every pair must be present. Throws InfeasiblePattern when some
// site's constraint graph needs more classes than that site has dimensions.
ProductVectorSet generate_from_pattern(const SystemShape& shape, int k,
                                       const std::map<std::pair<int, int>, int>& edge_site,
                                       const GenOptions& opts = {});

}  // namespace upbkit
