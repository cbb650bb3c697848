// Closed-form cardinality and dimension bounds for unextendible product
// bases and genuinely entangled subspaces, plus an independent scan oracle
// for the pigeonhole cardinality bound. Integer arithmetic throughout, with
// overflow-checked exponentiation.
#pragma once

#include "upbkit/product_states.hpp"

#include <utility>
#include <vector>

namespace upbkit {

struct BoundsDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// base^exp for nonnegative exp; throws std::overflow_error past int64.
long long checked_pow(long long base, int exp);

// Permissible minimum cardinality of a bipartite UPB in C^d1 x C^d2:
// d1+d2 when both are even, d1+d2-1 otherwise. Requires d1,d2 >= 3.
long long min_upb_bipartite(long long d1, long long d2);

// Achievable maximum cardinality d1*d2 - 4. Requires d1,d2 >= 3.
long long max_upb_bipartite(long long d1, long long d2);

// Minimal permissible cardinality of an n-party GUPB with local dimension d:
// d^(n-1) + d - 1 for odd d, d^(n-1) + d for even d. Requires n,d >= 3.
long long min_gupb(int n, int d);

// Maximal dimension of a genuinely entangled subspace: (d^(n-1)-1)(d-1).
// Requires n,d >= 2.
long long max_ges_dim(int n, int d);

// s(k) = ceil((k-1)/n): guaranteed same-site orthogonal-neighbor count of
// any vector in a k-element mutually orthogonal product set on n sites.
long long s_required(long long k, int n);

// Largest cardinality at which the biproduct-witness construction is
// guaranteed: d^(n-1) + floor((d^(n-1)-2)/(n-1)). Requires n,d >= 3.
long long prop1_max_k(int n, int d);

// Independent oracle: largest k with k - ceil((k-1)/n) <= d^(n-1) - 1,
// found by ascending scan over k (the left side is non-decreasing).
long long prop1_max_k_scan(int n, int d);

// floor((d^(n-1)-2)/(n-1)) >= d, evaluated exactly in 128-bit integers so
// large (n,d) cannot wrap. True for all n,d >= 3.
bool nontriviality_holds(int n, int d);

struct Table1Entry {
    int n;
    int d;
    long long lo;  // min_gupb
    long long hi;  // prop1_max_k
};

// Excluded-cardinality intervals [min_gupb, prop1_max_k] over a grid.
std::vector<Table1Entry> table1(int n_lo, int n_hi, int d_lo, int d_hi);

struct BoundsReport {
    int n = 0;
    int d = 0;
    long long w = 0;  // d^(n-1) - 1
    long long min_gupb = 0;
    long long prop1_max_k = 0;
    long long max_ges_dim = 0;
    // Bipartite bounds across the steepest cut 1|(n-1), dimensions (d, d^(n-1)).
    long long min_upb_steepest_cut = 0;
    long long max_upb_steepest_cut = 0;
    std::pair<long long, long long> excluded_interval;  // [min_gupb, prop1_max_k]
};

BoundsReport bounds_report(int n, int d);

// Homogeneous shapes only; heterogeneous local dimensions are refused
// because the closed forms are not derived in source for that case.
BoundsReport bounds_report(const SystemShape& shape);

}  // namespace upbkit
