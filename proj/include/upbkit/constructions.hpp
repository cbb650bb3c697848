// Canonical product-vector set constructions: the 3-qubit Shifts set, the
// flag (new-from-old) construction with its universal biproduct
// counter-witness, pairwise tensoring, and site-grouping reduction.
#pragma once

#include "upbkit/product_states.hpp"

namespace upbkit {

// {|0>|0>|0>, |1>|+>|->, |->|1>|+>, |+>|->|1>} over shape (2,2,2).
ProductVectorSet shifts(const Tolerance& tol = {});

// Prepends flag |i> (dimension = number of inputs) to every vector of the
// i-th input; inputs must share one shape. Output shape (m, d_0..d_{n-1}),
// cardinality sum k_i. Orthogonality: distinct flags or inherited.
ProductVectorSet flag_construction(const std::vector<ProductVectorSet>& bases,
                                   const Tolerance& tol = {});

// The biproduct vector orthogonal to every flag_construction output:
// |0> on the flag site, tensored with any vector orthogonal to the full
// span of input set 0. Exists whenever set 0 does not span its space.
struct FlagWitness {
    CVec flag_part;
    CVec bulk_part;
    double max_overlap = 0.0;  // validated against the flagged set
};

FlagWitness flag_witness(const std::vector<ProductVectorSet>& bases, const Tolerance& tol = {});

// All pairwise tensor products over the concatenated shape; cardinality
// k_a * k_b, ordered a-major.
ProductVectorSet tensor_construction(const ProductVectorSet& a, const ProductVectorSet& b,
                                     const Tolerance& tol = {});

// Merges site groups (each ascending, jointly a partition) into one site per
// group, turning an N-partite set into an n-partite one.
ProductVectorSet grouping_reduction(const ProductVectorSet& set,
                                    const std::vector<std::vector<int>>& groups,
                                    const Tolerance& tol = {});

}  // namespace upbkit
