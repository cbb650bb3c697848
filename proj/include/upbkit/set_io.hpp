// JSON (de)serialization of product-vector sets.
//
// Schema: {"dims":[d0,...,d{n-1}],"vectors":[V_0,...,V_{k-1}]} where each
// V_i is a list of n factors and each factor is a list of d_m [re,im] pairs.
// The writer emits 17 significant digits and is byte-deterministic; readers
// normalize each factor.
#pragma once

#include "upbkit/product_states.hpp"

#include <string>

namespace upbkit {

struct SetFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string set_to_json(const ProductVectorSet& set);

// Throws SetFormatError naming the offending field/position on malformed
// input; orthogonality violations surface as NotMutuallyOrthogonal.
ProductVectorSet set_from_json(const std::string& text, const Tolerance& tol = {});

ProductVectorSet load_set(const std::string& path, const Tolerance& tol = {});
void save_set(const std::string& path, const ProductVectorSet& set);

}  // namespace upbkit
