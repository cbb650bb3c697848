// Edge-colored complete-graph view of a product-vector set: each edge {i,j}
// carries the sites on which vectors i and j are orthogonal, plus degree
// analytics (pigeonhole counts) and DOT export.
#pragma once

#include "upbkit/product_states.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace upbkit {

struct OrthoGraph {
    int k = 0;
    int n_sites = 0;
    // key (i,j) with i < j; value: ascending nonempty color list
    std::map<std::pair<int, int>, std::vector<int>> edges;

    const std::vector<int>& colors(int i, int j) const;
};

OrthoGraph build_graph(const ProductVectorSet& set, const Tolerance& tol = {});

// Same-site neighbor counts per (vertex, site) under two conventions:
//   full:    an edge contributes to every color it carries
//   minimal: an edge contributes once, to its lowest color
// Minimal counts sum to k-1 at each vertex; full counts can only be larger.
struct DegreeProfile {
    std::vector<std::vector<int>> full;
    std::vector<std::vector<int>> minimal;

    int max_site(int v) const;  // argmax of full[v], lowest site on ties
    int max_deg(int v) const;
};

DegreeProfile degree_profile(const OrthoGraph& g);

// A vertex, a site, and every neighbor whose shared edge carries that site
// as a color. pigeonhole_witness returns the globally maximal count, which
// is at least ceil((k-1)/n); ties break to the lowest (vertex, site).
struct PigeonholeWitness {
    int vertex = 0;
    int site = 0;
    std::vector<int> neighbors;
};

PigeonholeWitness pigeonhole_witness(const OrthoGraph& g);

struct DotOptions {
    // Edges at `highlight.first` colored by `highlight.second` render red;
    // everything else pale gray.
    std::optional<std::pair<int, int>> highlight;
    // Label every edge with its full color set instead of the lowest color.
    bool all_colors = false;
};

std::string to_dot(const OrthoGraph& g, const DotOptions& opts = {});

}  // namespace upbkit
