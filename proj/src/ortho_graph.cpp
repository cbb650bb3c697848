#include "upbkit/ortho_graph.hpp"

#include <algorithm>
#include <sstream>

namespace upbkit {

const std::vector<int>& OrthoGraph::colors(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = edges.find({i, j});
    if (it == edges.end()) throw std::invalid_argument("OrthoGraph::colors: no such edge");
    return it->second;
}

OrthoGraph build_graph(const ProductVectorSet& set, const Tolerance& tol) {
    OrthoGraph g;
    g.k = set.size();
    g.n_sites = set.shape().sites();
    for (int i = 0; i < g.k; ++i)
        for (int j = i + 1; j < g.k; ++j)
            g.edges[{i, j}] = ortho_sites(set.vector(i), set.vector(j), tol);
    return g;
}

DegreeProfile degree_profile(const OrthoGraph& g) {
    DegreeProfile p;
    p.full.assign(static_cast<std::size_t>(g.k),
                  std::vector<int>(static_cast<std::size_t>(g.n_sites), 0));
    p.minimal = p.full;
    for (const auto& [pair, colors] : g.edges) {
        for (int v : {pair.first, pair.second}) {
            for (int m : colors) ++p.full[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)];
            ++p.minimal[static_cast<std::size_t>(v)][static_cast<std::size_t>(colors.front())];
        }
    }
    return p;
}

int DegreeProfile::max_site(int v) const {
    const auto& row = full[static_cast<std::size_t>(v)];
    return static_cast<int>(std::max_element(row.begin(), row.end()) - row.begin());
}

int DegreeProfile::max_deg(int v) const {
    const auto& row = full[static_cast<std::size_t>(v)];
    return *std::max_element(row.begin(), row.end());
}

PigeonholeWitness pigeonhole_witness(const OrthoGraph& g) {
    if (g.k < 2) throw std::invalid_argument("pigeonhole_witness: need at least 2 vertices");
    const DegreeProfile p = degree_profile(g);
    int best_v = 0, best_m = 0, best = -1;
    for (int v = 0; v < g.k; ++v)
        for (int m = 0; m < g.n_sites; ++m)
            if (p.full[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)] > best) {
                best = p.full[static_cast<std::size_t>(v)][static_cast<std::size_t>(m)];
                best_v = v;
                best_m = m;
            }
    PigeonholeWitness w;
    w.vertex = best_v;
    w.site = best_m;
    for (int u = 0; u < g.k; ++u) {
        if (u == best_v) continue;
        const auto& c = g.colors(best_v, u);
        if (std::find(c.begin(), c.end(), best_m) != c.end()) w.neighbors.push_back(u);
    }
    return w;
}

std::string to_dot(const OrthoGraph& g, const DotOptions& opts) {
    std::ostringstream os;
    os << "graph ortho {\n";
    os << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < g.k; ++v) os << "  v" << v << ";\n";
    for (const auto& [pair, colors] : g.edges) {
        bool hot = false;
        if (opts.highlight) {
            const auto [hv, hm] = *opts.highlight;
            hot = (pair.first == hv || pair.second == hv) &&
                  std::find(colors.begin(), colors.end(), hm) != colors.end();
        }
        os << "  v" << pair.first << " -- v" << pair.second << " [color=\""
           << (hot ? "red" : "gray80") << "\" label=\"";
        if (opts.all_colors) {
            for (std::size_t c = 0; c < colors.size(); ++c) {
                if (c) os << ",";
                os << colors[c];
            }
        } else {
            os << colors.front();
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace upbkit
