// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion re-derives its expectations with independent
// arithmetic or oracles rather than trusting library round-trips.
#include "helpers.hpp"

#include "upbkit/bounds.hpp"
#include "upbkit/ortho_graph.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace upbkit;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Gate {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string& msg) {
        if (cond) return;
        if (!ok) why << "; ";
        ok = false;
        why << msg;
    }
};

// Max |<local x bulk | v_i>| over the set, assembled per element so the
// witness never has to be permuted into flattening order.
double biproduct_overlap(const CVec& local, int site, const CVec& bulk,
                         const ProductVectorSet& set) {
    std::vector<int> rest;
    for (int m = 0; m < set.shape().sites(); ++m)
        if (m != site) rest.push_back(m);
    double worst = 0.0;
    for (int i = 0; i < set.size(); ++i) {
        const ProductVector& v = set.vector(i);
        const auto a = inner(local, v.factor(site));
        const auto b = inner(bulk, kron_sites(v, rest));
        worst = std::max(worst, std::abs(a * b));
    }
    return worst;
}

bool certificate_valid(const ExtendibilityCertificate& c, const ProductVectorSet& set,
                       double tol) {
    std::vector<int> all = c.b1;
    all.insert(all.end(), c.b2.begin(), c.b2.end());
    std::sort(all.begin(), all.end());
    if (static_cast<int>(all.size()) != set.size()) return false;
    for (int i = 0; i < set.size(); ++i)
        if (all[static_cast<std::size_t>(i)] != i) return false;

    std::vector<CVec> left, right;
    for (int i : c.b1) left.push_back(set.vector(i).factor(0));
    for (int i : c.b2) right.push_back(set.vector(i).factor(1));
    if (numeric_rank(left) != c.left_rank || c.left_rank >= set.shape().dim(0)) return false;
    if (numeric_rank(right) != c.right_rank || c.right_rank >= set.shape().dim(1)) return false;

    for (int i : c.b1)
        if (std::abs(inner(c.left_witness, set.vector(i).factor(0))) > tol) return false;
    for (int i : c.b2)
        if (std::abs(inner(c.right_witness, set.vector(i).factor(1))) > tol) return false;
    return testutil::witness_overlap(kron(c.left_witness, c.right_witness), set) <= tol;
}

bool criterion1(std::string& detail) {
    Gate g;
    const auto t0 = Clock::now();
    const auto grid = table1(3, 5, 3, 6);
    const double ms = ms_since(t0);
    const long long expected[12][4] = {
        {3, 3, 11, 12},    {3, 4, 20, 23},   {3, 5, 29, 36},   {3, 6, 42, 53},
        {4, 3, 29, 35},    {4, 4, 68, 84},   {4, 5, 129, 166}, {4, 6, 222, 287},
        {5, 3, 83, 100},   {5, 4, 260, 319}, {5, 5, 629, 780}, {5, 6, 1302, 1619}};
    g.require(grid.size() == 12, "expected 12 rows");
    for (std::size_t i = 0; i < grid.size() && i < 12; ++i) {
        const auto& e = grid[i];
        const auto& x = expected[i];
        g.require(e.n == x[0] && e.d == x[1] && e.lo == x[2] && e.hi == x[3],
                  "row " + std::to_string(i) + " mismatch");
    }
    g.require(ms < 1000.0, "took " + std::to_string(ms) + " ms");
    std::ostringstream out;
    out << (g.ok ? "12/12 intervals exact" : g.why.str()) << " (" << ms << " ms)";
    detail = out.str();
    return g.ok;
}

bool criterion2(std::string& detail) {
    Gate g;
    int points = 0;
    for (int n = 3; n <= 8; ++n)
        for (int d = 3; d <= 12; ++d, ++points)
            g.require(prop1_max_k(n, d) == prop1_max_k_scan(n, d),
                      "closed form != scan at n=" + std::to_string(n) +
                          " d=" + std::to_string(d));
    const long long w = checked_pow(3, 2) - 1;
    const long long f12 = 12 - s_required(12, 3);
    const long long f13 = 13 - s_required(13, 3);
    g.require(f12 == 8 && f12 <= w, "f(12) should pass at 8");
    g.require(f13 == 9 && f13 > w, "f(13) should fail at 9");
    g.require(prop1_max_k(3, 3) == 12, "boundary cardinality should be 12");
    detail = g.ok ? "closed form == scan on " + std::to_string(points) +
                        " grid points; f(12)=8 <= w=8 < f(13)=9"
                  : g.why.str();
    return g.ok;
}

bool criterion3(std::string& detail) {
    Gate g;
    g.require(prop1_max_k(3, 9) == 120,
              "prop1_max_k(3,9) = " + std::to_string(prop1_max_k(3, 9)));
    g.require(min_gupb(6, 3) == 245, "min_gupb(6,3) = " + std::to_string(min_gupb(6, 3)));
    detail = g.ok ? "prop1_max_k(3,9)=120, min_gupb(6,3)=245" : g.why.str();
    return g.ok;
}

bool criterion4(std::string& detail) {
    Gate g;
    const auto t0 = Clock::now();
    const ProductVectorSet s = shifts();
    validate_set(s.shape(), s.vectors());

    const MultipartiteDecision full = is_extendible_multipartite(s);
    g.require(full.status == SearchStatus::Unextendible, "full-product search should fail");

    int cuts_checked = 0;
    for (const Bipartition& cut : all_bipartitions(3)) {
        const ProductVectorSet two = coarse_grain(s, cut);
        const BipartiteDecision dec = is_extendible_bipartite(two);
        g.require(dec.status == SearchStatus::Extendible, "cut " + cut.label() + " not decided");
        if (dec.certificate) {
            g.require(dec.certificate->max_overlap <= 1e-9,
                      "cut " + cut.label() + " witness overlap too large");
            g.require(certificate_valid(*dec.certificate, two, 1e-9),
                      "cut " + cut.label() + " certificate invalid");
        } else {
            g.require(false, "cut " + cut.label() + " missing certificate");
        }
        ++cuts_checked;
    }
    g.require(cuts_checked == 3, "expected 3 cuts");
    g.require(!check_gupb(s).is_gupb_candidate(), "check_gupb should reject");
    const double ms = ms_since(t0);
    g.require(ms < 1000.0, "took " + std::to_string(ms) + " ms");
    std::ostringstream out;
    out << (g.ok ? "UPB confirmed, 3/3 cuts certified extendible" : g.why.str()) << " (" << ms
        << " ms)";
    detail = out.str();
    return g.ok;
}

bool criterion5(std::string& detail) {
    Gate g;
    const auto t0 = Clock::now();
    int witnesses = 0;
    double worst = 0.0;
    const int total = 204;
    for (int r = 0; r < total; ++r) {
        const bool qutrit = r < 100;
        const SystemShape shape(qutrit ? std::vector<int>{3, 3, 3} : std::vector<int>{4, 4, 4});
        const int k = qutrit ? 5 + (r % 8) : 8 + (r % 16);
        GenOptions opts;
        opts.seed = 1000 + static_cast<std::uint64_t>(r);
        const ProductVectorSet set = generate_orthogonal_set(shape, k, opts);
        const ProveResult res = prove_biproduct(set);
        if (!res.witness) {
            g.require(false, "no witness for shape " + std::to_string(shape.dim(0)) +
                                 "^3 k=" + std::to_string(k));
            continue;
        }
        const BiproductWitness& w = *res.witness;
        const double overlap = biproduct_overlap(w.local_part, w.site, w.bulk_part, set);
        worst = std::max(worst, overlap);
        g.require(overlap <= 1e-8, "witness overlap " + std::to_string(overlap));
        ++witnesses;
    }
    const double ms = ms_since(t0);
    g.require(witnesses == total, "only " + std::to_string(witnesses) + " witnesses");
    g.require(ms < 60000.0, "took " + std::to_string(ms) + " ms");
    std::ostringstream out;
    if (g.ok)
        out << witnesses << "/" << total << " witnesses, worst overlap " << worst;
    else
        out << g.why.str();
    out << " (" << ms << " ms)";
    detail = out.str();
    return g.ok;
}

bool criterion6(std::string& detail) {
    Gate g;
    int passes = 0;
    double worst = 0.0;
    for (int r = 0; r < 50; ++r) {
        const bool qutrit = r % 2 == 0;
        const SystemShape shape(qutrit ? std::vector<int>{3, 3} : std::vector<int>{2, 2, 2});
        const int cap = 4;
        GenOptions opts;
        opts.seed = 9000 + static_cast<std::uint64_t>(r);
        std::vector<ProductVectorSet> inputs;
        inputs.push_back(generate_orthogonal_set(shape, 2 + (r % cap), opts));
        opts.seed += 500;
        inputs.push_back(generate_orthogonal_set(shape, 2 + ((r + 3) % cap), opts));
        if (r % 5 == 0) {
            opts.seed += 500;
            inputs.push_back(generate_orthogonal_set(shape, 2, opts));
        }

        const ProductVectorSet flagged = flag_construction(inputs);
        const FlagWitness w = flag_witness(inputs);
        const double overlap =
            testutil::witness_overlap(kron(w.flag_part, w.bulk_part), flagged);
        worst = std::max(worst, overlap);
        g.require(overlap <= 1e-9, "witness overlap " + std::to_string(overlap) + " at rep " +
                                       std::to_string(r));
        g.require(!check_gupb(flagged).is_gupb_candidate(),
                  "check_gupb accepted rep " + std::to_string(r));
        ++passes;
    }
    g.require(passes == 50, "only " + std::to_string(passes) + " reps");
    std::ostringstream out;
    if (g.ok)
        out << "50/50 flagged sets refuted, worst witness overlap " << worst;
    else
        out << g.why.str();
    detail = out.str();
    return g.ok;
}

bool criterion7(std::string& detail) {
    Gate g;
    const auto t0 = Clock::now();
    const SystemShape shape({3, 3});
    int extendible = 0, seesaw_finds = 0;
    for (int r = 0; r < 500; ++r) {
        const int k = 1 + (r % 8);
        GenOptions gen;
        gen.seed = 5000 + static_cast<std::uint64_t>(r);
        const ProductVectorSet set = generate_orthogonal_set(shape, k, gen);

        const BipartiteDecision dec = is_extendible_bipartite(set);
        g.require(dec.status != SearchStatus::Infeasible, "exact search infeasible at k <= 8");
        if (dec.status == SearchStatus::Extendible) {
            ++extendible;
            g.require(dec.certificate.has_value(), "missing certificate at rep " +
                                                       std::to_string(r));
            if (dec.certificate)
                g.require(certificate_valid(*dec.certificate, set, 1e-9),
                          "certificate invalid at rep " + std::to_string(r));
        }

        g.require(testutil::brute_force_bipartite(set) ==
                      (dec.status == SearchStatus::Extendible),
                  "2^k enumeration disagrees at rep " + std::to_string(r));

        SeesawOptions so;
        so.seed = static_cast<std::uint64_t>(r);
        const SeesawResult res = seesaw_search(set, std::nullopt, so);
        if (res.found) {
            ++seesaw_finds;
            g.require(res.residual <= 1e-14, "found residual above threshold");
            g.require(dec.status == SearchStatus::Extendible,
                      "seesaw find without exact verdict at rep " + std::to_string(r));
        }
    }
    const double ms = ms_since(t0);
    std::ostringstream out;
    if (g.ok)
        out << "500 sets: " << extendible << " certified extendible, " << seesaw_finds
            << " seesaw finds all confirmed, enumeration agrees";
    else
        out << g.why.str();
    out << " (" << ms << " ms)";
    detail = out.str();
    return g.ok;
}

bool criterion8(std::string& detail) {
    Gate g;
    const std::vector<std::vector<int>> shapes = {{2, 2, 2}, {3, 3}, {3, 3, 3},
                                                  {2, 3, 4}, {4, 4}, {2, 2, 2, 2}};
    int checked = 0;
    for (int r = 0; r < 500; ++r) {
        const SystemShape shape(shapes[static_cast<std::size_t>(r) % shapes.size()]);
        const int cap = std::min(12LL, shape.total_dim());
        const int k = 2 + (r % (cap - 1));
        GenOptions gen;
        gen.seed = 7000 + static_cast<std::uint64_t>(r);
        const ProductVectorSet set = generate_orthogonal_set(shape, k, gen);

        const OrthoGraph graph = build_graph(set);
        const DegreeProfile prof = degree_profile(graph);
        const long long s = s_required(k, shape.sites());
        int max_deg = 0;
        for (int v = 0; v < k; ++v) max_deg = std::max(max_deg, prof.max_deg(v));
        g.require(max_deg >= s, "degree " + std::to_string(max_deg) + " < guaranteed " +
                                    std::to_string(s) + " at rep " + std::to_string(r));
        const PigeonholeWitness pw = pigeonhole_witness(graph);
        g.require(static_cast<long long>(pw.neighbors.size()) >= s,
                  "witness neighbor count below guarantee at rep " + std::to_string(r));
        ++checked;
    }
    g.require(checked == 500, "only " + std::to_string(checked) + " sets");
    detail = g.ok ? "500/500 sets meet the pigeonhole bound, zero violations" : g.why.str();
    return g.ok;
}

bool criterion9(std::string& detail) {
    Gate g;
    int points = 0;
    for (int n = 3; n <= 20; ++n)
        for (int d = 3; d <= 20; ++d, ++points)
            g.require(nontriviality_holds(n, d),
                      "fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
    detail = g.ok ? "floor((d^(n-1)-2)/(n-1)) >= d on all " + std::to_string(points) +
                        " grid points"
                  : g.why.str();
    return g.ok;
}

}  // namespace

int main() {
    using Criterion = bool (*)(std::string&);
    const Criterion criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                  criterion6, criterion7, criterion8, criterion9};
    int failures = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i](detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " - "
                  << detail << "\n";
    }
    return failures == 0 ? 0 : 1;
}
