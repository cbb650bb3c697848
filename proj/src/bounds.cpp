#include "upbkit/bounds.hpp"

namespace upbkit {

long long checked_pow(long long base, int exp) {
    if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
    long long r = 1;
    for (int i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r))
            throw std::overflow_error("checked_pow: result exceeds 64-bit range");
    return r;
}

namespace {

void require_bipartite_domain(long long d1, long long d2) {
    if (d1 < 3 || d2 < 3)
        throw BoundsDomainError("bipartite UPB bounds require both dimensions >= 3");
}

void require_multipartite_domain(int n, int d) {
    if (n < 3 || d < 3)
        throw BoundsDomainError("multipartite bounds require n >= 3 and d >= 3");
}

}  // namespace

long long min_upb_bipartite(long long d1, long long d2) {
    require_bipartite_domain(d1, d2);
    if (d1 % 2 == 0 && d2 % 2 == 0) return d1 + d2;
    return d1 + d2 - 1;
}

long long max_upb_bipartite(long long d1, long long d2) {
    require_bipartite_domain(d1, d2);
    long long p;
    if (__builtin_mul_overflow(d1, d2, &p))
        throw std::overflow_error("max_upb_bipartite: product exceeds 64-bit range");
    return p - 4;
}

long long min_gupb(int n, int d) {
    require_multipartite_domain(n, d);
    return checked_pow(d, n - 1) + d - (d % 2 == 1 ? 1 : 0);
}

long long max_ges_dim(int n, int d) {
    if (n < 2 || d < 2) throw BoundsDomainError("max_ges_dim requires n >= 2 and d >= 2");
    return (checked_pow(d, n - 1) - 1) * (d - 1);
}

long long s_required(long long k, int n) {
    if (k < 1 || n < 2) throw std::invalid_argument("s_required: need k >= 1 and n >= 2");
    return (k - 1 + n - 1) / n;
}

long long prop1_max_k(int n, int d) {
    require_multipartite_domain(n, d);
    const long long p = checked_pow(d, n - 1);
    return p + (p - 2) / (n - 1);
}

long long prop1_max_k_scan(int n, int d) {
    require_multipartite_domain(n, d);
    const long long w = checked_pow(d, n - 1) - 1;
    long long k = 1;  // f(1) = 1 <= w always
    while (k + 1 - s_required(k + 1, n) <= w) ++k;
    return k;
}

bool nontriviality_holds(int n, int d) {
    require_multipartite_domain(n, d);
    unsigned __int128 p = 1;
    for (int i = 0; i < n - 1; ++i) p *= static_cast<unsigned>(d);
    return (p - 2) / static_cast<unsigned>(n - 1) >= static_cast<unsigned>(d);
}

std::vector<Table1Entry> table1(int n_lo, int n_hi, int d_lo, int d_hi) {
    if (n_lo > n_hi || d_lo > d_hi) throw BoundsDomainError("table1: empty range");
    std::vector<Table1Entry> out;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int d = d_lo; d <= d_hi; ++d)
            out.push_back({n, d, min_gupb(n, d), prop1_max_k(n, d)});
    return out;
}

BoundsReport bounds_report(int n, int d) {
    require_multipartite_domain(n, d);
    BoundsReport r;
    r.n = n;
    r.d = d;
    r.w = checked_pow(d, n - 1) - 1;
    r.min_gupb = min_gupb(n, d);
    r.prop1_max_k = prop1_max_k(n, d);
    r.max_ges_dim = max_ges_dim(n, d);
    r.min_upb_steepest_cut = min_upb_bipartite(d, r.w + 1);
    r.max_upb_steepest_cut = max_upb_bipartite(d, r.w + 1);
    r.excluded_interval = {r.min_gupb, r.prop1_max_k};
    return r;
}

BoundsReport bounds_report(const SystemShape& shape) {
    const int d = shape.dim(0);
    for (int m = 1; m < shape.sites(); ++m)
        if (shape.dim(m) != d)
            throw BoundsDomainError(
                "cardinality bounds for heterogeneous local dimensions are not derived in "
                "source; provide a homogeneous shape");
    return bounds_report(shape.sites(), d);
}

}  // namespace upbkit
