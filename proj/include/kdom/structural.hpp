#pragma once

// Closed-form structural bounds for graphs with no K_{2,t}-minor. The
// quantities grow far beyond any floating-point range for interesting k and
// t, so everything is kept in log10 space; comparisons against observed
// (small) counts go through within_log10_bound.

#include <cmath>

#include "kdom/graph.hpp"

namespace kdom {

// Edge bound for K_{2,t}-minor-free graphs: |E| <= (t+1)(n-1)/2.
inline bool k2t_edge_bound_holds(const Graph& g, int t) {
    if (g.order() == 0) return true;
    return 2 * static_cast<long long>(g.edge_count()) <=
           static_cast<long long>(t + 1) * (g.order() - 1);
}

inline long double log10_factorial(int n) {
    return static_cast<long double>(std::lgamma(static_cast<long double>(n) + 1.0L)) /
           std::log(10.0L);
}

// alpha_{h,t} = (t+1)^{2h} (h+1)! — ceiling on |Q_h| / |Q|.
inline long double log10_alpha(int h, int t) {
    return 2.0L * h * std::log10(static_cast<long double>(t + 1)) + log10_factorial(h + 1);
}

// k^2 t^{2k t^k} — ceiling on the number of edges between two Voronoi cells
// of radius k.
inline long double log10_intercell_bound(int k, int t) {
    long double tk = std::pow(static_cast<long double>(t), static_cast<long double>(k));
    return 2.0L * std::log10(static_cast<long double>(k)) +
           2.0L * k * tk * std::log10(static_cast<long double>(t));
}

// Ceiling on the total border-vertex count over cells centered at an
// optimal set of size m: k^2 t^{2k t^k} (t+1) m.
inline long double log10_border_union_bound(int k, int t, std::size_t m) {
    return log10_intercell_bound(k, t) + std::log10(static_cast<long double>(t + 1)) +
           std::log10(static_cast<long double>(m));
}

// beta_{k,t} = 2 alpha_{3k,t}^k — ceiling on per-cell selections relative to
// the cell's border size (|U_0| <= 2|C*| whenever the border is non-empty).
inline long double log10_beta(int k, int t) {
    return std::log10(2.0L) + static_cast<long double>(k) * log10_alpha(3 * k, t);
}

// delta(t,k) = beta_{k,t} k^2 t^{2k t^k} (t+1) — the constant-factor
// approximation ceiling.
inline long double log10_delta(int k, int t) {
    return log10_beta(k, t) + log10_intercell_bound(k, t) +
           std::log10(static_cast<long double>(t + 1));
}

// True iff value <= 10^log10_bound, evaluated without leaving log space.
inline bool within_log10_bound(long double value, long double log10_bound) {
    if (value <= 0.0L) return true;
    return std::log10(value) <= log10_bound;
}

}  // namespace kdom
