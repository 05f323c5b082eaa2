#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "turanlab/exact.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/spectral_exact.hpp"

namespace turanlab {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kRefineTolerance = 1e-13;

/// Largest adjacency eigenvalue with a rigorous enclosure.
///
/// `residual` is the Collatz-Wielandt half-width max_i |(Ax)_i - value x_i| / x_i
/// of the final positive iterate, which bounds the infinity-norm residual of
/// the max-normalised vector and encloses the Perron value. `rounding` bounds
/// the floating-point error of that computation. mu(G) lies in
/// [value - radius(), value + radius()].
struct SpectralEstimate {
  double value = 0.0;
  double residual = 0.0;
  double rounding = 0.0;
  std::size_t iterations = 0;
  bool converged = true;

  double radius() const { return residual + rounding; }
  double lower() const { return value - radius(); }
  double upper() const { return value + radius(); }
};

inline std::size_t default_max_iterations(std::size_t n) { return 100 * n + 1000; }

namespace detail {

struct ComponentResult {
  double value = 0.0;
  double residual = 0.0;
  double rounding = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

// Power iteration on (A + I) restricted to one connected component, from the
// all-ones vector. The shift makes the Perron value strictly dominant even
// for bipartite components.
inline ComponentResult perron_on_component(const std::vector<std::vector<std::uint32_t>>& nbrs, double tol,
                                           std::size_t max_iter) {
  const std::size_t k = nbrs.size();
  ComponentResult out;
  std::size_t max_deg = 0;
  for (const auto& l : nbrs) max_deg = std::max(max_deg, l.size());
  std::vector<double> x(k, 1.0), y(k);
  double prev = 0.0;
  out.converged = false;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    double xy = 0.0, xx = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double acc = x[i];
      for (std::uint32_t j : nbrs[i]) acc += x[j];
      y[i] = acc;
      xy += x[i] * acc;
      xx += x[i] * x[i];
    }
    const double rho = xy / xx - 1.0;
    double lo = INFINITY, hi = -INFINITY, ymax = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double ratio = y[i] / x[i] - 1.0;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      ymax = std::max(ymax, y[i]);
    }
    out.value = rho;
    out.residual = std::max(hi - rho, rho - lo);
    out.rounding = static_cast<double>(max_deg + 2) * (std::abs(hi) + 2.0) * DBL_EPSILON;
    out.iterations = it;
    if (it > 1 && std::abs(rho - prev) < tol && out.residual <= 10.0 * tol) {
      out.converged = true;
      break;
    }
    prev = rho;
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / ymax;
  }
  return out;
}

}  // namespace detail

/// mu(G) by shifted power iteration, run separately on every connected
/// component; the estimate is the maximum over components.
inline SpectralEstimate spectral_radius(const Graph& g, double tol = kDefaultTolerance, std::size_t max_iter = 0) {
  if (!(tol > 0)) throw std::invalid_argument("spectral_radius: tol must be positive");
  const std::size_t n = g.order();
  if (max_iter == 0) max_iter = default_max_iterations(n);
  SpectralEstimate est;
  if (g.edge_count() == 0) return est;

  std::vector<std::int32_t> comp(n, -1);
  std::vector<std::uint32_t> local(n);
  std::vector<Vertex> members, queue;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    members.clear();
    queue.assign(1, s);
    comp[s] = static_cast<std::int32_t>(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      members.push_back(v);
      bits::for_each(g.row(v), [&](Vertex w) {
        if (comp[w] < 0) {
          comp[w] = static_cast<std::int32_t>(s);
          queue.push_back(w);
        }
      });
    }
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::vector<std::uint32_t>> nbrs(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      bits::for_each(g.row(members[i]), [&](Vertex w) { nbrs[i].push_back(local[w]); });
    }
    const auto r = detail::perron_on_component(nbrs, tol, max_iter);
    est.value = std::max(est.value, r.value);
    est.residual = std::max(est.residual, r.residual);
    est.rounding = std::max(est.rounding, r.rounding);
    est.iterations += r.iterations;
    est.converged = est.converged && r.converged;
  }
  return est;
}

/// Largest eigenvalue of K(sizes) (empty parts ignored): the root of
/// sum_i s_i / (x + s_i) = 1 on (0, inf), found by bisection to width < tol.
inline double multipartite_mu_from_sizes(std::span<const std::size_t> sizes, double tol = kDefaultTolerance) {
  if (!(tol > 0)) throw std::invalid_argument("multipartite_mu: tol must be positive");
  std::size_t nonempty = 0, total = 0;
  for (std::size_t s : sizes) {
    nonempty += s > 0 ? 1 : 0;
    total += s;
  }
  if (nonempty <= 1) return 0.0;
  auto f = [&](double x) {
    double acc = 0.0;
    for (std::size_t s : sizes)
      if (s > 0) acc += static_cast<double>(s) / (x + static_cast<double>(s));
    return acc;
  };
  double lo = 2.0 * static_cast<double>(multipartite_edge_count(sizes)) / static_cast<double>(total);
  double hi = static_cast<double>(total);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double multipartite_mu_exact(const PartSpec& spec, double tol = kDefaultTolerance) {
  return multipartite_mu_from_sizes(spec.sizes(), tol);
}

inline double turan_mu(std::size_t n, std::size_t r, double tol = kDefaultTolerance) {
  const auto sizes = turan_part_sizes(n, r);
  return multipartite_mu_from_sizes(sizes, tol);
}

enum class SpectralVerdict { GreaterCertified, NotGreaterCertified, Inconclusive };

/// How a comparison was finally decided.
enum class Resolution { Numeric, Refined, Exact, Unresolved };

struct SpectralComparison {
  SpectralEstimate mu_g;
  double threshold = 0.0;  // mu(T_r(n)) or the caller's bound
  double solver_tol = 0.0;
  SpectralVerdict verdict = SpectralVerdict::Inconclusive;
  Resolution resolved_by = Resolution::Numeric;
  /// Verdict at the base tolerance, before any escalation.
  SpectralVerdict initial_verdict = SpectralVerdict::Inconclusive;
};

/// Interval comparison of an enclosure against threshold +- solver_tol.
inline SpectralVerdict certify_greater(const SpectralEstimate& mu, double threshold, double solver_tol) {
  if (!mu.converged) return SpectralVerdict::Inconclusive;
  if (mu.lower() > threshold + solver_tol) return SpectralVerdict::GreaterCertified;
  if (mu.upper() < threshold - solver_tol) return SpectralVerdict::NotGreaterCertified;
  return SpectralVerdict::Inconclusive;
}

/// Escalation used when the base comparison is inconclusive: recompute at
/// `refine_tol`, then (for small graphs) decide exactly by Sturm sequences.
struct ResolvePolicy {
  bool refine = false;
  double refine_tol = kRefineTolerance;
  std::size_t exact_max_order = 0;

  static ResolvePolicy none() { return {}; }
  static ResolvePolicy full(std::size_t exact_max = 16) { return {true, kRefineTolerance, exact_max}; }
};

/// Part sizes (largest first) when G is complete multipartite, i.e. when
/// non-adjacency is an equivalence relation; nullopt otherwise.
inline std::optional<std::vector<std::size_t>> complete_multipartite_sizes(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> part(n, n);
  std::vector<std::size_t> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] != n) continue;
    const std::size_t id = sizes.size();
    sizes.push_back(0);
    for (Vertex u = v; u < n; ++u) {
      if (u == v || !g.adjacent(u, v)) {
        if (part[u] != n) return std::nullopt;
        part[u] = id;
        ++sizes[id];
      }
    }
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) == (part[u] == part[v])) return std::nullopt;
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

/// mu(G) vs mu(T_r(n)). Pass `precomputed` to reuse an estimate of mu(G)
/// computed at the same tolerance.
inline SpectralComparison compare_mu_to_turan(const Graph& g, std::size_t r, double tol = kDefaultTolerance,
                                              const ResolvePolicy& policy = {},
                                              const SpectralEstimate* precomputed = nullptr) {
  if (r < 2) throw std::invalid_argument("compare_mu_to_turan: r must be >= 2");
  if (g.order() == 0) throw std::invalid_argument("compare_mu_to_turan: empty vertex set");
  const auto sizes = turan_part_sizes(g.order(), r);
  SpectralComparison cmp;
  cmp.mu_g = precomputed ? *precomputed : spectral_radius(g, tol);
  cmp.threshold = multipartite_mu_from_sizes(sizes, tol);
  cmp.solver_tol = tol;
  cmp.verdict = certify_greater(cmp.mu_g, cmp.threshold, tol);
  cmp.initial_verdict = cmp.verdict;
  if (cmp.verdict != SpectralVerdict::Inconclusive) return cmp;
  if (policy.refine) {
    cmp.mu_g = spectral_radius(g, policy.refine_tol);
    cmp.threshold = multipartite_mu_from_sizes(sizes, policy.refine_tol);
    cmp.solver_tol = policy.refine_tol;
    cmp.verdict = certify_greater(cmp.mu_g, cmp.threshold, policy.refine_tol);
    cmp.resolved_by = Resolution::Refined;
    if (cmp.verdict != SpectralVerdict::Inconclusive) return cmp;
  }
  std::vector<std::size_t> nonempty;
  for (auto s : sizes)
    if (s > 0) nonempty.push_back(s);
  if (policy.exact_max_order > 0 && complete_multipartite_sizes(g) == nonempty) {
    // G is a relabelled T_r(n): an exact tie at any order
    cmp.verdict = SpectralVerdict::NotGreaterCertified;
    cmp.resolved_by = Resolution::Exact;
    return cmp;
  }
  if (g.order() <= policy.exact_max_order) {
    cmp.verdict = exact_mu_exceeds_multipartite(g, sizes) ? SpectralVerdict::GreaterCertified
                                                           : SpectralVerdict::NotGreaterCertified;
    cmp.resolved_by = Resolution::Exact;
    return cmp;
  }
  cmp.resolved_by = Resolution::Unresolved;
  return cmp;
}

/// mu(G) vs an exact rational bound, e.g. (1 - 1/r - b) n.
inline SpectralComparison compare_mu_to_bound(const Graph& g, const Rational& bound, double tol = kDefaultTolerance,
                                              const ResolvePolicy& policy = {},
                                              const SpectralEstimate* precomputed = nullptr) {
  SpectralComparison cmp;
  cmp.mu_g = precomputed ? *precomputed : spectral_radius(g, tol);
  cmp.threshold = to_double(bound);
  // The bound is exact; only its double rounding needs slack.
  const double slack = std::abs(cmp.threshold) * DBL_EPSILON;
  cmp.solver_tol = slack;
  cmp.verdict = certify_greater(cmp.mu_g, cmp.threshold, slack);
  cmp.initial_verdict = cmp.verdict;
  if (cmp.verdict != SpectralVerdict::Inconclusive) return cmp;
  if (policy.refine) {
    cmp.mu_g = spectral_radius(g, policy.refine_tol);
    cmp.verdict = certify_greater(cmp.mu_g, cmp.threshold, slack);
    cmp.resolved_by = Resolution::Refined;
    if (cmp.verdict != SpectralVerdict::Inconclusive) return cmp;
  }
  if (g.order() <= policy.exact_max_order) {
    cmp.verdict = exact_mu_exceeds(g, bound) ? SpectralVerdict::GreaterCertified : SpectralVerdict::NotGreaterCertified;
    cmp.resolved_by = Resolution::Exact;
    return cmp;
  }
  cmp.resolved_by = Resolution::Unresolved;
  return cmp;
}

}  // namespace turanlab
