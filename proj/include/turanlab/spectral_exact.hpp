#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "turanlab/exact.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/polynomial.hpp"

// Exact decisions about the largest adjacency eigenvalue, used to settle
// comparisons the floating-point route leaves inconclusive (in particular
// exact ties such as mu(G) = mu(T_r(n)) when G is a relabelled Turán graph).

namespace turanlab {

/// Orders above this are refused by the exact route (cost grows like n^4).
inline constexpr std::size_t kExactSpectralMaxOrder = 40;

/// det(xI - A) by Faddeev-LeVerrier over the integers.
inline Polynomial characteristic_polynomial(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kExactSpectralMaxOrder) throw std::invalid_argument("characteristic_polynomial: graph too large");
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  std::vector<BigInt> m(n * n, 0);  // M_{k-1}; M_0 = 0
  std::vector<BigInt> am(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) am[i * n + j] = 0;
      bits::for_each(g.row(static_cast<Vertex>(i)), [&](Vertex l) {
        for (std::size_t j = 0; j < n; ++j) am[i * n + j] += m[l * n + j];
      });
      am[i * n + i] += c[n - k + 1];
    }
    m.swap(am);
    // c_{n-k} = -tr(A M_k) / k
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bits::for_each(g.row(static_cast<Vertex>(i)), [&](Vertex l) { trace += m[l * n + i]; });
    }
    c[n - k] = -trace / static_cast<long long>(k);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (const auto& a : c) coeffs.emplace_back(a);
  return Polynomial(std::move(coeffs));
}

/// prod(x + s_i) - sum_i s_i prod_{j != i}(x + s_j); its unique positive root
/// is the largest eigenvalue of K(s_1..s_r) (r >= 2 non-empty parts).
inline Polynomial multipartite_secular_polynomial(std::span<const std::size_t> sizes) {
  Polynomial prod = Polynomial::constant(Rational(1));
  for (std::size_t s : sizes) {
    if (s > 0) prod = prod * Polynomial::linear(Rational(static_cast<long long>(s)));
  }
  Polynomial sum;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) continue;
    Polynomial term = Polynomial::constant(Rational(static_cast<long long>(sizes[i])));
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      if (j != i && sizes[j] > 0) term = term * Polynomial::linear(Rational(static_cast<long long>(sizes[j])));
    }
    sum = sum + term;
  }
  return prod - sum;
}

/// sum_i s_i / (x + s_i), exact.
inline Rational multipartite_secular_value(std::span<const std::size_t> sizes, const Rational& x) {
  Rational acc(0);
  for (std::size_t s : sizes) {
    if (s > 0) acc += Rational(static_cast<long long>(s)) / (x + Rational(static_cast<long long>(s)));
  }
  return acc;
}

/// Exact test of mu(G) > q.
inline bool exact_mu_exceeds(const Graph& g, const Rational& q) {
  if (g.edge_count() == 0) return q < 0;
  const Polynomial s = squarefree_part(characteristic_polynomial(g));
  return SturmChain(s).roots_above(q) > 0;
}

/// Exact test of mu(G) >= q.
inline bool exact_mu_at_least(const Graph& g, const Rational& q) {
  if (g.edge_count() == 0) return q <= 0;
  const Polynomial s = squarefree_part(characteristic_polynomial(g));
  return SturmChain(s).roots_above(q) > 0 || s(q) == 0;
}

/// Exact test of mu(G) > mu(K(sizes)).
inline bool exact_mu_exceeds_multipartite(const Graph& g, std::span<const std::size_t> sizes) {
  std::size_t nonempty = 0, total = 0;
  for (std::size_t s : sizes) {
    nonempty += s > 0 ? 1 : 0;
    total += s;
  }
  if (nonempty <= 1) return exact_mu_exceeds(g, Rational(0));
  if (g.edge_count() == 0) return false;

  // Bracket the root of f(x) = 1 where f is strictly decreasing on (0, inf):
  // f(2e/n) >= 1 since mu >= average degree, and f(n) < 1.
  Rational lo(static_cast<long long>(2 * multipartite_edge_count(sizes)), static_cast<long long>(total));
  Rational hi(static_cast<long long>(total));
  if (multipartite_secular_value(sizes, lo) == 1) return exact_mu_exceeds(g, lo);

  const Polynomial s = squarefree_part(characteristic_polynomial(g));
  Polynomial reduced = s;
  const Polynomial common = gcd(s, multipartite_secular_polynomial(sizes));
  // The secular polynomial has exactly one root in (lo, hi), and it is
  // simple, so a sign change of `common` there means mu(K) is an eigenvalue
  // of G. Dividing it out leaves a polynomial with no root at mu(K); any
  // other roots of `common` are negative and irrelevant.
  if (common.degree() >= 1 && common(lo) * common(hi) < 0) reduced = Polynomial::divmod(s, common).first;

  if (reduced.degree() <= 0) return false;
  const SturmChain chain(reduced);
  while (chain.roots_in(lo, hi) > 0) {
    const Rational mid = (lo + hi) / 2;
    const Rational f = multipartite_secular_value(sizes, mid);
    if (f == 1) return exact_mu_exceeds(g, mid);
    if (f > 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return chain.roots_above(hi) > 0;
}

}  // namespace turanlab
