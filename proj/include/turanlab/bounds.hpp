#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "turanlab/exact.hpp"

// Exact predicates for the thresholds that appear in theorem statements.
// Everything here is integer or rational arithmetic; the only transcendental
// quantities (ln n, e^{2/c}, n^{1-sqrt c}) are confined to regime checks and
// the guarded floor/ceil helpers in exact.hpp.

namespace turanlab {

/// The quantity (base - k * x^{1/3}) * n for rational base, k, x >= 0.
/// Comparisons against it are decided exactly by cubing.
struct CubeRootBound {
  Rational base;
  Rational k;
  Rational x;
  std::size_t n = 0;

  CubeRootBound(Rational base_, Rational k_, Rational x_, std::size_t n_)
      : base(std::move(base_)), k(std::move(k_)), x(std::move(x_)), n(n_) {
    if (x < 0 || k < 0) throw std::invalid_argument("CubeRootBound: k and x must be non-negative");
  }

  /// v > bound
  bool exceeded_by(const Rational& v) const {
    const Rational gap = base * Rational(static_cast<long long>(n)) - v;  // need gap < k x^{1/3} n
    if (gap < 0) return true;
    return gap * gap * gap < cube_of_slack();
  }

  /// v >= bound
  bool met_by(const Rational& v) const {
    const Rational gap = base * Rational(static_cast<long long>(n)) - v;
    if (gap < 0) return true;
    return gap * gap * gap <= cube_of_slack();
  }

  double approx() const {
    return (to_double(base) - to_double(k) * std::cbrt(to_double(x))) * static_cast<double>(n);
  }

 private:
  // (k x^{1/3} n)^3
  Rational cube_of_slack() const {
    const Rational nn(static_cast<long long>(n));
    return k * k * k * x * nn * nn * nn;
  }
};

/// r^{-E} in 50-digit floating point (no underflow for any practical r).
inline HighFloat inverse_power(std::size_t r, std::size_t exponent) {
  return boost::multiprecision::pow(HighFloat(r), -HighFloat(exponent));
}

/// c <= r^{-E} / divisor, with relative slack for a c that was itself
/// computed in double precision from the same expression.
inline bool c_at_most(double c, std::size_t r, std::size_t exponent, unsigned divisor = 1) {
  const HighFloat limit = inverse_power(r, exponent) / divisor;
  return HighFloat(c) <= limit * HighFloat(1 + 1e-12);
}

/// 2 / ln n <= c
inline bool c_at_least_two_over_ln(double c, std::uint64_t n) {
  if (n < 2) return false;
  return HighFloat(c) * boost::multiprecision::log(HighFloat(n)) >= 2;
}

/// n >= e^{2/c}
inline bool n_at_least_exp_two_over(double c, std::uint64_t n) {
  if (!(c > 0) || n < 1) return false;
  return boost::multiprecision::log(HighFloat(n)) >= HighFloat(2) / HighFloat(c);
}

/// r^{-E}/divisor as a double (0 on underflow).
inline double default_c(std::size_t r, std::size_t exponent, unsigned divisor = 1) {
  return std::pow(static_cast<double>(r), -static_cast<double>(exponent)) / divisor;
}

}  // namespace turanlab
