#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace turanlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// Exact value of a finite double as a dyadic rational.
inline Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact_rational: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an integer for every finite double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  Rational r(scaled);
  exp -= 53;
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << (-exp));
  }
  return r;
}

inline BigInt ipow(BigInt base, unsigned exponent) {
  BigInt result = 1;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline Rational rpow(const Rational& base, unsigned exponent) {
  return Rational(ipow(numerator(base), exponent), ipow(denominator(base), exponent));
}

/// "p/q", or "p" for integers. Used for every exact value that is serialized.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Distance below which a double-precision floor/ceil argument is recomputed
/// in 50-digit arithmetic before rounding.
inline constexpr double kRoundingGuard = 1e-9;

namespace detail {

// 50-digit results closer than this to an integer are taken as that integer,
// so exact powers such as 100^(1/2) do not round the wrong way.
inline HighFloat snap_to_integer(const HighFloat& x) {
  const HighFloat nearest = boost::multiprecision::round(x);
  if (boost::multiprecision::abs(x - nearest) < HighFloat("1e-40") * (1 + boost::multiprecision::abs(x))) return nearest;
  return x;
}

}  // namespace detail

/// floor(c * ln n), guarded near integers.
inline std::int64_t floor_c_ln_n(double c, std::uint64_t n) {
  const double v = c * std::log(static_cast<double>(n));
  if (std::abs(v - std::round(v)) < kRoundingGuard) {
    const HighFloat hv = HighFloat(c) * boost::multiprecision::log(HighFloat(n));
    return boost::multiprecision::floor(detail::snap_to_integer(hv)).convert_to<std::int64_t>();
  }
  return static_cast<std::int64_t>(std::floor(v));
}

/// ceil(n^(1 - k*sqrt(c))), guarded near integers.
inline std::int64_t ceil_n_pow_one_minus(double k, double c, std::uint64_t n) {
  const double v = std::pow(static_cast<double>(n), 1.0 - k * std::sqrt(c));
  if (std::abs(v - std::round(v)) < kRoundingGuard * std::max(1.0, v)) {
    const HighFloat e = HighFloat(1) - HighFloat(k) * boost::multiprecision::sqrt(HighFloat(c));
    const HighFloat hv = boost::multiprecision::pow(HighFloat(n), e);
    return boost::multiprecision::ceil(detail::snap_to_integer(hv)).convert_to<std::int64_t>();
  }
  return static_cast<std::int64_t>(std::ceil(v));
}

/// ceil(n^(1 - c * r^3)), guarded near integers.
inline std::int64_t ceil_n_pow_one_minus_cr3(double c, std::uint64_t r, std::uint64_t n) {
  const double r3 = static_cast<double>(r * r * r);
  const double v = std::pow(static_cast<double>(n), 1.0 - c * r3);
  if (std::abs(v - std::round(v)) < kRoundingGuard * std::max(1.0, v)) {
    const HighFloat e = HighFloat(1) - HighFloat(c) * HighFloat(r * r * r);
    const HighFloat hv = boost::multiprecision::pow(HighFloat(n), e);
    return boost::multiprecision::ceil(detail::snap_to_integer(hv)).convert_to<std::int64_t>();
  }
  return static_cast<std::int64_t>(std::ceil(v));
}

}  // namespace turanlab
