#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "turanlab/exact.hpp"

namespace turanlab {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  /// x + a
  static Polynomial linear(const Rational& a) { return Polynomial({a, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(std::size_t i) const { return c_[i]; }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    std::vector<Rational> d = c_;
    const Rational lead = leading();
    for (auto& a : d) a /= lead;
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> d = p.c_;
    for (auto& a : d) a *= s;
    return Polynomial(std::move(d));
  }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    const Rational lead = b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Rational f = rem[k + b.c_.size() - 1] / lead;
      quo[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Monic gcd.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  const Polynomial g = gcd(p, p.derivative());
  return Polynomial::divmod(p, g).first.monic();
}

/// Sturm chain p_0 = p, p_1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().is_zero()) {
      auto r = Polynomial::divmod(chain_[chain_.size() - 2], chain_.back()).second;
      chain_.push_back(Rational(-1) * r);
    }
    chain_.pop_back();
  }

  /// Number of distinct real roots in (a, b], a < b.
  std::size_t roots_in(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }

  /// Number of distinct real roots in (a, +inf).
  std::size_t roots_above(const Rational& a) const { return variations_at(a) - variations_at_infinity(); }

 private:
  static std::size_t count_changes(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  std::size_t variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(sign(p(x)));
    return count_changes(s);
  }

  std::size_t variations_at_infinity() const {
    std::vector<int> s;
    for (const auto& p : chain_) s.push_back(sign(p.leading()));
    return count_changes(s);
  }

  static int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

  std::vector<Polynomial> chain_;
};

}  // namespace turanlab
