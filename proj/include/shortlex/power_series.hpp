#ifndef SHORTLEX_POWER_SERIES_HPP
#define SHORTLEX_POWER_SERIES_HPP

// Truncated formal power series with exact rational coefficients, and the
// closed-form generating functions of the central alternating sums.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shortlex/bigint.hpp"

namespace shortlex {

/// Coefficients of z^0 .. z^order. Products and quotients are truncated at
/// the order of the shorter operand.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1, BigRational(0)) {}

  PowerSeries(std::size_t order, std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, BigRational(0));
  }

  static PowerSeries constant(std::size_t order, const BigRational& c) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c0 + c1 z
  static PowerSeries linear(std::size_t order, const BigRational& c0, const BigRational& c1) {
    PowerSeries s(order);
    s.coeffs_[0] = c0;
    if (order >= 1) s.coeffs_[1] = c1;
    return s;
  }

  /// (1 + a z)^r for rational r, via the binomial series.
  static PowerSeries binomial_power(std::size_t order, const BigRational& a, const BigRational& r) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    for (std::size_t t = 1; t <= order; ++t) {
      // c_t = c_{t-1} * (r - t + 1) / t * a
      s.coeffs_[t] = s.coeffs_[t - 1] * (r - BigRational(static_cast<long>(t) - 1)) * a /
                     BigRational(static_cast<long>(t));
    }
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const BigRational& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigRational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }

  /// True when every coefficient has denominator 1.
  bool integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRational& c) { return c.get_den() == 1; });
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    truncate(std::min(order(), o.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  PowerSeries& operator-=(const PowerSeries& o) {
    truncate(std::min(order(), o.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  PowerSeries& operator*=(const BigRational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const BigRational& c) { return a *= c; }
  friend PowerSeries operator*(const BigRational& c, PowerSeries a) { return a *= c; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  /// Multiplicative inverse; the constant term must be nonzero.
  PowerSeries reciprocal() const {
    if (sgn(coeffs_[0]) == 0) throw DomainError("reciprocal of a series with zero constant term");
    PowerSeries r(order());
    r.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t n = 1; n <= order(); ++n) {
      BigRational acc(0);
      for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
      r.coeffs_[n] = -acc * r.coeffs_[0];
    }
    return r;
  }

  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.reciprocal(); }

  /// Multiplication by z^k (order preserved, top terms dropped).
  PowerSeries shifted_up(std::size_t k) const {
    PowerSeries r(order());
    for (std::size_t i = 0; i + k <= order(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
  }

  /// Division by z^k; the low k coefficients must vanish. The result has order() - k.
  PowerSeries shifted_down(std::size_t k) const {
    if (k > order()) throw DomainError("shift exceeds series order");
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(coeffs_[i]) != 0) throw DomainError("series is not divisible by z^k");
    }
    return PowerSeries(order() - k, std::vector<BigRational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void truncate(std::size_t order) { coeffs_.resize(order + 1); }

  std::vector<BigRational> coeffs_;
};

/// Generating functions available through series().
enum class SeriesName { C, D, B, T, P, X };

inline SeriesName parse_series_name(std::string_view name) {
  if (name == "C") return SeriesName::C;
  if (name == "D") return SeriesName::D;
  if (name == "B") return SeriesName::B;
  if (name == "T") return SeriesName::T;
  if (name == "P") return SeriesName::P;
  if (name == "X") return SeriesName::X;
  throw DomainError("unknown series '" + std::string(name) + "' (expected one of C, D, B, T, P, X)");
}

/// Expansion to z^order of the closed forms
///   C(z) = (1-8z)^{-1/2} - 1
///   D(z) = z / ((1+z) sqrt(1-8z))
///   B(z) = (C(z) - 2 D(z)) / 2
///   T(z) = (16z/(1-8z) - z/(1+z)) / 3
///   P(z) = (1 - sqrt(1-8z) - 2z) / (2 (1+z) (1-8z))
///   X(z) = (1 - 4z - sqrt(1-8z)) / (4z)
inline PowerSeries series(SeriesName which, std::size_t order) {
  if (order < 1) throw DomainError("series order must be >= 1");
  const BigRational half(1, 2);
  auto inv_sqrt = [&](std::size_t o) { return PowerSeries::binomial_power(o, BigRational(-8), BigRational(-1, 2)); };
  auto sqrt_ = [&](std::size_t o) { return PowerSeries::binomial_power(o, BigRational(-8), half); };
  auto one_plus_z = PowerSeries::linear(order, 1, 1);
  auto one_minus_8z = PowerSeries::linear(order, 1, -8);
  auto z = PowerSeries::linear(order, 0, 1);

  switch (which) {
    case SeriesName::C:
      return inv_sqrt(order) - PowerSeries::constant(order, 1);
    case SeriesName::D:
      return z * one_plus_z.reciprocal() * inv_sqrt(order);
    case SeriesName::B: {
      auto c = inv_sqrt(order) - PowerSeries::constant(order, 1);
      auto d = z * one_plus_z.reciprocal() * inv_sqrt(order);
      return (c - d * BigRational(2)) * half;
    }
    case SeriesName::T:
      return (z * BigRational(16) * one_minus_8z.reciprocal() - z * one_plus_z.reciprocal()) * BigRational(1, 3);
    case SeriesName::P: {
      auto num = PowerSeries::constant(order, 1) - sqrt_(order) - z * BigRational(2);
      return num / (one_plus_z * one_minus_8z * BigRational(2));
    }
    case SeriesName::X: {
      auto num = PowerSeries::linear(order + 1, 1, -4) - sqrt_(order + 1);
      return num.shifted_down(1) * BigRational(1, 4);
    }
  }
  throw DomainError("unknown series");
}

inline PowerSeries series(std::string_view which, std::size_t order) {
  return series(parse_series_name(which), order);
}

}  // namespace shortlex

#endif  // SHORTLEX_POWER_SERIES_HPP
