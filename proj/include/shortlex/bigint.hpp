#ifndef SHORTLEX_BIGINT_HPP
#define SHORTLEX_BIGINT_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace shortlex {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Thrown when an argument lies outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

/// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n (n >= 0).
inline BigInt binomial(long n, long k) {
  BigInt r;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

/// "p/q" with canonical sign; integers print as "p/1" so the format is uniform.
/// "p/q", or just "p" when the value is an integer.
inline std::string to_string(const BigRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

inline double to_double(const BigRational& v) { return v.get_d(); }

/// Decimal rendering of a double with the given number of significant digits.
inline std::string to_decimal(double v, int significant_digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  return buf;
}

inline std::string to_decimal(const BigRational& v, int significant_digits = 12) {
  return to_decimal(v.get_d(), significant_digits);
}

/// Number of binary digits of a positive integer.
inline std::size_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline unsigned long to_ulong_checked(const BigInt& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) throw DomainError("integer does not fit in unsigned long");
  return v.get_ui();
}

}  // namespace shortlex

#endif  // SHORTLEX_BIGINT_HPP
