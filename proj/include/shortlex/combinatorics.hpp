#ifndef SHORTLEX_COMBINATORICS_HPP
#define SHORTLEX_COMBINATORICS_HPP

// Exact counts of admissible strings by information cost and length.
//
// Notation used throughout:
//   S_k        strings of cost k                        class_size(k)
//   T_{<k}     strings of cost below k                  cumulative_below(k)
//   U(m, j)    binom(m - j, j) * 2^j                    u_count(m, j)
//   N(k, l)    strings of cost k and length l           slice_count(k, l)
//   W_{<n}(k)  strings of cost k and length below n     shorter_in_class(n, k)
//   V_n(k)     S_k / 2 - W_{<n}(k)                      short_codewords_left(n, k)

#include <string>

#include "shortlex/bigint.hpp"

namespace shortlex {

/// S_k = (2^{k+1} + 4(-1)^k) / 3.
inline BigInt class_size(long k) {
  if (k < 2) throw DomainError("class_size: cost must be >= 2, got " + std::to_string(k));
  BigInt s = pow2(static_cast<unsigned long>(k + 1));
  if (k % 2 == 0) {
    s += 4;
  } else {
    s -= 4;
  }
  mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), 3);
  return s;
}

/// T_{<k} = sum_{j=2}^{k-1} S_j, summed as two geometric series.
inline BigInt cumulative_below(long k) {
  if (k < 2) throw DomainError("cumulative_below: cost must be >= 2, got " + std::to_string(k));
  // sum_{j=2}^{k-1} 2^{j+1} = 2^{k+1} - 8; sum_{j=2}^{k-1} (-1)^j is 1 when k is odd.
  BigInt t = pow2(static_cast<unsigned long>(k + 1)) - 8;
  if (k % 2 != 0) t += 4;
  mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 3);
  return t;
}

/// U(m, j) = binom(m - j, j) 2^j, and 0 when j < 0 or 2j > m.
inline BigInt u_count(long m, long j) {
  if (j < 0 || 2 * j > m) return BigInt(0);
  BigInt r = binomial(m - j, j);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(j));
  return r;
}

/// N(k, l) = 4 binom(l - 1, k - l - 1) 2^{k-l-1}; 0 outside the support.
inline BigInt slice_count(long k, long length) {
  if (length < 1) return BigInt(0);
  long j = k - length - 1;
  if (j < 0 || j > length - 1) return BigInt(0);
  BigInt r = binomial(length - 1, j);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(j) + 2);
  return r;
}

namespace detail {

/// Walks U(m, j) for fixed m from j = floor(m/2) downwards, keeping
/// binom(m - j, j) exact by ratio updates instead of fresh binomials.
class UColumn {
 public:
  explicit UColumn(long m) : m_(m), j_(m / 2), binom_(binomial(m - m / 2, m / 2)) {}

  long index() const noexcept { return j_; }

  /// U(m, j) at the current index.
  BigInt value() const {
    BigInt v;
    mpz_mul_2exp(v.get_mpz_t(), binom_.get_mpz_t(), static_cast<unsigned long>(j_));
    return v;
  }

  /// Moves to j - 1; requires index() >= 1.
  void step_down() {
    // binom(top+1, j-1) = binom(top, j) * j / (top-j+1) * (top+1) / (top-j+2)
    long top = m_ - j_;
    binom_ *= j_;
    mpz_divexact_ui(binom_.get_mpz_t(), binom_.get_mpz_t(), static_cast<unsigned long>(top - j_ + 1));
    binom_ *= (top + 1);
    mpz_divexact_ui(binom_.get_mpz_t(), binom_.get_mpz_t(), static_cast<unsigned long>(top - j_ + 2));
    --j_;
  }

 private:
  long m_;
  long j_;
  BigInt binom_;
};

/// sum_{j >= j_from} U(m, j).
inline BigInt u_tail_sum(long m, long j_from) {
  BigInt total;
  if (m < 0) return total;
  if (j_from < 0) j_from = 0;
  if (m / 2 < j_from) return total;
  UColumn col(m);
  for (;;) {
    total += col.value();
    if (col.index() == j_from) break;
    col.step_down();
  }
  return total;
}

}  // namespace detail

/// W_{<n}(k) = sum_{l=1}^{n-1} N(k, l) = 4 sum_{j >= k-n} U(k-2, j).
inline BigInt shorter_in_class(long n, long k) {
  if (n <= 1 || k < 2) return BigInt(0);
  BigInt w = detail::u_tail_sum(k - 2, k - n);
  mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), 2);
  return w;
}

/// V_n(k) = S_k / 2 - W_{<n}(k). Signed: negative when the short codewords of
/// class k run out before the length-n slice starts.
inline BigInt short_codewords_left(long n, long k) {
  BigInt half = class_size(k);
  mpz_fdiv_q_2exp(half.get_mpz_t(), half.get_mpz_t(), 1);
  return half - shorter_in_class(n, k);
}

/// Per-class quantities of the length dichotomy.
struct CostProfile {
  long k = 0;
  BigInt class_size;        // S_k
  BigInt cumulative_below;  // T_{<k}
  BigInt short_quota;       // S_k / 2
};

inline CostProfile cost_profile(long k) {
  CostProfile p;
  p.k = k;
  p.class_size = class_size(k);
  p.cumulative_below = cumulative_below(k);
  p.short_quota = p.class_size / 2;
  return p;
}

// Central alternating sums.

/// C_t = U(3t, t) = binom(2t, t) 2^t.
inline BigInt central_C(long t) {
  if (t < 0) throw DomainError("central_C: t must be >= 0");
  BigInt r = binomial(2 * t, t);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(t));
  return r;
}

/// D_t = C_{t-1} - C_{t-2} + ... + (-1)^{t-1} C_0.
inline BigInt central_D(long t) {
  if (t < 1) throw DomainError("central_D: t must be >= 1");
  BigInt d;
  // C_s = C_{s-1} * 4(2s - 1) / s, starting from C_0 = 1; sign of C_s is (-1)^{t-1-s}.
  BigInt c(1);
  for (long s = 0; s <= t - 1; ++s) {
    if (s > 0) {
      c *= 4 * (2 * s - 1);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(s));
    }
    if ((t - 1 - s) % 2 == 0) {
      d += c;
    } else {
      d -= c;
    }
  }
  return d;
}

/// sum_{j=0}^{t-1} U(3t, j) - sum_{j >= t+1} U(3t, j).
inline BigInt central_D_defining(long t) {
  if (t < 1) throw DomainError("central_D_defining: t must be >= 1");
  BigInt total_below = detail::u_tail_sum(3 * t, 0) - detail::u_tail_sum(3 * t, t);
  return total_below - detail::u_tail_sum(3 * t, t + 1);
}

/// B_t = C_t / 2 - D_t.
inline BigInt central_B(long t) {
  if (t < 1) throw DomainError("central_B: t must be >= 1");
  return central_C(t) / 2 - central_D(t);
}

/// sum_{j=0}^{t-1} U(3t-1, j) - sum_{j >= t+1} U(3t-1, j).
inline BigInt central_B_defining(long t) {
  if (t < 1) throw DomainError("central_B_defining: t must be >= 1");
  long m = 3 * t - 1;
  BigInt below = detail::u_tail_sum(m, 0) - detail::u_tail_sum(m, t);
  return below - detail::u_tail_sum(m, t + 1);
}

/// A_t = sum_{j=0}^{t-2} U(3t-2, j) - sum_{j >= t} U(3t-2, j).
inline BigInt central_A(long t) {
  if (t < 1) throw DomainError("central_A: t must be >= 1");
  long m = 3 * t - 2;
  BigInt below = detail::u_tail_sum(m, 0) - detail::u_tail_sum(m, t - 1);
  return below - detail::u_tail_sum(m, t);
}

/// Symbol class of the last fixed position when counting completions.
enum class PrefixState { Start, AB, CD };

/// Admissible continuations of `remaining` symbols whose {C,D} count over the
/// non-final positions equals `cd_budget`. For AB/CD the current position is
/// non-final whenever remaining > 0 and is included in the budget.
///
/// Every non-final step picks the class of the next symbol freely and then has
/// 1 choice out of A/B or 2 out of C/D; the final step has 2 or 4 choices. The
/// count is therefore 2 * 2^budget * binom(free positions, budget left for them).
inline BigInt prefix_completions(PrefixState state, long remaining, long cd_budget) {
  if (remaining < 0 || cd_budget < 0) return BigInt(0);
  if (state == PrefixState::Start) {
    if (remaining == 0) return BigInt(cd_budget == 0 ? 1 : 0);
    BigInt r = binomial(remaining - 1, cd_budget);
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(cd_budget) + 2);
    return r;
  }
  if (remaining == 0) return BigInt(cd_budget == 0 ? 1 : 0);
  long own = state == PrefixState::CD ? 1 : 0;
  BigInt r = binomial(remaining - 1, cd_budget - own);
  if (sgn(r) == 0) return r;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(cd_budget) + 1);
  return r;
}

}  // namespace shortlex

#endif  // SHORTLEX_COMBINATORICS_HPP
