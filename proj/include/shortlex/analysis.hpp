#ifndef SHORTLEX_ANALYSIS_HPP
#define SHORTLEX_ANALYSIS_HPP

// Exact saving probabilities and expected code lengths on length-n blocks.
//
// With K_n the information cost of the block and L_n its code length,
// L_n = K_n - I_n where I_n flags the short half of the cost class, so
//   E[L_n] = (3n/2 + 1/2) - P(I_n = 1).
// The number X of C/D symbols among positions 1..n-1 is Bin(n-1, 1/2) and
// fixes K_n = n + 1 + X; conditionally on X = x the saving probability is
// g_n(x) = clamp(V_n(k) / N(k, n), 0, 1) with k = n + 1 + x.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "shortlex/bigint.hpp"
#include "shortlex/codec.hpp"
#include "shortlex/combinatorics.hpp"
#include "shortlex/source.hpp"

namespace shortlex {

/// p_n(x) = binom(n-1, x) / 2^{n-1}.
inline BigRational binomial_weight(long n, long x) {
  if (n < 1) throw DomainError("binomial_weight: n must be >= 1");
  return make_rational(binomial(n - 1, x), pow2(static_cast<unsigned long>(n - 1)));
}

inline BigRational clamp_unit(const BigRational& r) {
  if (r < 0) return BigRational(0);
  if (r > 1) return BigRational(1);
  return r;
}

/// g_n(x), evaluated from the raw counts V_n(k) and N(k, n).
inline BigRational conditional_saving(long n, long x) {
  if (n < 2) throw DomainError("conditional_saving: n must be >= 2");
  if (x < 0 || x > n - 1) throw DomainError("conditional_saving: x must lie in [0, n-1]");
  long k = n + 1 + x;
  return clamp_unit(make_rational(short_codewords_left(n, k), slice_count(k, n)));
}

/// Smallest x with x >= (n+1)/2; every x from here on has g_n(x) = 1.
inline long saturation_start(long n) { return (n + 2) / 2; }

/// P(I_n = 1).
///
/// Along x the quantities needed by g_n(x) are all row binomials once
/// m = n + x - 1 is substituted:
///   N(k, n)    = 4 binom(n-1, x) 2^x
///   W_{<n}(k)  = 4 F_x,  F_x = sum_{j >= x+1} U(m, j)
/// and F obeys F_{x+1} = F_x - U(m, x+1) + 2 (F_{x-1} - U(m-1, x)) by the
/// U recurrence, with U(m, x+1) = binom(n-2, x+1) 2^{x+1} and
/// U(m-1, x) = binom(n-2, x) 2^x. Conditional terms binom(n-1, x) g_n(x)
/// reduce to V / 2^{x+2}, so the sum stays dyadic. Terms past the
/// saturation point contribute binom(n-1, x) each.
inline BigRational saving_probability(long n) {
  if (n < 1) throw DomainError("saving_probability: n must be >= 1");
  if (n == 1) return BigRational(1, 2);

  const long x_sat = saturation_start(n);
  BigInt full;          // sum of binom(n-1, x) over x with g = 1
  BigRational partial;  // sum of binom(n-1, x) g over 0 < g < 1

  BigInt row1(1);  // binom(n-1, x)
  BigInt row2(1);  // binom(n-2, x)
  BigInt f = detail::u_tail_sum(n - 1, 1);  // F_x
  BigInt g = detail::u_tail_sum(n - 2, 0);  // F_{x-1}, seeded with sum_j U(n-2, j)
  BigInt half_class, v, slice, tmp;

  long x = 0;
  for (; x < x_sat && x <= n - 1; ++x) {
    const long k = n + 1 + x;
    half_class = class_size(k);
    mpz_fdiv_q_2exp(half_class.get_mpz_t(), half_class.get_mpz_t(), 1);
    mpz_mul_2exp(tmp.get_mpz_t(), f.get_mpz_t(), 2);
    v = half_class - tmp;
    mpz_mul_2exp(slice.get_mpz_t(), row1.get_mpz_t(), static_cast<unsigned long>(x) + 2);
    if (v >= slice) {
      full += row1;
    } else if (sgn(v) > 0) {
      partial += make_rational(v, pow2(static_cast<unsigned long>(x) + 2));
    }

    // Advance F using U(m, x+1) and U(m-1, x) before the row binomials move.
    BigInt row2_next = row2 * (n - 2 - x);
    mpz_divexact_ui(row2_next.get_mpz_t(), row2_next.get_mpz_t(), static_cast<unsigned long>(x + 1));
    BigInt u_m_next, u_m1;
    mpz_mul_2exp(u_m_next.get_mpz_t(), row2_next.get_mpz_t(), static_cast<unsigned long>(x) + 1);
    mpz_mul_2exp(u_m1.get_mpz_t(), row2.get_mpz_t(), static_cast<unsigned long>(x));
    BigInt f_next = f - u_m_next + 2 * (g - u_m1);
    g = std::move(f);
    f = std::move(f_next);

    row2 = std::move(row2_next);
    row1 *= (n - 1 - x);
    mpz_divexact_ui(row1.get_mpz_t(), row1.get_mpz_t(), static_cast<unsigned long>(x + 1));
  }
  for (; x <= n - 1; ++x) {
    full += row1;
    row1 *= (n - 1 - x);
    mpz_divexact_ui(row1.get_mpz_t(), row1.get_mpz_t(), static_cast<unsigned long>(x + 1));
  }

  BigRational total = partial + BigRational(full);
  return total / BigRational(pow2(static_cast<unsigned long>(n - 1)));
}

/// E[K_n] = H(X_1^n) = 3n/2 + 1/2.
inline BigRational block_entropy(long n) { return make_rational(3 * n + 1, 2); }

inline BigRational benchmark_length(long n) { return make_rational(3 * n, 2); }

/// E[L_n] = 3n/2 + 1/2 - P(I_n = 1).
inline BigRational expected_length(long n) {
  if (n < 1) throw DomainError("expected_length: n must be >= 1");
  return block_entropy(n) - saving_probability(n);
}

/// Oracle: sum of P(u) |C(u)| over every admissible length-n block, with code
/// lengths read from the brute-force codebook.
inline BigRational expected_length_bruteforce(long n) {
  if (n < 1 || n > 8) throw DomainError("expected_length_bruteforce: n must lie in [1, 8]");
  Codebook book = brute_force_codebook(2 * n);
  std::unordered_map<std::string, std::size_t> lengths;
  lengths.reserve(book.entries.size());
  for (const auto& [src, word] : book.entries) lengths.emplace(src.str(), word.size());
  BigRational total;
  for (const auto& u : enumerate_admissible(static_cast<std::size_t>(n))) {
    total += block_probability(u) * BigRational(static_cast<long>(lengths.at(u.str())));
  }
  return total;
}

/// The bound kept by the pairing argument: 1/2 + p_n(t) D_t / (2 C_t) for
/// n = 2t+1, and 1/2 + p_n(t) D_t / C_t for n = 2t.
inline BigRational saving_lower_bound(long n) {
  if (n < 2) throw DomainError("saving_lower_bound: n must be >= 2");
  long t = n / 2;
  BigRational ratio = make_rational(central_D(t), central_C(t));
  if (n % 2 == 1) ratio /= 2;
  return BigRational(1, 2) + binomial_weight(n, t) * ratio;
}

struct CentralConditionals {
  BigRational odd_center;   // g_{2t+1}(t) = 1/2 + D_t / (2 C_t)
  BigRational even_center;  // g_{2t}(t)   = 1 - D_t / C_t
  BigRational even_left;    // g_{2t}(t-1) = 2 D_t / C_t
};

inline CentralConditionals central_conditionals(long t) {
  if (t < 1) throw DomainError("central_conditionals: t must be >= 1");
  BigRational r = make_rational(central_D(t), central_C(t));
  return {BigRational(1, 2) + r / 2, BigRational(1) - r, r * 2};
}

/// True iff g_n(x) = 1 for every x in [ceil((n+1)/2), n-1].
inline bool tail_saturation_check(long n) {
  if (n < 2) throw DomainError("tail_saturation_check: n must be >= 2");
  for (long x = saturation_start(n); x <= n - 1; ++x) {
    if (conditional_saving(n, x) != 1) return false;
  }
  return true;
}

struct SavingReport {
  long n = 0;
  BigRational saving_prob;      // P(I_n = 1)
  BigRational expected_length;  // E[L_n]
  BigRational entropy;          // H(X_1^n)
  BigRational benchmark;        // 3n/2
  BigRational gap;              // 3n/2 - E[L_n]
  double gap_times_sqrt_n = 0;
};

inline SavingReport saving_report(long n) {
  SavingReport r;
  r.n = n;
  r.saving_prob = saving_probability(n);
  r.entropy = block_entropy(n);
  r.expected_length = r.entropy - r.saving_prob;
  r.benchmark = benchmark_length(n);
  r.gap = r.benchmark - r.expected_length;
  r.gap_times_sqrt_n = r.gap.get_d() * std::sqrt(static_cast<double>(n));
  return r;
}

inline std::vector<SavingReport> gap_table(long n_max) {
  if (n_max < 1) throw DomainError("gap_table: n_max must be >= 1");
  std::vector<SavingReport> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) rows.push_back(saving_report(n));
  return rows;
}

struct McEstimate {
  long n = 0;
  std::uint64_t samples = 0;
  double mean = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline constexpr std::uint64_t kMcChunk = 4096;

/// Seed of Monte Carlo chunk `chunk`: the first 64 bits that
/// std::seed_seq{seed_lo, seed_hi, chunk_lo, chunk_hi} generates.
inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

struct LengthMoments {
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
};

}  // namespace detail

/// Sample mean and standard error of the code length of length-n blocks.
///
/// Samples are split into chunks of 4096 with independent seeds derived from
/// (seed, chunk index); chunks may run on `workers` threads and are merged in
/// chunk order, so the result depends only on (n, samples, seed).
inline McEstimate monte_carlo_length(long n, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1) {
  if (n < 1) throw DomainError("monte_carlo_length: n must be >= 1");
  if (samples < 1) throw DomainError("monte_carlo_length: samples must be >= 1");
  const std::uint64_t chunks = (samples + detail::kMcChunk - 1) / detail::kMcChunk;
  std::vector<detail::LengthMoments> moments(chunks);

  auto run_chunk = [&](std::uint64_t c) {
    BlockSampler sampler(detail::chunk_seed(seed, c));
    std::uint64_t count = std::min(detail::kMcChunk, samples - c * detail::kMcChunk);
    detail::LengthMoments m;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t len = code_length(sampler.next(static_cast<std::size_t>(n)));
      m.sum += len;
      m.sum_sq += len * len;
    }
    moments[c] = m;
  };

  if (workers <= 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  long double sum = 0, sum_sq = 0;
  for (const auto& m : moments) {
    sum += static_cast<long double>(m.sum);
    sum_sq += static_cast<long double>(m.sum_sq);
  }
  const long double count = static_cast<long double>(samples);
  McEstimate est;
  est.n = n;
  est.samples = samples;
  est.seed = seed;
  est.mean = static_cast<double>(sum / count);
  if (samples > 1) {
    long double var = (sum_sq - sum * sum / count) / (count - 1);
    if (var < 0) var = 0;
    est.std_error = static_cast<double>(std::sqrt(var / count));
  }
  return est;
}

}  // namespace shortlex

#endif  // SHORTLEX_ANALYSIS_HPP
