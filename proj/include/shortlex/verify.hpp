#ifndef SHORTLEX_VERIFY_HPP
#define SHORTLEX_VERIFY_HPP

// Self-check suites run by `shortlex verify`. Every check compares two
// independent routes to the same quantity and reports counterexamples.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "shortlex/analysis.hpp"
#include "shortlex/codec.hpp"
#include "shortlex/combinatorics.hpp"
#include "shortlex/power_series.hpp"
#include "shortlex/source.hpp"

namespace shortlex {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> counterexamples;
};

struct VerifyLimits {
  long max_cost = 14;          // codebook / dichotomy range
  long roundtrip_length = 10;  // exhaustive source roundtrip
  long binary_length = 14;     // exhaustive binary roundtrip
  long order_cost = 12;        // order preservation range
  long n_max = 200;            // analysis blocklengths
  long central_t = 200;        // central conditional range
  long sampled_roundtrips = 100;  // per length in {50, 200, 1000}
  bool asymptotic = false;     // odd-n gap * sqrt(n) trend up to 2001

  static VerifyLimits deep() {
    VerifyLimits l;
    l.n_max = 2000;
    l.sampled_roundtrips = 10000;
    l.asymptotic = true;
    return l;
  }
};

namespace detail {

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

  template <typename... Parts>
  void fail(const Parts&... parts) {
    result_.passed = false;
    if (result_.counterexamples.size() < kMaxReported) {
      std::ostringstream os;
      (os << ... << parts);
      result_.counterexamples.push_back(os.str());
    }
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }

  CheckResult done() { return std::move(result_); }

 private:
  static constexpr std::size_t kMaxReported = 5;
  CheckResult result_;
};

}  // namespace detail

inline std::vector<CheckResult> verify_identities(const VerifyLimits& = {}) {
  std::vector<CheckResult> out;

  {
    detail::CheckBuilder c("class_size recurrence S_k = S_{k-1} + 2 S_{k-2}, 4 <= k <= 64");
    for (long k = 4; k <= 64; ++k) {
      if (class_size(k) != class_size(k - 1) + 2 * class_size(k - 2)) c.fail("k=", k);
    }
    c.expect(class_size(2) == 4 && class_size(3) == 4, "S_2 = S_3 = 4");
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("gap identity (2^k - 2) - T_{<k} = S_k / 2, 2 <= k <= 64");
    BigInt running;
    for (long k = 2; k <= 64; ++k) {
      if (running != cumulative_below(k)) c.fail("T_{<k} mismatch at k=", k);
      BigInt s = class_size(k);
      if (s % 2 != 0) c.fail("S_k odd at k=", k);
      if (pow2(static_cast<unsigned long>(k)) - 2 - cumulative_below(k) != s / 2) c.fail("k=", k);
      running += s;
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("slice decomposition sum_l N(k, l) = S_k, 2 <= k <= 40");
    for (long k = 2; k <= 40; ++k) {
      BigInt sum;
      for (long l = 1; l <= k; ++l) sum += slice_count(k, l);
      if (sum != class_size(k)) c.fail("k=", k);
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("U recurrence U(m+1, j) = U(m, j) + 2 U(m-1, j-1), 0 <= m <= 60");
    for (long m = 0; m <= 60; ++m) {
      for (long j = -1; j <= m / 2 + 2; ++j) {
        if (u_count(m + 1, j) != u_count(m, j) + 2 * u_count(m - 1, j - 1)) c.fail("m=", m, " j=", j);
      }
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("alternating sums: D, B, A identities and bounds, 1 <= t <= 40");
    for (long t = 1; t <= 40; ++t) {
      BigInt ct = central_C(t), dt = central_D(t), bt = central_B(t), at = central_A(t);
      if (ct != u_count(3 * t, t)) c.fail("C_t != U(3t, t) at t=", t);
      if (dt != central_D_defining(t)) c.fail("D_t alternating != defining at t=", t);
      if (bt != central_B_defining(t)) c.fail("B_t != C_t/2 - D_t at t=", t);
      if (dt != 2 * at + bt) c.fail("D_t != 2A_t + B_t at t=", t);
      if (!(sgn(dt) > 0 && 2 * dt < ct)) c.fail("0 < D_t < C_t/2 fails at t=", t);
      if (!(sgn(bt) > 0 && 2 * bt < ct)) c.fail("0 < B_t < C_t/2 fails at t=", t);
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("limit envelope |D_t/C_t - 1/9| < 1/(9t), 2 <= t <= 40");
    for (long t = 2; t <= 40; ++t) {
      BigRational dev = make_rational(central_D(t), central_C(t)) - BigRational(1, 9);
      if (abs(dev) >= make_rational(1, 9 * t)) c.fail("t=", t);
    }
    out.push_back(c.done());
  }
  {
    const std::size_t order = 40;
    detail::CheckBuilder c("series coefficients of C, D, B, T, P match direct sums to order 40");
    auto sc = series(SeriesName::C, order), sd = series(SeriesName::D, order), sb = series(SeriesName::B, order),
         st = series(SeriesName::T, order), sp = series(SeriesName::P, order);
    for (const auto* s : {&sc, &sd, &sb, &st, &sp}) c.expect(s->integral(), "non-integral coefficient");
    for (long t = 1; t <= static_cast<long>(order); ++t) {
      auto i = static_cast<std::size_t>(t);
      if (sc[i] != BigRational(central_C(t))) c.fail("C at t=", t);
      if (sd[i] != BigRational(central_D(t))) c.fail("D at t=", t);
      if (sb[i] != BigRational(central_B(t))) c.fail("B at t=", t);
      if (st[i] != BigRational(class_size(3 * t + 2) / 4)) c.fail("T at t=", t);
      BigInt p;
      for (long j = 0; j <= t - 1; ++j) p += u_count(3 * t, j);
      if (sp[i] != BigRational(p)) c.fail("P at t=", t);
    }
    // D = 2P + C - T
    auto combo = sp * BigRational(2) + sc - st;
    for (std::size_t i = 1; i <= order; ++i) {
      if (combo[i] != sd[i]) c.fail("D != 2P + C - T at t=", i);
    }
    out.push_back(c.done());
  }
  {
    const std::size_t order = 40;
    detail::CheckBuilder c("X(z) closed form solves X = 2z(1+X)^2 to order 40");
    auto closed = series(SeriesName::X, order);
    PowerSeries x(order);
    auto one = PowerSeries::constant(order, 1);
    auto z2 = PowerSeries::linear(order, 0, 2);
    for (std::size_t it = 0; it <= order; ++it) {
      auto y = one + x;
      x = z2 * y * y;
    }
    for (std::size_t i = 0; i <= order; ++i) {
      if (closed[i] != x[i]) c.fail("coefficient ", i);
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("prefix_completions(START, l, j) = N(l+1+j, l), l <= 10");
    for (long l = 1; l <= 10; ++l) {
      for (long j = 0; j <= l - 1; ++j) {
        if (prefix_completions(PrefixState::Start, l, j) != slice_count(l + 1 + j, l)) c.fail("l=", l, " j=", j);
      }
    }
    out.push_back(c.done());
  }
  return out;
}

inline std::vector<CheckResult> verify_codec(const VerifyLimits& limits = {}) {
  std::vector<CheckResult> out;

  {
    detail::CheckBuilder c("decode(encode(u)) = u, exhaustive |u| <= " + std::to_string(limits.roundtrip_length));
    for (long len = 1; len <= limits.roundtrip_length; ++len) {
      for (const auto& u : enumerate_admissible(static_cast<std::size_t>(len))) {
        if (decode(encode(u)) != u) c.fail(u.str());
      }
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("encode(decode(b)) = b, exhaustive |b| <= " + std::to_string(limits.binary_length));
    BigInt last = pow2(static_cast<unsigned long>(limits.binary_length + 1)) - 2;
    for (BigInt r = 1; r <= last; ++r) {
      BinaryWord b = binary_unrank(r);
      if (binary_rank(b) != r) c.fail("binary rank ", r.get_str());
      if (encode(decode(b)) != b) c.fail(b.str());
    }
    out.push_back(c.done());
  }
  {
    const long lengths[] = {50, 200, 1000};
    detail::CheckBuilder c("sampled roundtrip, " + std::to_string(limits.sampled_roundtrips) +
                           " blocks each of length 50, 200, 1000");
    for (long len : lengths) {
      BlockSampler sampler(static_cast<std::uint64_t>(len) * 7919u);
      for (long i = 0; i < limits.sampled_roundtrips; ++i) {
        auto u = sampler.next(static_cast<std::size_t>(len));
        if (decode(encode(u)) != u) c.fail(u.str());
      }
    }
    out.push_back(c.done());
  }

  Codebook book = brute_force_codebook(limits.max_cost);
  {
    detail::CheckBuilder c("encode agrees with brute-force codebook, cost <= " + std::to_string(limits.max_cost));
    for (const auto& [src, word] : book.entries) {
      if (encode(src) != word) c.fail(src.str(), " -> ", encode(src).str(), " expected ", word.str());
    }
    if (BigInt(static_cast<unsigned long>(book.entries.size())) != cumulative_below(limits.max_cost + 1)) {
      c.fail("codebook size ", book.entries.size());
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("order preservation on cost <= " + std::to_string(limits.order_cost));
    BigInt prev;
    const AdmissibleString* prev_src = nullptr;
    for (const auto& [src, word] : book.entries) {
      if (static_cast<long>(information_cost(src)) > limits.order_cost) break;
      BigInt r = binary_rank(encode(src));
      if (prev_src && !(source_order_less(*prev_src, src) && prev < r)) c.fail(prev_src->str(), " / ", src.str());
      prev = r;
      prev_src = &src;
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("length dichotomy and even split, 2 <= k <= " + std::to_string(limits.max_cost));
    std::map<long, std::pair<long, long>> split;  // k -> (short, long)
    for (const auto& [src, word] : book.entries) {
      long k = static_cast<long>(information_cost(src));
      long len = static_cast<long>(code_length(src));
      if (len == k - 1) {
        ++split[k].first;
      } else if (len == k) {
        ++split[k].second;
      } else {
        c.fail(src.str(), " has length ", len, " at cost ", k);
      }
    }
    for (long k = 2; k <= limits.max_cost; ++k) {
      BigInt half = class_size(k) / 2;
      if (BigInt(split[k].first) != half || BigInt(split[k].second) != half) {
        c.fail("k=", k, " split ", split[k].first, "/", split[k].second);
      }
    }
    out.push_back(c.done());
  }
  return out;
}

inline std::vector<CheckResult> verify_analysis(const VerifyLimits& limits = {}) {
  std::vector<CheckResult> out;
  const long n_max = limits.n_max;

  {
    detail::CheckBuilder c("golden values E[L_1] = 3/2, E[L_2] = 23/8, E[L_3] = 71/16, P(I_2 = 1) = 5/8");
    c.expect(expected_length(1) == BigRational(3, 2), "E[L_1]");
    c.expect(expected_length(2) == BigRational(23, 8), "E[L_2]");
    c.expect(expected_length(3) == BigRational(71, 16), "E[L_3]");
    c.expect(saving_probability(2) == BigRational(5, 8), "P(I_2 = 1)");
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("expected_length = brute-force codebook average, 1 <= n <= 8");
    for (long n = 1; n <= 8; ++n) {
      if (expected_length(n) != expected_length_bruteforce(n)) c.fail("n=", n);
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("saving_probability = sum_x p_n(x) g_n(x), 2 <= n <= 60");
    for (long n = 2; n <= 60; ++n) {
      BigRational direct;
      for (long x = 0; x <= n - 1; ++x) direct += binomial_weight(n, x) * conditional_saving(n, x);
      if (direct != saving_probability(n)) c.fail("n=", n);
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("P(I_n = 1) > 1/2 and >= pairing bound, n <= " + std::to_string(n_max));
    const BigRational half(1, 2);
    for (long n = 1; n <= n_max; ++n) {
      BigRational p = saving_probability(n);
      if (n == 1 ? p != half : p <= half) c.fail("P(I_n = 1) at n=", n);
      if (n >= 2 && p < saving_lower_bound(n)) c.fail("below lower bound at n=", n);
      BigRational len = block_entropy(n) - p;
      if (n == 1 ? len != benchmark_length(n) : len >= benchmark_length(n)) c.fail("benchmark at n=", n);
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("binomial weights sum to 1, n <= " + std::to_string(n_max));
    for (long n = 1; n <= n_max; ++n) {
      BigRational s;
      for (long x = 0; x <= n - 1; ++x) s += binomial_weight(n, x);
      if (s != 1) c.fail("n=", n);
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("tail saturation g_n(x) = 1 for x >= (n+1)/2, 2 <= n <= 200");
    for (long n = 2; n <= std::min<long>(n_max, 200); ++n) {
      if (!tail_saturation_check(n)) c.fail("n=", n);
    }
    out.push_back(c.done());
  }
  {
    detail::CheckBuilder c("central conditionals match g_n and g_2t(t-1) + g_2t(t) = 1 + D_t/C_t, t <= " +
                           std::to_string(limits.central_t));
    for (long t = 1; t <= limits.central_t; ++t) {
      auto cc = central_conditionals(t);
      if (cc.odd_center != conditional_saving(2 * t + 1, t)) c.fail("odd centre t=", t);
      if (cc.even_center != conditional_saving(2 * t, t)) c.fail("even centre t=", t);
      if (cc.even_left != conditional_saving(2 * t, t - 1)) c.fail("even left t=", t);
      BigRational sum = conditional_saving(2 * t, t - 1) + conditional_saving(2 * t, t);
      if (sum != 1 + make_rational(central_D(t), central_C(t))) c.fail("pair sum t=", t);
    }
    out.push_back(c.done());
  }
  if (limits.asymptotic) {
    detail::CheckBuilder c("gap * sqrt(n) >= 0.0443 for odd n in [101, 2001]");
    for (long n = 101; n <= 2001; n += 2) {
      double v = saving_report(n).gap_times_sqrt_n;
      if (!(v >= 0.0443)) c.fail("n=", n, " value ", v);
    }
    out.push_back(c.done());
  }
  return out;
}

inline std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyLimits& limits) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> r) {
    for (auto& x : r) out.push_back(std::move(x));
  };
  if (suite == "identities" || suite == "all") append(verify_identities(limits));
  if (suite == "codec" || suite == "all") append(verify_codec(limits));
  if (suite == "analysis" || suite == "all") append(verify_analysis(limits));
  if (suite != "identities" && suite != "codec" && suite != "analysis" && suite != "all") {
    throw DomainError("unknown verify suite '" + suite + "'");
  }
  return out;
}

}  // namespace shortlex

#endif  // SHORTLEX_VERIFY_HPP
