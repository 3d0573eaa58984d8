#ifndef SHORTLEX_CODEC_HPP
#define SHORTLEX_CODEC_HPP

// The shortlex injective code on admissible strings.
//
// Admissible strings are ordered by cost, then length, then lexicographically
// over A < B < C < D; nonempty binary words are ordered by length, then
// lexicographically. The j-th string maps to the j-th word (ranks are
// 1-based). Both ranks are computed by counting, so no codebook is built.

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "shortlex/bigint.hpp"
#include "shortlex/combinatorics.hpp"
#include "shortlex/source.hpp"

namespace shortlex {

/// A nonempty string over {0, 1}.
class BinaryWord {
 public:
  explicit BinaryWord(std::string bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw DomainError("binary word must be nonempty");
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] != '0' && bits_[i] != '1') {
        throw DomainError("invalid bit '" + std::string(1, bits_[i]) + "' at position " + std::to_string(i + 1));
      }
    }
  }

  std::size_t size() const noexcept { return bits_.size(); }
  const std::string& str() const noexcept { return bits_; }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::string bits_;
};

/// 1-based shortlex rank: (2^L - 2) + (value of the bits) + 1.
inline BigInt binary_rank(const BinaryWord& b) {
  BigInt value(b.str(), 2);
  return pow2(b.size()) - 1 + value;
}

inline BinaryWord binary_unrank(const BigInt& rank) {
  if (rank < 1) throw DomainError("binary rank must be >= 1");
  BigInt shifted = rank + 1;
  std::size_t length = bit_length(shifted) - 1;
  BigInt value = shifted - pow2(length);
  std::string bits = value.get_str(2);
  if (sgn(value) == 0) bits.clear();
  return BinaryWord(std::string(length - bits.size(), '0') + bits);
}

/// Strict source order: cost, then length, then lexicographic.
inline bool source_order_less(const AdmissibleString& u, const AdmissibleString& v) {
  auto ku = information_cost(u);
  auto kv = information_cost(v);
  if (ku != kv) return ku < kv;
  if (u.size() != v.size()) return u.size() < v.size();
  return u.str() < v.str();
}

namespace detail {

// Counts completions position by position inside one (cost, length) slice.
//
// At a non-final position with r positions after it and a {C,D} budget b that
// includes the position itself, a candidate symbol of class c admits
// 2^{b+1} binom(r-1, b-c) completions. The cursor keeps binom(r-1, b) and
// binom(r-1, b-1) current as the walk advances, using
//   binom(N-1, K) = binom(N, K) (N-K) / N   and Pascal's rule.
class SliceCursor {
 public:
  SliceCursor(long length, long budget) : length_(length), budget_(budget) {
    if (length_ >= 2) {
      hi_ = binomial(length_ - 2, budget_);
      lo_ = binomial(length_ - 2, budget_ - 1);
    }
  }

  bool at_final() const noexcept { return pos_ == length_ - 1; }

  /// Completions if the current position takes a symbol of class `cd`.
  BigInt count(bool cd) const {
    if (at_final()) return BigInt(1);
    const BigInt& base = cd ? lo_ : hi_;
    BigInt r;
    if (sgn(base) == 0 || budget_ < 0) return r;
    mpz_mul_2exp(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(budget_) + 1);
    return r;
  }

  /// Fixes the current position to a symbol of class `cd` and moves on.
  void advance(bool cd) {
    long remaining_after = length_ - 1 - pos_;  // r
    ++pos_;
    long n = remaining_after - 1;  // N = r - 1
    if (n >= 1) {
      const BigInt& from = cd ? lo_ : hi_;
      long k = cd ? budget_ - 1 : budget_;  // new budget
      BigInt next_hi;
      if (sgn(from) != 0 && k >= 0 && k <= n) {
        next_hi = from * (n - k);
        mpz_divexact_ui(next_hi.get_mpz_t(), next_hi.get_mpz_t(), static_cast<unsigned long>(n));
      }
      lo_ = from - next_hi;
      hi_ = std::move(next_hi);
    }
    if (cd) --budget_;
  }

 private:
  long length_;
  long budget_;
  long pos_ = 0;
  BigInt hi_;  // binom(r-1, b)
  BigInt lo_;  // binom(r-1, b-1)
};

/// 0-based lexicographic index of u among admissible strings of its length and cost.
inline BigInt index_in_slice(const AdmissibleString& u) {
  const long n = static_cast<long>(u.size());
  SliceCursor cursor(n, static_cast<long>(cd_count(u)));
  BigInt index;
  for (long i = 0; i < n; ++i) {
    Symbol cur = u[static_cast<std::size_t>(i)];
    for (Symbol y : kSymbols) {
      if (y >= cur) break;
      if (i > 0 && !transition_allowed(u[static_cast<std::size_t>(i - 1)], y)) continue;
      index += cursor.count(is_cd(y));
    }
    cursor.advance(is_cd(cur));
  }
  return index;
}

/// Inverse of index_in_slice for the slice of cost k and the given length.
inline AdmissibleString unrank_in_slice(long k, long length, BigInt index) {
  SliceCursor cursor(length, k - length - 1);
  std::string out;
  out.reserve(static_cast<std::size_t>(length));
  for (long i = 0; i < length; ++i) {
    std::optional<Symbol> chosen;
    for (Symbol y : kSymbols) {
      if (i > 0 && !transition_allowed(Symbol{out.back()}, y)) continue;
      BigInt c = cursor.count(is_cd(y));
      if (index < c) {
        chosen = y;
        break;
      }
      index -= c;
    }
    if (!chosen) throw DomainError("slice index out of range");
    out.push_back(to_char(*chosen));
    cursor.advance(is_cd(*chosen));
  }
  return AdmissibleString(std::move(out));
}

}  // namespace detail

/// 1-based position of u in the source order.
inline BigInt source_rank(const AdmissibleString& u) {
  const long n = static_cast<long>(u.size());
  const long k = static_cast<long>(information_cost(u));
  return cumulative_below(k) + shorter_in_class(n, k) + detail::index_in_slice(u) + 1;
}

/// The admissible string with the given 1-based rank.
inline AdmissibleString source_unrank(const BigInt& rank) {
  if (rank < 1) throw DomainError("source rank must be >= 1");
  // Locate the cost class: T_{<k} < rank <= T_{<k+1}.
  long k = std::max<long>(2, static_cast<long>(bit_length(rank)));
  while (k > 2 && cumulative_below(k) >= rank) --k;
  while (cumulative_below(k + 1) < rank) ++k;
  BigInt offset = rank - cumulative_below(k) - 1;

  // Lengths l in [ceil(k/2), k-1] carry N(k, l) = 4 U(k-2, k-l-1).
  detail::UColumn col(k - 2);
  for (long length = (k + 1) / 2; length <= k - 1; ++length) {
    BigInt slice = col.value();
    mpz_mul_2exp(slice.get_mpz_t(), slice.get_mpz_t(), 2);
    if (offset < slice) return detail::unrank_in_slice(k, length, std::move(offset));
    offset -= slice;
    if (col.index() > 0) col.step_down();
  }
  throw DomainError("source rank outside its cost class");  // unreachable for valid classes
}

inline BinaryWord encode(const AdmissibleString& u) { return binary_unrank(source_rank(u)); }

inline AdmissibleString decode(const BinaryWord& b) { return source_unrank(binary_rank(b)); }

/// |encode(u)| from the rank alone: L with 2^L - 1 <= rank <= 2^{L+1} - 2.
inline std::size_t code_length(const AdmissibleString& u) { return bit_length(source_rank(u) + 1) - 1; }

/// Explicit (source, codeword) table, in source order.
struct Codebook {
  long max_cost = 0;
  std::vector<std::pair<AdmissibleString, BinaryWord>> entries;
};

/// Test oracle: enumerate every admissible string of cost <= max_cost, sort,
/// and pair with binary words generated in shortlex order.
inline Codebook brute_force_codebook(long max_cost) {
  if (max_cost < 2) throw DomainError("max_cost must be >= 2");
  std::vector<AdmissibleString> strings;
  std::string cur;
  auto extend = [&](auto&& self, long cost) -> void {
    // cost of cur as a complete string is cost; appending adds 1 or 2.
    if (!cur.empty()) strings.emplace_back(cur);
    for (Symbol s : kSymbols) {
      if (!cur.empty() && !transition_allowed(Symbol{cur.back()}, s)) continue;
      long next = cur.empty() ? 2 : cost + (is_cd(Symbol{cur.back()}) ? 2 : 1);
      if (next > max_cost) continue;
      cur.push_back(to_char(s));
      self(self, next);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(strings.begin(), strings.end(), source_order_less);

  Codebook book;
  book.max_cost = max_cost;
  book.entries.reserve(strings.size());
  std::string word = "0";
  for (auto& s : strings) {
    book.entries.emplace_back(std::move(s), BinaryWord(word));
    // Shortlex successor: binary increment, or all zeros one bit longer.
    auto pos = word.find_last_of('0');
    if (pos == std::string::npos) {
      word.assign(word.size() + 1, '0');
    } else {
      word[pos] = '1';
      std::fill(word.begin() + static_cast<long>(pos) + 1, word.end(), '0');
    }
  }
  return book;
}

/// One "SOURCE<TAB>CODEWORD" line per entry.
inline void write_codebook(std::ostream& os, const Codebook& book) {
  for (const auto& [src, word] : book.entries) os << src.str() << '\t' << word.str() << '\n';
}

inline Codebook read_codebook(std::istream& is) {
  Codebook book;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw DomainError("codebook line without tab: " + line);
    AdmissibleString src(line.substr(0, tab));
    book.max_cost = std::max(book.max_cost, static_cast<long>(information_cost(src)));
    book.entries.emplace_back(std::move(src), BinaryWord(line.substr(tab + 1)));
  }
  return book;
}

}  // namespace shortlex

#endif  // SHORTLEX_CODEC_HPP
