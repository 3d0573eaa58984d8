#ifndef SHORTLEX_SOURCE_HPP
#define SHORTLEX_SOURCE_HPP

// The four-symbol constrained Markov source.
//
//   P(X1 = x) = 1/4 for every x
//   A -> {A, C}   each with probability 1/2
//   B -> {B, D}   each with probability 1/2
//   C, D -> {A, B, C, D} uniformly
//
// Every admissible block has probability 2^-K with K = (n + 1) + M, where M
// counts the positions 1..n-1 that hold C or D.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shortlex/bigint.hpp"

namespace shortlex {

enum class Symbol : char { A = 'A', B = 'B', C = 'C', D = 'D' };

inline constexpr std::array<Symbol, 4> kSymbols = {Symbol::A, Symbol::B, Symbol::C, Symbol::D};

inline constexpr char to_char(Symbol s) { return static_cast<char>(s); }

inline constexpr int index_of(Symbol s) { return static_cast<char>(s) - 'A'; }

/// True for C and D, the symbols that branch four ways.
inline constexpr bool is_cd(Symbol s) { return s == Symbol::C || s == Symbol::D; }

inline constexpr bool is_symbol_char(char c) { return c >= 'A' && c <= 'D'; }

inline constexpr bool transition_allowed(Symbol from, Symbol to) {
  switch (from) {
    case Symbol::A:
      return to == Symbol::A || to == Symbol::C;
    case Symbol::B:
      return to == Symbol::B || to == Symbol::D;
    case Symbol::C:
    case Symbol::D:
      return true;
  }
  return false;
}

/// Raised for inputs outside the admissible language.
class InadmissibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Empty string when admissible, otherwise a diagnostic.
inline std::string admissibility_problem(std::string_view s) {
  if (s.empty()) return "empty string is not admissible";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_symbol_char(s[i])) {
      return "invalid symbol '" + std::string(1, s[i]) + "' at position " + std::to_string(i + 1);
    }
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!transition_allowed(Symbol{s[i]}, Symbol{s[i + 1]})) {
      return std::string("forbidden transition ") + s[i] + "->" + s[i + 1] + " at position " +
             std::to_string(i + 1);
    }
  }
  return {};
}

}  // namespace detail

inline bool is_admissible(std::string_view s) { return detail::admissibility_problem(s).empty(); }

inline bool is_admissible(const std::vector<Symbol>& s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!transition_allowed(s[i], s[i + 1])) return false;
  }
  return true;
}

/// A nonempty string over {A,B,C,D} whose every transition is allowed.
class AdmissibleString {
 public:
  /// Validates; throws InadmissibleError naming the first problem.
  explicit AdmissibleString(std::string text) : text_(std::move(text)) {
    if (auto problem = detail::admissibility_problem(text_); !problem.empty()) {
      throw InadmissibleError(problem);
    }
  }

  explicit AdmissibleString(const std::vector<Symbol>& symbols) {
    text_.reserve(symbols.size());
    for (Symbol s : symbols) text_.push_back(to_char(s));
    if (auto problem = detail::admissibility_problem(text_); !problem.empty()) {
      throw InadmissibleError(problem);
    }
  }

  std::size_t size() const noexcept { return text_.size(); }
  Symbol operator[](std::size_t i) const noexcept { return Symbol{text_[i]}; }
  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const AdmissibleString&, const AdmissibleString&) = default;
  friend auto operator<=>(const AdmissibleString&, const AdmissibleString&) = default;

 private:
  std::string text_;
};

/// M(u): positions 1..n-1 holding C or D. The final symbol never counts.
inline std::size_t cd_count(const AdmissibleString& u) {
  std::size_t m = 0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) m += is_cd(u[i]) ? 1 : 0;
  return m;
}

/// K(u) = -log2 P(u) = (|u| + 1) + M(u).
inline std::size_t information_cost(const AdmissibleString& u) { return u.size() + 1 + cd_count(u); }

inline std::size_t information_cost(std::string_view s) {
  return information_cost(AdmissibleString(std::string(s)));
}

inline BigRational transition_probability(Symbol from, Symbol to) {
  if (!transition_allowed(from, to)) return BigRational(0);
  return is_cd(from) ? BigRational(1, 4) : BigRational(1, 2);
}

/// Exact product of the initial probability and the transition probabilities.
inline BigRational block_probability(const AdmissibleString& u) {
  BigRational p(1, 4);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) p *= transition_probability(u[i], u[i + 1]);
  return p;
}

inline BigRational block_probability(std::string_view s) {
  return block_probability(AdmissibleString(std::string(s)));
}

/// Exact marginal law of X_i, propagated through the transition matrix.
inline std::map<Symbol, BigRational> marginal_distribution(std::size_t i) {
  if (i == 0) throw DomainError("marginal index must be >= 1");
  std::array<BigRational, 4> dist;
  dist.fill(BigRational(1, 4));
  for (std::size_t step = 1; step < i; ++step) {
    std::array<BigRational, 4> next;
    next.fill(BigRational(0));
    for (Symbol from : kSymbols) {
      for (Symbol to : kSymbols) {
        next[index_of(to)] += dist[index_of(from)] * transition_probability(from, to);
      }
    }
    dist = next;
  }
  std::map<Symbol, BigRational> out;
  for (Symbol s : kSymbols) out.emplace(s, dist[index_of(s)]);
  return out;
}

/// All admissible strings of length `length`, in lexicographic order.
inline std::vector<AdmissibleString> enumerate_admissible(std::size_t length) {
  std::vector<AdmissibleString> out;
  if (length == 0) return out;
  std::string cur(length, 'A');
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == length) {
      out.emplace_back(cur);
      return;
    }
    for (Symbol s : kSymbols) {
      if (pos > 0 && !transition_allowed(Symbol{cur[pos - 1]}, s)) continue;
      cur[pos] = to_char(s);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Draws blocks from the exact source law.
///
/// Randomness comes from std::mt19937_64 seeded with the 64-bit seed. Each
/// 64-bit output is consumed least-significant bit first. The first symbol
/// takes two bits b0, b1 and is the letter with index b0 + 2*b1 in A,B,C,D.
/// A step out of A or B takes one bit: 0 repeats the letter, 1 moves to C
/// (from A) or D (from B). A step out of C or D takes two bits read as for
/// the first symbol. The law of the output is therefore exactly dyadic.
class BlockSampler {
 public:
  explicit BlockSampler(std::uint64_t seed) : engine_(seed) {}

  AdmissibleString next(std::size_t n) {
    if (n == 0) throw DomainError("block length must be >= 1");
    std::string out;
    out.reserve(n);
    Symbol cur = kSymbols[two_bits()];
    out.push_back(to_char(cur));
    for (std::size_t i = 1; i < n; ++i) {
      switch (cur) {
        case Symbol::A:
          cur = bit() ? Symbol::C : Symbol::A;
          break;
        case Symbol::B:
          cur = bit() ? Symbol::D : Symbol::B;
          break;
        default:
          cur = kSymbols[two_bits()];
          break;
      }
      out.push_back(to_char(cur));
    }
    return AdmissibleString(std::move(out));
  }

 private:
  unsigned bit() {
    if (available_ == 0) {
      buffer_ = engine_();
      available_ = 64;
    }
    unsigned b = static_cast<unsigned>(buffer_ & 1u);
    buffer_ >>= 1;
    --available_;
    return b;
  }

  unsigned two_bits() {
    unsigned lo = bit();
    unsigned hi = bit();
    return lo | (hi << 1);
  }

  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  int available_ = 0;
};

/// A length-n block, deterministic per (n, seed).
inline AdmissibleString sample_block(std::size_t n, std::uint64_t seed) { return BlockSampler(seed).next(n); }

}  // namespace shortlex

#endif  // SHORTLEX_SOURCE_HPP
