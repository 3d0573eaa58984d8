#ifndef SHORTLEX_REPORT_HPP
#define SHORTLEX_REPORT_HPP

// Text renderings of gap tables, Monte Carlo estimates and count tables.
// Machine formats print rationals as "p/q"; decimals use 12 significant digits.

#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "shortlex/analysis.hpp"
#include "shortlex/bigint.hpp"

namespace shortlex {

enum class TableFormat { Csv, Json, Pretty };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  if (s == "pretty") return TableFormat::Pretty;
  throw DomainError("unknown format '" + s + "' (expected csv, json or pretty)");
}

inline nlohmann::ordered_json to_json(const SavingReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["saving_prob"] = to_string(r.saving_prob);
  j["expected_length"] = to_string(r.expected_length);
  j["benchmark"] = to_string(r.benchmark);
  j["gap"] = to_string(r.gap);
  j["gap_times_sqrt_n"] = to_decimal(r.gap_times_sqrt_n);
  return j;
}

inline void write_gap_table(std::ostream& os, const std::vector<SavingReport>& rows, TableFormat format) {
  switch (format) {
    case TableFormat::Csv:
      os << "n,saving_prob,expected_length,benchmark,gap,gap_times_sqrt_n\n";
      for (const auto& r : rows) {
        os << r.n << ',' << to_string(r.saving_prob) << ',' << to_string(r.expected_length) << ','
           << to_string(r.benchmark) << ',' << to_string(r.gap) << ',' << to_decimal(r.gap_times_sqrt_n) << '\n';
      }
      break;
    case TableFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
    case TableFormat::Pretty: {
      // Exact values are shown only while they stay short; decimals always.
      auto exact = [](const BigRational& q) {
        std::string s = to_string(q);
        return s.size() <= 24 ? s : std::string("...");
      };
      os << std::left << std::setw(6) << "n" << std::setw(26) << "P(I_n=1)" << std::setw(16) << "~"
         << std::setw(26) << "E[L_n]" << std::setw(18) << "~" << std::setw(10) << "3n/2" << std::setw(26) << "gap"
         << std::setw(16) << "~" << "gap*sqrt(n)\n";
      for (const auto& r : rows) {
        os << std::left << std::setw(6) << r.n << std::setw(26) << exact(r.saving_prob) << std::setw(16)
           << to_decimal(r.saving_prob) << std::setw(26) << exact(r.expected_length) << std::setw(18)
           << to_decimal(r.expected_length) << std::setw(10) << to_decimal(r.benchmark) << std::setw(26)
           << exact(r.gap) << std::setw(16) << to_decimal(r.gap) << to_decimal(r.gap_times_sqrt_n) << '\n';
      }
      break;
    }
  }
}

inline void write_mc_estimate(std::ostream& os, const McEstimate& e, const BigRational& exact, TableFormat format) {
  switch (format) {
    case TableFormat::Csv:
      os << "n,samples,seed,mean,std_error,expected_length\n"
         << e.n << ',' << e.samples << ',' << e.seed << ',' << to_decimal(e.mean) << ',' << to_decimal(e.std_error)
         << ',' << to_string(exact) << '\n';
      break;
    case TableFormat::Json: {
      nlohmann::ordered_json j;
      j["n"] = e.n;
      j["samples"] = e.samples;
      j["seed"] = e.seed;
      j["mean"] = to_decimal(e.mean);
      j["std_error"] = to_decimal(e.std_error);
      j["expected_length"] = to_string(exact);
      os << j.dump(2) << '\n';
      break;
    }
    case TableFormat::Pretty:
      os << "n               " << e.n << '\n'
         << "samples         " << e.samples << '\n'
         << "seed            " << e.seed << '\n'
         << "mean length     " << to_decimal(e.mean) << '\n'
         << "std error       " << to_decimal(e.std_error) << '\n'
         << "exact E[L_n]    " << to_decimal(exact) << "  (" << to_string(exact) << ")\n"
         << "z-score         " << to_decimal(e.std_error > 0 ? (e.mean - exact.get_d()) / e.std_error : 0.0, 4)
         << '\n';
      break;
  }
}

/// "index,value" rows; integral values print as plain decimal integers.
inline void write_index_table(std::ostream& os, const std::vector<std::pair<long, BigRational>>& rows) {
  os << "index,value\n";
  for (const auto& [i, v] : rows) {
    os << i << ',' << (v.get_den() == 1 ? v.get_num().get_str() : to_string(v)) << '\n';
  }
}

}  // namespace shortlex

#endif  // SHORTLEX_REPORT_HPP
