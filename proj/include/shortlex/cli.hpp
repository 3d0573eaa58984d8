#ifndef SHORTLEX_CLI_HPP
#define SHORTLEX_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 invalid input, 3 I/O failure.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shortlex/analysis.hpp"
#include "shortlex/codec.hpp"
#include "shortlex/combinatorics.hpp"
#include "shortlex/power_series.hpp"
#include "shortlex/report.hpp"
#include "shortlex/source.hpp"
#include "shortlex/verify.hpp"

namespace shortlex::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kIoError = 3 };

namespace detail {

/// Destination of a command's main output: --out PATH or the given stream.
class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        error_ = "cannot open output file '" + path + "'";
        return;
      }
      stream_ = file_.get();
    }
  }

  bool ok() const { return error_.empty(); }
  const std::string& error() const { return error_; }
  std::ostream& stream() { return *stream_; }

  /// Flushes; false when the write failed.
  bool finish() {
    stream_->flush();
    return static_cast<bool>(*stream_);
  }

 private:
  std::ostream* stream_;
  std::unique_ptr<std::ofstream> file_;
  std::string error_;
};

inline std::vector<std::string> read_tokens(std::istream& in) {
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

/// Rows for the `series` command: generating functions or count tables.
inline std::vector<std::pair<long, BigRational>> index_rows(const std::string& which, long order) {
  std::vector<std::pair<long, BigRational>> rows;
  auto counts = [&](long first, const std::function<BigInt(long)>& f) {
    for (long i = first; i <= order; ++i) rows.emplace_back(i, BigRational(f(i)));
  };
  if (which == "class_size") {
    counts(2, class_size);
  } else if (which == "cumulative_below") {
    counts(2, cumulative_below);
  } else if (which == "central_C") {
    counts(0, central_C);
  } else if (which == "central_D") {
    counts(1, central_D);
  } else if (which == "central_B") {
    counts(1, central_B);
  } else if (which == "central_A") {
    counts(1, central_A);
  } else {
    PowerSeries s = series(which, static_cast<std::size_t>(order));
    for (std::size_t i = 0; i <= s.order(); ++i) rows.emplace_back(static_cast<long>(i), s[i]);
  }
  return rows;
}

}  // namespace detail

/// Runs one invocation; argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortlex injective source code for the four-symbol constrained Markov source", "shortlex"};
  app.require_subcommand(1, 1);

  std::string out_path;
  std::string format = "pretty";
  std::uint64_t seed = 1;

  // encode / decode
  std::vector<std::string> encode_inputs;
  auto* encode_cmd = app.add_subcommand("encode", "Encode admissible strings (arguments or stdin)");
  encode_cmd->add_option("source", encode_inputs, "Strings over {A,B,C,D}");
  std::vector<std::string> decode_inputs;
  auto* decode_cmd = app.add_subcommand("decode", "Decode binary words (arguments or stdin)");
  decode_cmd->add_option("word", decode_inputs, "Nonempty strings over {0,1}");

  // sample
  long sample_n = 0;
  std::uint64_t sample_count = 1;
  auto* sample_cmd = app.add_subcommand("sample", "Draw blocks from the source");
  sample_cmd->add_option("n", sample_n, "Block length")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "64-bit seed");
  sample_cmd->add_option("--samples", sample_count, "Number of blocks")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--out", out_path, "Output file");

  // table
  long table_n = 0;
  auto* table_cmd = app.add_subcommand("table", "Exact saving probability and expected length per blocklength");
  table_cmd->add_option("n_max", table_n, "Largest blocklength")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  table_cmd->add_option("--out", out_path, "Output file");

  // verify
  std::string suite = "all";
  std::string depth = "default";
  auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suites");
  verify_cmd->add_option("suite", suite, "identities, codec, analysis or all")
      ->check(CLI::IsMember({"identities", "codec", "analysis", "all"}));
  verify_cmd->add_option("--depth", depth, "default or deep")->check(CLI::IsMember({"default", "deep"}));

  // series
  std::string which;
  long order = 10;
  auto* series_cmd = app.add_subcommand("series", "Export a generating function or count table as CSV");
  series_cmd->add_option("which", which,
                         "C, D, B, T, P, X, class_size, cumulative_below, central_C, central_D, central_B, central_A")
      ->required();
  series_cmd->add_option("--order", order, "Largest index")->check(CLI::PositiveNumber);
  series_cmd->add_option("--out", out_path, "Output file");

  // mc
  long mc_n = 0;
  std::uint64_t mc_samples = 100000;
  unsigned workers = 1;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of the expected code length");
  mc_cmd->add_option("n", mc_n, "Block length")->required()->check(CLI::PositiveNumber);
  mc_cmd->add_option("--samples", mc_samples, "Number of blocks")->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", seed, "64-bit seed");
  mc_cmd->add_option("--workers", workers, "Worker threads (result does not depend on it)")
      ->check(CLI::PositiveNumber);
  mc_cmd->add_option("--format", format, "csv, json or pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
  mc_cmd->add_option("--out", out_path, "Output file");

  // codebook
  long max_cost = 6;
  auto* codebook_cmd = app.add_subcommand("codebook", "Write the explicit codebook as SOURCE<TAB>CODEWORD lines");
  codebook_cmd->add_option("--max-cost", max_cost, "Largest information cost")->check(CLI::Range(2L, 40L));
  codebook_cmd->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (encode_cmd->parsed()) {
      auto inputs = encode_inputs.empty() ? detail::read_tokens(in) : encode_inputs;
      if (inputs.empty()) {
        err << "error: no input to encode\n";
        return kInvalidInput;
      }
      for (const auto& s : inputs) {
        AdmissibleString u(s);
        out << encode(u).str() << '\n';
      }
      return kOk;
    }
    if (decode_cmd->parsed()) {
      auto inputs = decode_inputs.empty() ? detail::read_tokens(in) : decode_inputs;
      if (inputs.empty()) {
        err << "error: no input to decode\n";
        return kInvalidInput;
      }
      for (const auto& s : inputs) out << decode(BinaryWord(s)).str() << '\n';
      return kOk;
    }
    if (verify_cmd->parsed()) {
      VerifyLimits limits = depth == "deep" ? VerifyLimits::deep() : VerifyLimits{};
      auto results = verify_suite(suite, limits);
      bool all = true;
      for (const auto& r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << '\n';
        for (const auto& ce : r.counterexamples) out << "        counterexample: " << ce << '\n';
        all = all && r.passed;
      }
      out << (all ? "all checks passed" : "verification FAILED") << '\n';
      return all ? kOk : kVerifyFailed;
    }

    detail::OutputSink sink(out_path, out);
    if (!sink.ok()) {
      err << "error: " << sink.error() << '\n';
      return kIoError;
    }
    std::ostream& os = sink.stream();

    if (sample_cmd->parsed()) {
      BlockSampler sampler(seed);
      for (std::uint64_t i = 0; i < sample_count; ++i) os << sampler.next(static_cast<std::size_t>(sample_n)).str() << '\n';
    } else if (table_cmd->parsed()) {
      write_gap_table(os, gap_table(table_n), parse_table_format(format));
    } else if (series_cmd->parsed()) {
      write_index_table(os, detail::index_rows(which, order));
    } else if (mc_cmd->parsed()) {
      auto est = monte_carlo_length(mc_n, mc_samples, seed, workers);
      write_mc_estimate(os, est, expected_length(mc_n), parse_table_format(format));
    } else if (codebook_cmd->parsed()) {
      write_codebook(os, brute_force_codebook(max_cost));
    }
    if (!sink.finish()) {
      err << "error: failed writing output\n";
      return kIoError;
    }
    return kOk;
  } catch (const InadmissibleError& e) {
    err << "error: inadmissible input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace shortlex::cli

#endif  // SHORTLEX_CLI_HPP
