#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvc/kernel.hpp"

namespace pvc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kOracleDisagree = 3,
};

struct OracleCheck {
  bool original_yes = false;
  bool kernel_yes = false;
  bool agree = false;
};

struct Report {
  std::size_t n = 0, m = 0;
  std::int64_t k = 0, l = 0;
  Variant variant = Variant::additive;
  KernelOutcome outcome;
  std::int64_t bound = 0;
  bool bound_satisfied = false;
  std::optional<OracleCheck> oracle;
  double time_ms = 0;

  std::size_t kernel_n() const;
  std::size_t kernel_m() const;
  std::int64_t kernel_k() const;
};

/// Runs the pipeline (and the exact oracle on both sides when asked).
/// Throws oracle::TooLarge if the oracle cannot handle the instance.
Report make_report(const PvcInstance& inst, Variant variant, bool oracle_check);

nlohmann::json to_json(const Report& r);

struct KernelizeOptions {
  std::string input;
  std::int64_t k = 0;
  std::int64_t l = 0;
  Variant variant = Variant::additive;
  bool oracle_check = false;
  std::optional<std::string> json_path;
};

int cmd_kernelize(const KernelizeOptions& opt, std::ostream& out, std::ostream& err);

struct GenOptions {
  std::string generator = "er";  // "er" or "planted"
  std::size_t n = 0;
  double p = 0.5;
  std::size_t k = 0;
  std::size_t l = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;
};

/// Graph file text: parameter comment lines followed by the canonical graph.
std::string gen_document(const GenOptions& opt);
nlohmann::json gen_params(const GenOptions& opt);

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

struct BenchEntry {
  std::string generator = "er";
  std::size_t n = 0;
  double p = 0.5;
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::vector<std::uint64_t> seeds;
};

struct BenchConfig {
  std::vector<BenchEntry> entries;
  std::vector<Variant> variants{Variant::expansion, Variant::additive};
  std::size_t oracle_max_n = 16;
};

/// Suite file (JSON):
///   {"variants": ["expansion", "additive"],          optional
///    "instances": [{"generator": "er"|"planted",      optional, default er
///                   "n": 14, "p": 0.3, "k": 2, "l": 2,
///                   "seeds": 100 | [1, 5, 9]}]}       count means 0..count-1
/// Throws std::invalid_argument with a message on malformed input.
BenchConfig parse_bench_config(const std::string& text);

struct BenchRow {
  std::string instance;
  Report report;
};

std::vector<BenchRow> run_bench(const BenchConfig& cfg);

inline constexpr const char* kCsvHeader =
    "instance,variant,n,m,k,l,kernel_n,kernel_m,kernel_k,bound,bound_ok,rule1,rule2,rule3,rule4,oracle_agree,time_ms";

/// Per-row lines followed by one "mean" line per variant (kernel_n averaged).
void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

int cmd_bench(const std::string& suite_path, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pvc::cli
