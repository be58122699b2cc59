#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pvc/generate.hpp"
#include "pvc/oracle.hpp"

namespace pvc::cli {

using nlohmann::json;

std::size_t Report::kernel_n() const {
  return outcome.decided() ? 0 : outcome.instance.graph.num_vertices();
}
std::size_t Report::kernel_m() const {
  return outcome.decided() ? 0 : outcome.instance.graph.num_edges();
}
std::int64_t Report::kernel_k() const {
  return outcome.status == KernelOutcome::Status::no ? 0 : outcome.instance.k;
}

Report make_report(const PvcInstance& inst, Variant variant, bool oracle_check) {
  Report r;
  r.n = inst.graph.num_vertices();
  r.m = inst.graph.num_edges();
  r.k = inst.k;
  r.l = inst.l;
  r.variant = variant;

  const auto start = std::chrono::steady_clock::now();
  r.outcome = kernelize(inst, variant);
  r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  r.bound = kernel_size_bound(variant, inst.k, inst.l);
  r.bound_satisfied = static_cast<std::int64_t>(r.kernel_n()) <= r.bound;

  if (oracle_check) {
    OracleCheck check;
    check.original_yes = oracle::solve_pvc_exact(inst.graph, inst.k, inst.l).yes;
    switch (r.outcome.status) {
      case KernelOutcome::Status::yes: check.kernel_yes = true; break;
      case KernelOutcome::Status::no: check.kernel_yes = false; break;
      case KernelOutcome::Status::reduced:
        check.kernel_yes =
            oracle::solve_pvc_exact(r.outcome.instance.graph, r.outcome.instance.k, r.outcome.instance.l).yes;
        break;
    }
    check.agree = check.original_yes == check.kernel_yes;
    r.oracle = check;
  }
  return r;
}

json to_json(const Report& r) {
  json j;
  j["input"] = {{"n", r.n}, {"m", r.m}, {"k", r.k}, {"l", r.l}};
  j["variant"] = to_string(r.variant);
  if (r.outcome.lp_doubled_value) {
    j["vclp"] = {{"doubled_value", *r.outcome.lp_doubled_value},
                 {"v0", r.outcome.lp_partition.v0},
                 {"v1", r.outcome.lp_partition.v1},
                 {"vhalf", r.outcome.lp_partition.vhalf}};
  } else {
    j["vclp"] = nullptr;
  }
  json steps = json::array();
  for (const auto& s : r.outcome.trace.steps) {
    std::vector<Label> deleted(s.x_labels);
    deleted.insert(deleted.end(), s.y_labels.begin(), s.y_labels.end());
    std::sort(deleted.begin(), deleted.end());
    steps.push_back({{"rule", static_cast<int>(s.rule)},
                     {"deleted", deleted},
                     {"charged", s.x_labels},
                     {"k_decrement", s.k_decrement}});
  }
  j["steps"] = std::move(steps);
  j["outcome"] = to_string(r.outcome.status);
  j["reason"] = r.outcome.reason;
  j["kernel"] = {{"n", r.kernel_n()}, {"m", r.kernel_m()}, {"k", r.kernel_k()}};
  j["bound"] = r.bound;
  j["bound_satisfied"] = r.bound_satisfied;
  if (r.oracle) {
    j["oracle"] = {{"original_answer", r.oracle->original_yes ? "yes" : "no"},
                   {"kernel_answer", r.oracle->kernel_yes ? "yes" : "no"},
                   {"agree", r.oracle->agree}};
  }
  j["time_ms"] = r.time_ms;
  return j;
}

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_double(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

int cmd_kernelize(const KernelizeOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.k < 0 || opt.l < 0) {
    err << "error: -k and -l must be non-negative\n";
    return kUsage;
  }
  const auto text = read_file(opt.input);
  if (!text) {
    err << "error: cannot read " << opt.input << "\n";
    return kUsage;
  }
  PvcInstance inst;
  try {
    inst.graph = parse_graph(*text);
  } catch (const ParseError& e) {
    err << opt.input << ": " << e.what() << "\n";
    return kParseError;
  }
  inst.k = opt.k;
  inst.l = opt.l;

  Report report;
  try {
    report = make_report(inst, opt.variant, opt.oracle_check);
  } catch (const oracle::TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const auto doc = to_json(report).dump(2);
  out << doc << "\n";
  if (opt.json_path) {
    std::ofstream file(*opt.json_path);
    if (!file) {
      err << "error: cannot write " << *opt.json_path << "\n";
      return kUsage;
    }
    file << doc << "\n";
  }
  if (report.oracle && !report.oracle->agree) {
    err << "oracle disagreement: original " << (report.oracle->original_yes ? "yes" : "no") << ", kernel "
        << (report.oracle->kernel_yes ? "yes" : "no") << "\n";
    return kOracleDisagree;
  }
  return kOk;
}

json gen_params(const GenOptions& opt) {
  json j{{"generator", opt.generator}, {"n", opt.n}, {"seed", opt.seed}, {"p", opt.p}};
  if (opt.generator == "planted") {
    j["k"] = opt.k;
    j["l"] = opt.l;
  }
  return j;
}

std::string gen_document(const GenOptions& opt) {
  std::ostringstream doc;
  if (opt.generator == "er") {
    const auto g = gen::erdos_renyi(opt.n, opt.p, opt.seed);
    doc << "c generator er n " << opt.n << " p " << format_double(opt.p) << " seed " << opt.seed << "\n";
    doc << serialize_graph(g);
  } else if (opt.generator == "planted") {
    const auto inst = gen::planted(opt.n, opt.k, opt.l, opt.seed, opt.p);
    doc << "c generator planted n " << opt.n << " k " << opt.k << " l " << opt.l << " p " << format_double(opt.p)
        << " seed " << opt.seed << "\n";
    doc << "c solution";
    for (auto v : inst.solution) doc << ' ' << (v + 1);
    doc << "\n" << serialize_graph(inst.graph);
  } else {
    throw std::invalid_argument("unknown generator '" + opt.generator + "'");
  }
  return doc.str();
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  std::string doc;
  try {
    doc = gen_document(opt);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (!opt.out_path) {
    out << doc;
    return kOk;
  }
  std::ofstream file(*opt.out_path, std::ios::binary);
  std::ofstream sidecar(*opt.out_path + ".json");
  if (!file || !sidecar) {
    err << "error: cannot write " << *opt.out_path << "\n";
    return kUsage;
  }
  file << doc;
  sidecar << gen_params(opt).dump(2) << "\n";
  return kOk;
}

BenchConfig parse_bench_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("suite is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("instances") || !j["instances"].is_array()) {
    throw std::invalid_argument("suite needs an \"instances\" array");
  }
  BenchConfig cfg;
  try {
    if (j.contains("variants")) {
      cfg.variants.clear();
      for (const auto& v : j["variants"]) {
        auto parsed = parse_variant(v.get<std::string>());
        if (!parsed) throw std::invalid_argument("unknown variant " + v.dump());
        cfg.variants.push_back(*parsed);
      }
    }
    if (j.contains("oracle_max_n")) cfg.oracle_max_n = j["oracle_max_n"].get<std::size_t>();
    for (const auto& e : j["instances"]) {
      BenchEntry entry;
      entry.generator = e.value("generator", std::string("er"));
      if (entry.generator != "er" && entry.generator != "planted") {
        throw std::invalid_argument("unknown generator '" + entry.generator + "'");
      }
      entry.n = e.at("n").get<std::size_t>();
      entry.p = e.value("p", 0.5);
      entry.k = e.at("k").get<std::int64_t>();
      entry.l = e.at("l").get<std::int64_t>();
      if (entry.k < 0 || entry.l < 0) throw std::invalid_argument("k and l must be non-negative");
      if (!(entry.p >= 0.0 && entry.p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
      const auto& seeds = e.at("seeds");
      if (seeds.is_array()) {
        entry.seeds = seeds.get<std::vector<std::uint64_t>>();
      } else {
        const auto count = seeds.get<std::uint64_t>();
        for (std::uint64_t s = 0; s < count; ++s) entry.seeds.push_back(s);
      }
      cfg.entries.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed suite: ") + e.what());
  }
  return cfg;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (const auto& e : cfg.entries) {
    for (auto seed : e.seeds) {
      PvcInstance inst;
      std::ostringstream name;
      if (e.generator == "planted") {
        inst.graph = gen::planted(e.n, static_cast<std::size_t>(e.k), static_cast<std::size_t>(e.l), seed, e.p).graph;
        name << "planted-n" << e.n << "-k" << e.k << "-l" << e.l << "-s" << seed;
      } else {
        inst.graph = gen::erdos_renyi(e.n, e.p, seed);
        name << "er-n" << e.n << "-p" << format_double(e.p) << "-k" << e.k << "-l" << e.l << "-s" << seed;
      }
      inst.k = e.k;
      inst.l = e.l;
      const bool check = e.n <= cfg.oracle_max_n;
      for (auto v : cfg.variants) rows.push_back({name.str(), make_report(inst, v, check)});
    }
  }
  return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kCsvHeader << "\n";
  std::map<std::string, std::pair<double, std::size_t>> mean;
  for (const auto& row : rows) {
    const auto& r = row.report;
    const auto& t = r.outcome.trace;
    out << row.instance << ',' << to_string(r.variant) << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.l
        << ',' << r.kernel_n() << ',' << r.kernel_m() << ',' << r.kernel_k() << ',' << r.bound << ','
        << (r.bound_satisfied ? "true" : "false") << ',' << t.count(Rule::isolated) << ','
        << t.count(Rule::lp_bound) << ',' << t.count(Rule::expansion) << ',' << t.count(Rule::additive) << ','
        << (r.oracle ? (r.oracle->agree ? "true" : "false") : "") << ',' << std::fixed << std::setprecision(3)
        << r.time_ms << std::defaultfloat << "\n";
    auto& [sum, count] = mean[to_string(r.variant)];
    sum += static_cast<double>(r.kernel_n());
    ++count;
  }
  for (const auto& [variant, acc] : mean) {
    out << "mean," << variant << ",,,,," << std::fixed << std::setprecision(3)
        << acc.first / static_cast<double>(acc.second) << std::defaultfloat << ",,,,,,,,,,\n";
  }
}

int cmd_bench(const std::string& suite_path, std::ostream& out, std::ostream& err) {
  const auto text = read_file(suite_path);
  if (!text) {
    err << "error: cannot read " << suite_path << "\n";
    return kUsage;
  }
  BenchConfig cfg;
  try {
    cfg = parse_bench_config(*text);
  } catch (const std::invalid_argument& e) {
    err << suite_path << ": " << e.what() << "\n";
    return kUsage;
  }
  std::vector<BenchRow> rows;
  try {
    rows = run_bench(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  write_csv(rows, out);
  for (const auto& row : rows) {
    if (row.report.oracle && !row.report.oracle->agree) {
      err << "oracle disagreement on " << row.instance << " (" << to_string(row.report.variant) << ")\n";
      return kOracleDisagree;
    }
  }
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial Vertex Cover kernelization"};
  app.require_subcommand(1);

  KernelizeOptions kopt;
  std::string variant = "additive";
  auto* kern = app.add_subcommand("kernelize", "Kernelize an instance and print a JSON report");
  kern->add_option("--input", kopt.input, "Graph file (p edge / e u v format)")->required();
  kern->add_option("-k", kopt.k, "Vertex budget")->required();
  kern->add_option("-l", kopt.l, "Allowed uncovered edges")->required();
  kern->add_option("--variant", variant, "expansion | additive")
      ->check(CLI::IsMember({"expansion", "additive"}));
  kern->add_flag("--oracle-check", kopt.oracle_check, "Cross-check with the brute-force oracle");
  kern->add_option("--json", kopt.json_path, "Also write the report to this path");

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->require_subcommand(1);
  GenOptions er_opt, planted_opt;
  er_opt.generator = "er";
  planted_opt.generator = "planted";
  auto* er = gen->add_subcommand("er", "Erdős–Rényi G(n, p)");
  er->add_option("--n", er_opt.n)->required();
  er->add_option("--p", er_opt.p)->required();
  er->add_option("--seed", er_opt.seed)->required();
  er->add_option("--out", er_opt.out_path, "Output file (a .json sidecar is written next to it)");
  auto* planted = gen->add_subcommand("planted", "Planted yes-instance");
  planted->add_option("--n", planted_opt.n)->required();
  planted->add_option("--k", planted_opt.k)->required();
  planted->add_option("--l", planted_opt.l)->required();
  planted->add_option("--seed", planted_opt.seed)->required();
  planted->add_option("--p", planted_opt.p, "Edge probability for pairs touching the solution");
  planted->add_option("--out", planted_opt.out_path, "Output file (a .json sidecar is written next to it)");

  std::string suite;
  auto* bench = app.add_subcommand("bench", "Run a suite and print CSV");
  bench->add_option("--suite", suite, "Suite file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*kern) {
    kopt.variant = *parse_variant(variant);
    return cmd_kernelize(kopt, out, err);
  }
  if (*er) return cmd_gen(er_opt, out, err);
  if (*planted) return cmd_gen(planted_opt, out, err);
  if (*bench) return cmd_bench(suite, out, err);
  return kUsage;
}

}  // namespace pvc::cli
