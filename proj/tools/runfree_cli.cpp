// Command-line surface for the run-avoiding coloring counts: single
// queries, full tables, reliability polynomials, formula-vs-oracle
// verification and the tightness-monotonicity sweep.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "runfree/cycles.hpp"
#include "runfree/reliability.hpp"
#include "runfree/table.hpp"
#include "runfree/tight.hpp"
#include "runfree/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

struct FamilyArgs {
  std::string family = "loose-path";
  int r = 2;
  int n = 0;
  int k = 1;
  int m = 1;

  runfree::StructureSpec spec() const {
    runfree::StructureSpec s;
    s.family = runfree::family_from_name(family);
    s.r = r;
    s.n = n;
    s.m = m;
    return s;
  }
};

void add_family_flags(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family,
                  "loose-path|loose-cycle|tight-path|tight-cycle|m-tight-path")
      ->capture_default_str();
  cmd->add_option("--r", args.r, "edge size (uniformity)")->required();
  cmd->add_option("--n", args.n, "edge count")->required();
  cmd->add_option("--k", args.k, "forbidden blue run length")->required();
  cmd->add_option("--m", args.m, "overlap for m-tight-path (1 = loose)");
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open " + out_path);
  out << text;
}

mpq_class parse_probability(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    mpq_class p(text);
    p.canonicalize();
    return p;
  }
  // decimal: a or a.b, exact as scaled integer over a power of ten
  auto dot = text.find('.');
  std::string digits = text;
  std::size_t frac_len = 0;
  if (dot != std::string::npos) {
    frac_len = text.size() - dot - 1;
    digits = text.substr(0, dot) + text.substr(dot + 1);
  }
  if (digits.empty()) throw std::invalid_argument("bad probability: " + text);
  mpz_class num(digits);
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  mpq_class p(num, den);
  p.canonicalize();
  return p;
}

// "5", "2..7" or "2-7"
std::pair<int, int> parse_range(const std::string& text) {
  auto sep = text.find("..");
  std::size_t skip = 2;
  if (sep == std::string::npos) {
    sep = text.find('-', 1);
    skip = 1;
  }
  if (sep == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + skip))};
}

int run(int argc, char** argv) {
  CLI::App app{"Exact run-avoiding coloring counts for uniform hypergraph "
               "paths and cycles"};
  app.require_subcommand(1);

  runfree::PathCounter counter;
  const runfree::OracleOptions oracle_opts = runfree::OracleOptions::from_env();

  // count
  FamilyArgs count_args;
  std::string count_j = "0";
  std::string count_engine = "formula";
  auto* cmd_count = app.add_subcommand("count", "print a single count");
  add_family_flags(cmd_count, count_args);
  cmd_count->add_option("--j", count_j, "blue vertex count, or 'sum'")
      ->required();
  cmd_count->add_option("--engine", count_engine, "formula|oracle")
      ->capture_default_str();

  // table
  FamilyArgs table_args;
  std::string table_engine = "formula";
  std::string table_format = "json";
  std::string table_out;
  auto* cmd_table = app.add_subcommand("table", "emit the full j-table");
  add_family_flags(cmd_table, table_args);
  cmd_table->add_option("--engine", table_engine, "formula|oracle")
      ->capture_default_str();
  cmd_table->add_option("--format", table_format, "json|csv")
      ->capture_default_str();
  cmd_table->add_option("--out", table_out, "output file (default stdout)");

  // reliability
  FamilyArgs rel_args;
  std::string rel_p;
  std::string rel_engine = "formula";
  int rel_sweep = 0;
  auto* cmd_rel = app.add_subcommand(
      "reliability", "survival probability R(p) from the count table");
  add_family_flags(cmd_rel, rel_args);
  cmd_rel->add_option("--p", rel_p, "failure probability, 'a/b' or decimal");
  cmd_rel->add_option("--sweep", rel_sweep,
                      "emit CSV rows for p = 0/N .. N/N instead of one value");
  cmd_rel->add_option("--engine", rel_engine, "formula|oracle")
      ->capture_default_str();

  // verify
  std::vector<std::string> verify_theorems;
  std::string verify_grid = "small";
  std::string verify_out;
  auto* cmd_verify = app.add_subcommand(
      "verify", "compare recurrences against the exhaustive oracle");
  cmd_verify->add_option("--theorem", verify_theorems,
                         "theorem id filter (repeatable; default all)");
  cmd_verify->add_option("--grid", verify_grid, "small|full")
      ->capture_default_str();
  cmd_verify->add_option("--out", verify_out, "report file (default stdout)");
  bool verify_list = false;
  cmd_verify->add_flag("--list", verify_list, "list known theorem ids");

  // conjecture
  std::string conj_r = "3", conj_n = "3", conj_k = "1";
  std::string conj_out;
  auto* cmd_conj = app.add_subcommand(
      "conjecture",
      "oracle sweep of the tightness monotonicity chain over m-tight paths");
  cmd_conj->add_option("--r", conj_r, "uniformity or range, e.g. 3 or 3..4")
      ->capture_default_str();
  cmd_conj->add_option("--n", conj_n, "edge count or range")
      ->capture_default_str();
  cmd_conj->add_option("--k", conj_k, "run bound or range")
      ->capture_default_str();
  cmd_conj->add_option("--out", conj_out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (cmd_count->parsed()) {
    const auto spec = count_args.spec();
    const auto engine = runfree::engine_from_name(count_engine);
    if (count_j == "sum") {
      auto table = runfree::make_table(counter, spec, count_args.k, engine,
                                       oracle_opts);
      runfree::Count total = 0;
      for (const auto& row : table.rows) total += row;
      std::cout << total.get_str() << "\n";
    } else {
      long j = std::stol(count_j);
      std::cout << runfree::single_count(counter, spec, count_args.k, j,
                                         engine, oracle_opts)
                       .get_str()
                << "\n";
    }
    return kExitOk;
  }

  if (cmd_table->parsed()) {
    auto table =
        runfree::make_table(counter, table_args.spec(), table_args.k,
                            runfree::engine_from_name(table_engine),
                            oracle_opts);
    if (table_format == "csv") {
      write_output(table_out, runfree::table_to_csv(table));
    } else if (table_format == "json") {
      write_output(table_out, runfree::table_to_json(table).dump(2) + "\n");
    } else {
      throw std::invalid_argument("unknown format: " + table_format);
    }
    return kExitOk;
  }

  if (cmd_rel->parsed()) {
    auto table = runfree::make_table(counter, rel_args.spec(), rel_args.k,
                                     runfree::engine_from_name(rel_engine),
                                     oracle_opts);
    auto poly = runfree::reliability_poly(table.rows, table.vertex_count);
    if (rel_sweep > 0) {
      std::cout << "p,R\n";
      for (int i = 0; i <= rel_sweep; ++i) {
        mpq_class p(i, rel_sweep);
        p.canonicalize();
        std::cout << mpq_get_d(p.get_mpq_t()) << ","
                  << runfree::eval_reliability(poly, mpq_get_d(p.get_mpq_t()))
                  << "\n";
      }
      return kExitOk;
    }
    if (rel_p.empty())
      throw std::invalid_argument("reliability needs --p or --sweep");
    const bool rational_input = rel_p.find('/') != std::string::npos;
    mpq_class p = parse_probability(rel_p);
    if (p < 0 || p > 1)
      throw std::invalid_argument("p must lie in [0,1]");
    if (rational_input) {
      std::cout << runfree::eval_reliability(poly, p).get_str() << "\n";
    } else {
      std::cout << runfree::eval_reliability(poly, mpq_get_d(p.get_mpq_t()))
                << "\n";
    }
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    if (verify_list) {
      for (const auto& name : runfree::known_checks())
        std::cout << name << "\n";
      return kExitOk;
    }
    auto report = runfree::run_verification(
        verify_theorems, runfree::grid_preset_from_name(verify_grid),
        oracle_opts);
    write_output(verify_out, runfree::report_to_json(report).dump(2) + "\n");
    return report.mismatches == 0 ? kExitOk : kExitMismatch;
  }

  if (cmd_conj->parsed()) {
    auto [r_lo, r_hi] = parse_range(conj_r);
    auto [n_lo, n_hi] = parse_range(conj_n);
    auto [k_lo, k_hi] = parse_range(conj_k);
    nlohmann::ordered_json instances = nlohmann::ordered_json::array();
    long violations = 0;
    for (int r = r_lo; r <= r_hi; ++r)
      for (int n = n_lo; n <= n_hi; ++n)
        for (int k = k_lo; k <= k_hi; ++k) {
          auto report = runfree::check_conjecture(r, n, k, oracle_opts);
          violations += report.violations;
          nlohmann::ordered_json inst;
          inst["r"] = r;
          inst["n"] = n;
          inst["k"] = k;
          inst["violations"] = report.violations;
          if (!report.skipped.empty()) inst["skipped"] = report.skipped;
          nlohmann::ordered_json bad = nlohmann::ordered_json::array();
          for (const auto& entry : report.entries) {
            if (!entry.violation) continue;
            bad.push_back({{"m", entry.m},
                           {"j", entry.j},
                           {"tightest", entry.tightest.get_str()},
                           {"value", entry.value.get_str()},
                           {"loosest", entry.loosest.get_str()}});
          }
          if (!bad.empty()) inst["counterexamples"] = std::move(bad);
          instances.push_back(std::move(inst));
        }
    nlohmann::ordered_json doc{{"instances", std::move(instances)},
                               {"summary", {{"violations", violations}}}};
    write_output(conj_out, doc.dump(2) + "\n");
    if (violations > 0)
      std::cerr << "conjecture violations found: " << violations << "\n";
    return kExitOk;  // violations are findings, not errors
  }

  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const runfree::OracleBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
