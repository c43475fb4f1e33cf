#include "pcmrank/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>

#include "pcmrank/axioms.hpp"
#include "pcmrank/json_io.hpp"
#include "pcmrank/matrix_io.hpp"
#include "pcmrank/reduce.hpp"

namespace pcmrank {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnknownRanking = 3;
constexpr int kExitTableMismatch = 4;

// ratio deviation treated as consistent in reports
constexpr double kReportConsistencyTol = 1e-10;

void print_matrix(std::ostream& out, const PairwiseComparisonMatrix& m,
                  const std::string& indent) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << indent;
    for (std::size_t j = 0; j < m.size(); ++j) {
      out << (j ? " " : "") << format_double(m(i, j));
    }
    out << "\n";
  }
}

std::string location_text(const TriadLocation& loc) {
  return "(" + std::to_string(loc.i + 1) + "," + std::to_string(loc.j + 1) + "," +
         std::to_string(loc.k + 1) + ")";
}

std::string triad_text(const Triad& t) {
  return "(" + format_double(t.t1) + ", " + format_double(t.t2) + ", " + format_double(t.t3) +
         ")";
}

struct IndexCmd {
  std::string path;
  bool json = false;
  bool per_triad = false;
  double tolerance = kDefaultReciprocityTol;
};

struct CompareCmd {
  std::string path_a;
  std::string path_b;
  std::string ranking = "koczkodaj";
  bool json = false;
  double tolerance = kDefaultReciprocityTol;
};

struct AxiomsCmd {
  std::string ranking = "koczkodaj";
  std::string axiom;  // empty = the six table axioms
  std::uint64_t seed = 42;
  std::uint64_t trials = 10000;
  std::size_t max_n = 7;
  bool json = false;
};

struct Table1Cmd {
  std::uint64_t seed = 42;
  std::uint64_t trials = 10000;
  bool json = false;
};

struct ReduceCmd {
  std::string path;
  bool json = false;
  double tolerance = kDefaultReciprocityTol;
};

struct GenCmd {
  std::size_t n = 3;
  std::uint64_t seed = 42;
  std::string mode = "random";
  double delta = 0.1;
  double lo = 1.0 / 9.0;
  double hi = 9.0;
  std::string base;
  std::string out_path;
  bool full = false;
};

int cmd_index(const IndexCmd& c, std::ostream& out) {
  const PairwiseComparisonMatrix m = read_matrix_file(c.path, c.tolerance);
  const InconsistencyScore sc = koczkodaj_index(m);
  const bool consistent = is_consistent(m, kReportConsistencyTol);
  std::vector<TriadDiagnostic> report;
  if (m.size() >= 3) report = per_triad_report(m);

  if (c.json) {
    nlohmann::json j = {{"n", m.size()},
                        {"kii", sc.kii},
                        {"ratio_score", sc.ratio_score},
                        {"consistent", consistent}};
    if (!report.empty()) {
      const TriadLocation worst = max_inconsistent_triad(m);
      j["worst_triad"] = location_to_json(worst);
      j["worst_triad"]["ratio_score"] = triad_ratio_score(worst.triad);
    }
    if (c.per_triad) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& d : report) rows.push_back(diagnostic_to_json(d));
      j["per_triad"] = std::move(rows);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "n:           " << m.size() << "\n";
  out << "kii:         " << format_double(sc.kii) << "\n";
  out << "ratio score: " << format_double(sc.ratio_score) << "\n";
  out << "consistent:  " << (consistent ? "yes" : "no") << "\n";
  if (!report.empty()) {
    const TriadLocation worst = max_inconsistent_triad(m);
    out << "worst triad: " << location_text(worst) << " values " << triad_text(worst.triad)
        << " ratio " << format_double(triad_ratio_score(worst.triad)) << "\n";
  }
  if (c.per_triad) {
    out << "per-triad diagnostics (" << report.size() << " triads):\n";
    for (const auto& d : report) {
      out << "  " << location_text(d.location) << " values " << triad_text(d.location.triad)
          << " ratio " << format_double(d.ratio_score) << " kii "
          << format_double(d.kii_contribution) << "\n";
    }
  }
  return kExitOk;
}

int cmd_compare(const CompareCmd& c, std::ostream& out) {
  const PairwiseComparisonMatrix a = read_matrix_file(c.path_a, c.tolerance);
  const PairwiseComparisonMatrix b = read_matrix_file(c.path_b, c.tolerance);
  const Ordering ord = compare(c.ranking, a, b);
  const double score_a = score(c.ranking, a);
  const double score_b = score(c.ranking, b);

  if (c.json) {
    nlohmann::json j = {{"ranking", c.ranking},   {"ordering", to_string(ord)},
                        {"score_a", score_a},     {"score_b", score_b},
                        {"n_a", a.size()},        {"n_b", b.size()}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  switch (ord) {
    case Ordering::LessInconsistent: out << "A less inconsistent\n"; break;
    case Ordering::Equivalent: out << "equivalent\n"; break;
    case Ordering::MoreInconsistent: out << "A more inconsistent\n"; break;
  }
  out << "ranking: " << c.ranking << "\n";
  out << "score A: " << format_double(score_a) << " (n = " << a.size() << ")\n";
  out << "score B: " << format_double(score_b) << " (n = " << b.size() << ")\n";
  return kExitOk;
}

void print_verdict_row(std::ostream& out, const AxiomVerdict& v) {
  out << std::left << std::setw(5) << to_string(v.axiom);
  if (v.passed) {
    out << "pass       (" << v.trials << " trials, no violation found)\n";
    return;
  }
  out << "VIOLATION  (";
  if (v.trials == 0) {
    out << "pinned witness";
  } else {
    out << "found at trial " << v.trials;
  }
  out << ")\n";
  if (v.witness) {
    out << "     note: " << v.witness->note << "\n";
    for (std::size_t i = 0; i < v.witness->matrices.size(); ++i) {
      out << "     witness matrix " << i + 1 << (i < v.witness->scores.size()
                                                     ? " (score " +
                                                           format_double(v.witness->scores[i]) +
                                                           ")"
                                                     : std::string())
          << ":\n";
      print_matrix(out, v.witness->matrices[i], "       ");
    }
  }
}

int cmd_axioms(const AxiomsCmd& c, std::ostream& out) {
  SuiteConfig cfg;
  cfg.seed = c.seed;
  cfg.trials_per_cell = c.trials;
  cfg.max_n = c.max_n;

  std::vector<AxiomId> list;
  if (c.axiom.empty()) {
    list.assign(kTableAxioms.begin(), kTableAxioms.end());
  } else {
    list.push_back(axiom_from_string(c.axiom));
  }

  std::vector<AxiomVerdict> verdicts;
  verdicts.reserve(list.size());
  for (AxiomId a : list) verdicts.push_back(check_axiom(a, c.ranking, cfg));

  if (c.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : verdicts) rows.push_back(verdict_to_json(v));
    nlohmann::json j = {{"ranking", c.ranking},
                        {"seed", c.seed},
                        {"trials_per_cell", c.trials},
                        {"results", std::move(rows)}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "ranking: " << c.ranking << " (seed " << c.seed << ", " << c.trials
      << " trials per axiom)\n";
  for (const auto& v : verdicts) print_verdict_row(out, v);
  return kExitOk;
}

int cmd_table1(const Table1Cmd& c, std::ostream& out) {
  SuiteConfig cfg;
  cfg.seed = c.seed;
  cfg.trials_per_cell = c.trials;
  const IndependenceTable table = independence_table(cfg);

  if (c.json) {
    nlohmann::json j = table_to_json(table);
    j["seed"] = c.seed;
    j["trials_per_cell"] = c.trials;
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(11) << "ranking";
    for (AxiomId a : table.axioms) out << std::setw(5) << to_string(a);
    out << "\n";
    for (std::size_t r = 0; r < table.rankings.size(); ++r) {
      out << std::left << std::setw(11) << table.rankings[r];
      for (std::size_t col = 0; col < table.axioms.size(); ++col) {
        out << std::setw(5) << (table.cells[r][col].passed ? "pass" : "VIOL");
      }
      out << "\n";
    }
  }

  const auto mismatches = table.mismatches();
  if (mismatches.empty()) {
    if (!c.json) out << "pattern matches the expected independence table\n";
    return kExitOk;
  }
  if (!c.json) {
    out << "pattern differs from the expected independence table at:\n";
    for (const auto& [rid, axiom] : mismatches) {
      out << "  (" << rid << ", " << to_string(axiom) << "): expected "
          << (IndependenceTable::expected_pass(rid, axiom) ? "pass" : "violation") << ", got "
          << (IndependenceTable::expected_pass(rid, axiom) ? "violation" : "pass") << "\n";
    }
  }
  return kExitTableMismatch;
}

int cmd_reduce(const ReduceCmd& c, std::ostream& out) {
  const PairwiseComparisonMatrix m = read_matrix_file(c.path, c.tolerance);
  const CanonicalTrace trace = canonicalize(m);

  if (c.json) {
    out << trace_to_json(trace).dump(2) << "\n";
    return kExitOk;
  }

  const TriadLocation& loc = *trace.step_red;
  out << "red:  triad " << location_text(loc) << " values " << triad_text(loc.triad)
      << " ratio " << format_double(triad_ratio_score(loc.triad)) << "\n";
  out << "si:   " << triad_text(trace.step_si) << " ratio "
      << format_double(triad_ratio_score(trace.step_si)) << "\n";
  out << "hte:  " << triad_text(trace.step_hte) << " ratio "
      << format_double(triad_ratio_score(trace.step_hte)) << "\n";
  out << "iip:  " << triad_text(trace.step_iip) << " ratio "
      << format_double(triad_ratio_score(trace.step_iip)) << "\n";
  out << "canonical value: " << format_double(trace.canonical_value) << "\n";
  return kExitOk;
}

int cmd_gen(const GenCmd& c, std::ostream& out) {
  GenSpec spec;
  spec.n = c.n;
  spec.seed = c.seed;
  spec.lo = c.lo;
  spec.hi = c.hi;
  if (c.mode == "random") {
    spec.mode = GenMode::Random;
  } else if (c.mode == "consistent") {
    spec.mode = GenMode::Consistent;
  } else if (c.mode == "perturbed") {
    spec.mode = GenMode::Perturbed;
    spec.delta = c.delta;
    if (!c.base.empty()) spec.base = read_matrix_file(c.base);
  } else {
    throw Error(ErrorCode::BadSpec, "mode must be random, consistent or perturbed");
  }
  const PairwiseComparisonMatrix m = generate(spec);
  const std::string text = format_matrix(m, !c.full);
  if (c.out_path.empty()) {
    out << text;
  } else {
    write_matrix_file(c.out_path, m, !c.full);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"inconsistency indices, rankings and axiom checks for pairwise comparison "
               "matrices"};
  app.name("pcmrank");
  app.require_subcommand(1);

  IndexCmd index_cmd;
  auto* index_sub = app.add_subcommand("index", "worst-triad inconsistency of one matrix");
  index_sub->add_option("file", index_cmd.path, "matrix file")->required();
  index_sub->add_flag("--json", index_cmd.json, "emit JSON");
  index_sub->add_flag("--per-triad", index_cmd.per_triad, "include per-triad diagnostics");
  index_sub->add_option("--tolerance", index_cmd.tolerance,
                        "reciprocity validation tolerance for full-form files");

  CompareCmd compare_cmd;
  auto* compare_sub = app.add_subcommand("compare", "order two matrices under a ranking");
  compare_sub->add_option("fileA", compare_cmd.path_a, "first matrix file")->required();
  compare_sub->add_option("fileB", compare_cmd.path_b, "second matrix file")->required();
  compare_sub->add_option("--ranking", compare_cmd.ranking, "ranking id (default koczkodaj)");
  compare_sub->add_flag("--json", compare_cmd.json, "emit JSON");
  compare_sub->add_option("--tolerance", compare_cmd.tolerance,
                          "reciprocity validation tolerance for full-form files");

  AxiomsCmd axioms_cmd;
  auto* axioms_sub = app.add_subcommand("axioms", "check the axioms against one ranking");
  axioms_sub->add_option("--ranking", axioms_cmd.ranking, "ranking id (default koczkodaj)");
  axioms_sub->add_option("--axiom", axioms_cmd.axiom,
                         "single axiom (PR IIP HTE SI MON RED OI); default: the six table axioms");
  axioms_sub->add_option("--seed", axioms_cmd.seed, "fuzzing seed");
  axioms_sub->add_option("--trials", axioms_cmd.trials, "trials per axiom");
  axioms_sub->add_option("--max-n", axioms_cmd.max_n, "largest sampled matrix size");
  axioms_sub->add_flag("--json", axioms_cmd.json, "emit JSON");

  Table1Cmd table1_cmd;
  auto* table1_sub =
      app.add_subcommand("table1", "full ranking-by-axiom independence table");
  table1_sub->add_option("--seed", table1_cmd.seed, "fuzzing seed");
  table1_sub->add_option("--trials", table1_cmd.trials, "trials per cell");
  table1_sub->add_flag("--json", table1_cmd.json, "emit JSON");

  ReduceCmd reduce_cmd;
  auto* reduce_sub =
      app.add_subcommand("reduce", "canonicalization trace down to (1, x, 1)");
  reduce_sub->add_option("file", reduce_cmd.path, "matrix file")->required();
  reduce_sub->add_flag("--json", reduce_cmd.json, "emit JSON");
  reduce_sub->add_option("--tolerance", reduce_cmd.tolerance,
                         "reciprocity validation tolerance for full-form files");

  GenCmd gen_cmd;
  auto* gen_sub = app.add_subcommand("gen", "generate a matrix file");
  gen_sub->add_option("--n", gen_cmd.n, "matrix size");
  gen_sub->add_option("--seed", gen_cmd.seed, "generator seed");
  gen_sub->add_option("--mode", gen_cmd.mode, "random | consistent | perturbed");
  gen_sub->add_option("--delta", gen_cmd.delta, "perturbation half-width (perturbed mode)");
  gen_sub->add_option("--lo", gen_cmd.lo, "lower entry bound");
  gen_sub->add_option("--hi", gen_cmd.hi, "upper entry bound");
  gen_sub->add_option("--base", gen_cmd.base, "base matrix file (perturbed mode)");
  gen_sub->add_option("--out", gen_cmd.out_path, "output path (default stdout)");
  gen_sub->add_flag("--full", gen_cmd.full, "write the full grid instead of the upper form");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (index_sub->parsed()) return cmd_index(index_cmd, out);
    if (compare_sub->parsed()) return cmd_compare(compare_cmd, out);
    if (axioms_sub->parsed()) return cmd_axioms(axioms_cmd, out);
    if (table1_sub->parsed()) return cmd_table1(table1_cmd, out);
    if (reduce_sub->parsed()) return cmd_reduce(reduce_cmd, out);
    if (gen_sub->parsed()) return cmd_gen(gen_cmd, out);
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::UnknownRanking ? kExitUnknownRanking : kExitInput;
  }
  return kExitOk;
}

}  // namespace pcmrank
