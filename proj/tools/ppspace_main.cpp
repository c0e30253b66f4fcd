#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ppspace/axioms.hpp"
#include "ppspace/errors.hpp"
#include "ppspace/incidence.hpp"
#include "ppspace/independence.hpp"
#include "ppspace/io.hpp"
#include "ppspace/lines.hpp"
#include "ppspace/pg_models.hpp"
#include "ppspace/theorems.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // a check failed / no witness found
constexpr int kExitUsage = 2;  // usage or format error

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty()) {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << text;
}

void print_axiom_suite(const ppspace::AxiomSuiteReport& suite) {
  for (const ppspace::AxiomReport& report : suite.reports)
    std::cout << ppspace::format_report(report) << '\n';
  if (!suite.note.empty()) std::cout << "# note: " << suite.note << '\n';
}

int cmd_generate(std::uint32_t q, const std::string& out_path) {
  const ppspace::IncidenceStructure s = ppspace::generate_pg3(q);
  write_output(out_path, ppspace::serialize_structure(s));
  return kExitPass;
}

int cmd_check(const ppspace::IncidenceStructure& s, const std::string& what, bool force,
              std::optional<std::uint64_t> sample) {
  ppspace::CheckOptions copts;
  copts.sample = sample;

  if (what == "axioms") {
    const ppspace::AxiomSuiteReport suite = ppspace::check_all_axioms(s, copts);
    print_axiom_suite(suite);
    return suite.all_pass ? kExitPass : kExitFail;
  }

  ppspace::TheoremRunOptions topts;
  topts.force = force;
  topts.check = copts;

  ppspace::TheoremSuite suite;
  try {
    suite = ppspace::run_theorem_checks(s, topts);
  } catch (const ppspace::PreconditionError&) {
    print_axiom_suite(ppspace::check_all_axioms(s, copts));
    std::cout << "# note: axioms fail; theorem checks skipped (use --force to run them)\n";
    return kExitFail;
  }

  bool shown_pass = suite.axioms.all_pass;
  if (what == "all") print_axiom_suite(suite.axioms);
  if (what == "theorems" || what == "all")
    for (const ppspace::TheoremReport& report : suite.theorem_reports) {
      std::cout << ppspace::format_report(report) << '\n';
      shown_pass = shown_pass && report.pass;
    }
  if (what == "vy" || what == "all")
    for (const ppspace::TheoremReport& report : suite.vy_reports) {
      std::cout << ppspace::format_report(report) << '\n';
      shown_pass = shown_pass && report.pass;
    }
  if (!suite.note.empty()) std::cout << "# note: " << suite.note << '\n';
  if (!suite.e2_failure_implies_e3_failure)
    std::cout << "# note: vy_E2 failed without vy_E3 failing\n";
  if (!suite.axioms.all_pass) std::cout << "# note: structure fails the axioms\n";
  return shown_pass ? kExitPass : kExitFail;
}

int cmd_lines(const ppspace::IncidenceStructure& s, bool counts_only) {
  ppspace::LineTable table;
  try {
    table = ppspace::LineTable::build(s);
  } catch (const ppspace::MalformedLineError& e) {
    std::cout << "FAIL " << e.what() << '\n';
    return kExitFail;
  }
  std::cout << "lines " << table.size() << '\n';
  if (counts_only) return kExitPass;
  for (std::size_t id = 0; id < table.size(); ++id) {
    const ppspace::Line& line = table.lines()[id];
    std::cout << "ln" << id << " points=";
    bool first = true;
    line.points.for_each([&](std::uint32_t p) {
      std::cout << (first ? "" : ",") << 'P' << p;
      first = false;
    });
    std::cout << " planes=";
    first = true;
    line.planes.for_each([&](std::uint32_t h) {
      std::cout << (first ? "" : ",") << "pi" << h;
      first = false;
    });
    std::cout << '\n';
  }
  return kExitPass;
}

int cmd_dual(const ppspace::IncidenceStructure& s, const std::string& out_path) {
  write_output(out_path, ppspace::serialize_structure(ppspace::dualize(s)));
  return kExitPass;
}

int cmd_search(const ppspace::SearchConfig& cfg) {
  const ppspace::SearchReport report = ppspace::search_independence(cfg);
  std::cout << ppspace::format_search_report(cfg, report);
  return report.found ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier for point/plane incidence geometry"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "generate a model structure");
  generate->require_subcommand(1);
  auto* pg3 = generate->add_subcommand("pg3", "projective space PG(3,q) over a prime field");
  std::uint32_t q = 2;
  std::string gen_out;
  pg3->add_option("--q", q, "prime field order")->required();
  pg3->add_option("--out", gen_out, "output file (default: standard output)");

  auto* check = app.add_subcommand("check", "run a verification suite on a structure");
  std::string check_what;
  std::string check_in;
  bool check_force = false;
  std::uint64_t check_sample = 0;
  check->add_option("what", check_what, "one of: axioms, theorems, vy, all")
      ->required()
      ->check(CLI::IsMember({"axioms", "theorems", "vy", "all"}));
  check->add_option("--in", check_in, "input file (default: standard input)");
  check->add_flag("--force", check_force, "run theorem checks even when the axioms fail");
  check->add_option("--sample", check_sample,
                    "sample N cases per check instead of exhausting (exploration only)");

  auto* lines_cmd = app.add_subcommand("lines", "list the derived lines of a structure");
  std::string lines_in;
  bool counts_only = false;
  lines_cmd->add_option("--in", lines_in, "input file (default: standard input)");
  lines_cmd->add_flag("--counts-only", counts_only, "print only the line count");

  auto* dual_cmd = app.add_subcommand("dual", "transpose a structure");
  std::string dual_in, dual_out;
  dual_cmd->add_option("--in", dual_in, "input file (default: standard input)");
  dual_cmd->add_option("--out", dual_out, "output file (default: standard output)");

  auto* search = app.add_subcommand("search", "search for an axiom independence witness");
  ppspace::SearchConfig cfg;
  search->add_option("--drop", cfg.dropped_axiom, "axiom to drop (1..4)")->required();
  search->add_option("--max-points", cfg.max_points, "point bound");
  search->add_option("--max-planes", cfg.max_planes, "plane bound");
  search->add_option("--budget", cfg.budget, "candidate enumeration cap");
  search->add_option("--seed", cfg.seed, "seed for the randomized fallback");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*pg3) return cmd_generate(q, gen_out);
    if (*check) {
      const auto s = ppspace::parse_structure(read_input(check_in));
      std::optional<std::uint64_t> sample;
      if (check->count("--sample") > 0) sample = check_sample;
      return cmd_check(s, check_what, check_force, sample);
    }
    if (*lines_cmd) return cmd_lines(ppspace::parse_structure(read_input(lines_in)), counts_only);
    if (*dual_cmd) return cmd_dual(ppspace::parse_structure(read_input(dual_in)), dual_out);
    if (*search) return cmd_search(cfg);
  } catch (const ppspace::ParseError& e) {
    std::cerr << "error: line " << e.line() << ", column " << e.column() << ": " << e.what()
              << '\n';
    return kExitUsage;
  } catch (const ppspace::SizeBoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
