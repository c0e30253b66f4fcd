#include "ppspace/independence.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "ppspace/io.hpp"

namespace ppspace {

namespace {

/// Candidate matrices travel as rows of '0'/'1' characters; candidate
/// shapes are tiny, so clarity beats packing here.
using Matrix = std::vector<std::string>;

Matrix transpose(const Matrix& rows, std::size_t m) {
  Matrix cols(m, std::string(rows.size(), '0'));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) cols[j][i] = rows[i][j];
  return cols;
}

/// Iterated sorted-row-then-sorted-column normalization, run to a fixpoint
/// (with a safety cap). Matrices in the same row/column-permutation orbit
/// usually normalize to the same form; collisions that survive only cost
/// duplicate evaluations.
Matrix canonicalize(Matrix rows, std::size_t m) {
  for (int iter = 0; iter < 64; ++iter) {
    Matrix before = rows;
    std::sort(rows.begin(), rows.end());
    Matrix cols = transpose(rows, m);
    std::sort(cols.begin(), cols.end());
    rows = transpose(cols, rows.size());
    if (rows == before) break;
  }
  return rows;
}

std::string dedup_key(const Matrix& rows, std::size_t n, std::size_t m) {
  std::string key = std::to_string(n) + "x" + std::to_string(m) + ":";
  for (const std::string& row : rows) key += row;
  return key;
}

IncidenceStructure to_structure(const Matrix& rows, std::size_t n, std::size_t m) {
  IncidenceBuilder builder(n, m);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      if (rows[i][j] == '1') builder.set(i, j);
  return builder.build();
}

struct Evaluation {
  bool is_witness = false;
  std::vector<AxiomClause> failing;
};

Evaluation evaluate(const IncidenceStructure& s, int dropped_axiom) {
  Evaluation eval;
  const AxiomSuiteReport suite = check_all_axioms(s);
  bool dropped_failed = false;
  bool other_failed = false;
  for (const AxiomReport& r : suite.reports) {
    if (r.pass) continue;
    eval.failing.push_back(r.clause);
    if (clause_axiom(r.clause) == dropped_axiom)
      dropped_failed = true;
    else
      other_failed = true;
  }
  eval.is_witness = dropped_failed && !other_failed;
  return eval;
}

}  // namespace

SearchReport search_independence(const SearchConfig& cfg) {
  if (cfg.dropped_axiom < 1 || cfg.dropped_axiom > 4)
    throw std::invalid_argument("dropped axiom must be 1..4");
  if (cfg.max_points < 1 || cfg.max_planes < 1)
    throw std::invalid_argument("bounds must be at least 1");
  if (cfg.budget < 1) throw std::invalid_argument("budget must be at least 1");

  SearchReport report;
  report.exhaustive =
      static_cast<std::uint64_t>(cfg.max_points) * cfg.max_planes <= 20;

  std::set<std::string> seen;

  const auto consider = [&](const Matrix& raw, std::size_t n, std::size_t m) -> bool {
    ++report.candidates_enumerated;
    const Matrix canon = canonicalize(raw, m);
    if (!seen.insert(dedup_key(canon, n, m)).second) {
      ++report.duplicates_skipped;
      return false;
    }
    ++report.candidates_examined;
    IncidenceStructure candidate = to_structure(canon, n, m);
    const Evaluation eval = evaluate(candidate, cfg.dropped_axiom);
    if (eval.is_witness) {
      report.found = true;
      report.witness = std::move(candidate);
      report.failing_clauses = eval.failing;
      return true;
    }
    return false;
  };

  if (report.exhaustive) {
    for (std::uint32_t n = 1; n <= cfg.max_points; ++n) {
      for (std::uint32_t m = 1; m <= cfg.max_planes; ++m) {
        const std::uint32_t cells = n * m;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
          if (report.candidates_enumerated >= cfg.budget) {
            report.budget_exhausted = true;
            return report;
          }
          Matrix rows(n, std::string(m, '0'));
          for (std::uint32_t cell = 0; cell < cells; ++cell)
            if ((bits >> cell) & 1) rows[cell / m][cell % m] = '1';
          if (consider(rows, n, m)) return report;
        }
      }
    }
    return report;  // search space exhausted
  }

  // Randomized fallback. Raw engine draws only, so the stream is identical
  // on every platform.
  std::mt19937_64 gen(cfg.seed);
  while (report.candidates_enumerated < cfg.budget) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(gen() % cfg.max_points);
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(gen() % cfg.max_planes);
    const std::uint64_t density = 1 + gen() % 9;  // tenths
    Matrix rows(n, std::string(m, '0'));
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < m; ++j)
        if (gen() % 10 < density) rows[i][j] = '1';
    if (consider(rows, n, m)) return report;
  }
  report.budget_exhausted = true;
  return report;
}

std::string format_search_report(const SearchConfig& cfg, const SearchReport& report) {
  std::string out;
  out += "search drop=" + std::to_string(cfg.dropped_axiom) +
         " max_points=" + std::to_string(cfg.max_points) +
         " max_planes=" + std::to_string(cfg.max_planes) +
         " budget=" + std::to_string(cfg.budget) + " seed=" + std::to_string(cfg.seed) + "\n";
  out += std::string("mode ") + (report.exhaustive ? "exhaustive" : "randomized") + "\n";
  out += "enumerated " + std::to_string(report.candidates_enumerated) + "\n";
  out += "examined " + std::to_string(report.candidates_examined) + "\n";
  out += "duplicates " + std::to_string(report.duplicates_skipped) + "\n";
  if (report.found) {
    out += "result found\n";
    out += "fails";
    for (AxiomClause clause : report.failing_clauses)
      out += std::string(" ") + std::string(clause_name(clause));
    out += "\n";
    out += serialize_structure(*report.witness);
  } else {
    out += report.budget_exhausted ? "result not_found (budget exhausted)\n"
                                   : "result not_found (search space exhausted)\n";
  }
  return out;
}

}  // namespace ppspace
