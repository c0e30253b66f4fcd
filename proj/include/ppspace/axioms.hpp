#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppspace/incidence.hpp"

namespace ppspace {

/// The seven exhaustively checkable clauses of the four incidence axioms.
/// Axioms 1-3 are point/plane clause pairs; axiom 4 is self-dual.
enum class AxiomClause : std::uint8_t { A1_pt, A1_pl, A2_pt, A2_pl, A3_pt, A3_pl, A4 };

std::string_view clause_name(AxiomClause clause);

/// Which axiom (1-4) a clause belongs to.
int clause_axiom(AxiomClause clause);

/// Verdict for one clause. When pass is false the witness holds the
/// lexicographically least violating tuple of element indices (point or
/// plane, as dictated by the clause); replaying it against the structure
/// reproduces the violation.
struct AxiomReport {
  AxiomClause clause = AxiomClause::A1_pt;
  bool pass = true;
  std::vector<std::uint32_t> witness;
  std::uint64_t checked_cases = 0;

  AxiomReport() = default;
  explicit AxiomReport(AxiomClause c) : clause(c) {}

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Checks are exhaustive by default and refuse to run on structures whose
/// sorts exceed size_bound. Setting sample switches every quantifier to
/// `sample` seeded random draws instead; a sampled pass is NOT a proof.
struct CheckOptions {
  std::size_t size_bound = 512;
  std::optional<std::uint64_t> sample;
  std::uint64_t sample_seed = 0;
};

/// Axiom 1: every point misses some plane / every plane misses some point.
std::pair<AxiomReport, AxiomReport> check_axiom1(const IncidenceStructure& s,
                                                 const CheckOptions& opts = {});

/// Axiom 2: any two points (the quantifier includes A == B) lie in more than
/// two common planes; dually for planes. Distinct pairs dominate the
/// degenerate cases by antitonicity, so those are enumerated only when a
/// sort is too small to contain a distinct pair.
std::pair<AxiomReport, AxiomReport> check_axiom2(const IncidenceStructure& s,
                                                 const CheckOptions& opts = {});

/// Axiom 3: any three points have a common plane; dually for planes. Same
/// degenerate-case policy as axiom 2.
std::pair<AxiomReport, AxiomReport> check_axiom3(const IncidenceStructure& s,
                                                 const CheckOptions& opts = {});

/// Axiom 4: for all A != B and alpha != beta with {A,B} mutually incident
/// to {alpha,beta}, the perp of the pair on either side equals the double
/// perp of the pair on the other side. Both displayed equalities are
/// verified.
AxiomReport check_axiom4(const IncidenceStructure& s, const CheckOptions& opts = {});

/// All seven clause reports in fixed order
/// [A1_pt, A1_pl, A2_pt, A2_pl, A3_pt, A3_pl, A4], plus a human-readable
/// note: the derived cardinality remark when axioms 2 and 3 pass on
/// nonempty sorts, or a degeneracy flag when both sorts are empty.
struct AxiomSuiteReport {
  std::vector<AxiomReport> reports;
  bool all_pass = true;
  std::string note;
};

AxiomSuiteReport check_all_axioms(const IncidenceStructure& s, const CheckOptions& opts = {});

/// True iff the clause reports of dualize(s) are the clause reports of s
/// with the point and plane clauses transposed. For the six paired clauses
/// the reports must match exactly (verdict, witness, case count); for the
/// self-dual axiom 4 the verdicts must match (its enumeration order is not
/// preserved under transposition, so witnesses may differ). Always runs
/// exhaustively; throws SizeBoundError beyond opts.size_bound.
bool check_duality(const IncidenceStructure& s, const CheckOptions& opts = {});

/// Re-evaluates a failing report's witness using the perp primitives alone.
/// Returns true iff the violation is reproduced.
bool replay_axiom_witness(const IncidenceStructure& s, const AxiomReport& report);

}  // namespace ppspace
