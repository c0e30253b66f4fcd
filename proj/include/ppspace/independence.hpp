#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppspace/axioms.hpp"
#include "ppspace/incidence.hpp"

namespace ppspace {

/// Bounded search for a structure that fails exactly one axiom group while
/// satisfying the other three — a finite independence witness for the
/// dropped axiom.
struct SearchConfig {
  int dropped_axiom = 1;          // 1..4
  std::uint32_t max_points = 3;   // >= 1
  std::uint32_t max_planes = 3;   // >= 1
  std::uint64_t budget = 100000;  // candidates enumerated, >= 1
  std::uint64_t seed = 0;         // drives the randomized fallback
};

struct SearchReport {
  bool found = false;
  bool exhaustive = false;        // else seeded randomized search
  bool budget_exhausted = false;
  std::uint64_t candidates_enumerated = 0;
  std::uint64_t candidates_examined = 0;  // after canonical-form dedup
  std::uint64_t duplicates_skipped = 0;
  std::optional<IncidenceStructure> witness;
  std::vector<AxiomClause> failing_clauses;  // of the witness, verified
};

/// Enumerates candidate incidence matrices up to the bounds. When
/// max_points * max_planes <= 20 every matrix is enumerated, deduplicated
/// by an iterated sorted-row/sorted-column canonical form (a heuristic
/// quotient of row/column permutation: duplicates may survive, which costs
/// time, never correctness). Larger bounds fall back to a seeded randomized
/// search. Any witness is re-verified with the full axiom suite before it
/// is returned; not finding one is a bounded-search outcome, not a claim.
SearchReport search_independence(const SearchConfig& cfg);

/// Deterministic plain-text rendering of a search run; identical configs
/// produce byte-identical reports.
std::string format_search_report(const SearchConfig& cfg, const SearchReport& report);

}  // namespace ppspace
