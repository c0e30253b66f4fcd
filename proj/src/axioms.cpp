#include "ppspace/axioms.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ppspace/errors.hpp"

namespace ppspace {

std::string_view clause_name(AxiomClause clause) {
  switch (clause) {
    case AxiomClause::A1_pt: return "A1_pt";
    case AxiomClause::A1_pl: return "A1_pl";
    case AxiomClause::A2_pt: return "A2_pt";
    case AxiomClause::A2_pl: return "A2_pl";
    case AxiomClause::A3_pt: return "A3_pt";
    case AxiomClause::A3_pl: return "A3_pl";
    case AxiomClause::A4: return "A4";
  }
  return "?";
}

int clause_axiom(AxiomClause clause) {
  switch (clause) {
    case AxiomClause::A1_pt:
    case AxiomClause::A1_pl: return 1;
    case AxiomClause::A2_pt:
    case AxiomClause::A2_pl: return 2;
    case AxiomClause::A3_pt:
    case AxiomClause::A3_pl: return 3;
    case AxiomClause::A4: return 4;
  }
  return 0;
}

namespace {

void ensure_within_bound(const IncidenceStructure& s, const CheckOptions& opts) {
  if (opts.sample) return;
  const std::size_t largest = std::max(s.point_count(), s.plane_count());
  if (largest > opts.size_bound)
    throw SizeBoundError("sort size " + std::to_string(largest) +
                         " exceeds the exhaustive-check bound " +
                         std::to_string(opts.size_bound) + " (use sampling to explore)");
}

/// Deterministic draws independent of the standard library's distribution
/// implementations, so reports are reproducible everywhere.
struct Sampler {
  explicit Sampler(std::uint64_t seed) : gen(seed) {}

  std::uint32_t pick(std::size_t k) { return static_cast<std::uint32_t>(gen() % k); }

  std::pair<std::uint32_t, std::uint32_t> distinct_pair(std::size_t k) {
    const std::uint32_t a = pick(k);
    std::uint32_t b = pick(k);
    while (b == a) b = pick(k);
    return {a, b};
  }

  std::mt19937_64 gen;
};

/// One side of the structure: the quantified sort and its incidence rows.
/// Every clause checker is written once against this view and run twice,
/// the second time with the sorts swapped.
struct SideView {
  std::size_t n;           // quantified sort size
  std::size_t opposite_n;  // opposite sort size
  const IncidenceStructure* s;
  bool points;  // quantifying over points?

  const IndexSet& row(std::uint32_t i) const {
    return points ? s->planes_through(i) : s->points_in(i);
  }
};

SideView point_side(const IncidenceStructure& s) {
  return {s.point_count(), s.plane_count(), &s, true};
}

SideView plane_side(const IncidenceStructure& s) {
  return {s.plane_count(), s.point_count(), &s, false};
}

AxiomReport check_a1_side(const SideView& side, AxiomClause clause, const CheckOptions& opts) {
  AxiomReport report{clause};
  if (opts.sample) {
    Sampler rng(opts.sample_seed);
    if (side.n == 0) return report;
    for (std::uint64_t k = 0; k < *opts.sample; ++k) {
      const std::uint32_t e = rng.pick(side.n);
      ++report.checked_cases;
      if (side.row(e).is_full()) {
        report.pass = false;
        report.witness = {e};
        return report;
      }
    }
    return report;
  }
  for (std::uint32_t e = 0; e < side.n; ++e) {
    ++report.checked_cases;
    if (side.row(e).is_full()) {
      report.pass = false;
      report.witness = {e};
      return report;
    }
  }
  return report;
}

bool pair_has_more_than_two(const SideView& side, std::uint32_t a, std::uint32_t b) {
  return side.row(a).intersection_count_capped(side.row(b), 3) >= 3;
}

AxiomReport check_a2_side(const SideView& side, AxiomClause clause, const CheckOptions& opts) {
  AxiomReport report{clause};
  if (opts.sample) {
    Sampler rng(opts.sample_seed);
    if (side.n == 0) return report;
    for (std::uint64_t k = 0; k < *opts.sample; ++k) {
      const auto [a, b] = side.n == 1 ? std::pair<std::uint32_t, std::uint32_t>{0, 0}
                                      : rng.distinct_pair(side.n);
      ++report.checked_cases;
      if (!pair_has_more_than_two(side, a, b)) {
        report.pass = false;
        report.witness = {std::min(a, b), std::max(a, b)};
        return report;
      }
    }
    return report;
  }
  if (side.n == 1) {
    // No distinct pair exists to dominate the degenerate A == B case.
    ++report.checked_cases;
    if (side.row(0).count() <= 2) {
      report.pass = false;
      report.witness = {0, 0};
    }
    return report;
  }
  for (std::uint32_t a = 0; a < side.n; ++a) {
    for (std::uint32_t b = a + 1; b < side.n; ++b) {
      ++report.checked_cases;
      if (!pair_has_more_than_two(side, a, b)) {
        report.pass = false;
        report.witness = {a, b};
        return report;
      }
    }
  }
  return report;
}

AxiomReport check_a3_side(const SideView& side, AxiomClause clause, const CheckOptions& opts) {
  AxiomReport report{clause};
  if (opts.sample) {
    Sampler rng(opts.sample_seed);
    if (side.n == 0) return report;
    for (std::uint64_t k = 0; k < *opts.sample; ++k) {
      std::uint32_t a = rng.pick(side.n), b = rng.pick(side.n), c = rng.pick(side.n);
      ++report.checked_cases;
      const IndexSet common = side.row(a) & side.row(b);
      if (!common.intersects(side.row(c))) {
        report.pass = false;
        std::vector<std::uint32_t> w{a, b, c};
        std::sort(w.begin(), w.end());
        report.witness = std::move(w);
        return report;
      }
    }
    return report;
  }
  if (side.n == 1) {
    ++report.checked_cases;
    if (side.row(0).empty()) {
      report.pass = false;
      report.witness = {0, 0, 0};
    }
    return report;
  }
  if (side.n == 2) {
    // Only the pair is available; it dominates the singletons.
    ++report.checked_cases;
    if (!side.row(0).intersects(side.row(1))) {
      report.pass = false;
      report.witness = {0, 0, 1};
    }
    return report;
  }
  for (std::uint32_t a = 0; a < side.n; ++a) {
    for (std::uint32_t b = a + 1; b < side.n; ++b) {
      const IndexSet pair_common = side.row(a) & side.row(b);
      for (std::uint32_t c = b + 1; c < side.n; ++c) {
        ++report.checked_cases;
        if (!pair_common.intersects(side.row(c))) {
          report.pass = false;
          report.witness = {a, b, c};
          return report;
        }
      }
    }
  }
  return report;
}

/// Opposite-sort rows: the columns of the side's relation.
const IndexSet& opposite_row(const SideView& side, std::uint32_t j) {
  return side.points ? side.s->points_in(j) : side.s->planes_through(j);
}

/// Checks both displayed equalities for one (pair, pair) configuration.
/// `pencil` is {A,B}^perp and `closure` is {A,B}^perp-perp; alpha and beta
/// are members of the pencil. The second equality makes the first follow
/// whenever it holds, but both are evaluated.
bool axiom4_config_holds(const SideView& side, const IndexSet& pencil, const IndexSet& closure,
                         const IndexSet& closure_perp, std::uint32_t alpha, std::uint32_t beta) {
  const IndexSet double_perp_src = opposite_row(side, alpha) & opposite_row(side, beta);
  if (double_perp_src != closure) return false;               // {alpha,beta}^perp == {A,B}^perp-perp
  return closure_perp == pencil;                              // {A,B}^perp == {alpha,beta}^perp-perp
}

AxiomReport check_a4_from(const SideView& side, const CheckOptions& opts) {
  AxiomReport report{AxiomClause::A4};
  const auto closure_of = [&](const IndexSet& pencil) {
    IndexSet closure = IndexSet::full_set(side.n);
    pencil.for_each([&](std::uint32_t j) { closure.intersect_with(opposite_row(side, j)); });
    return closure;
  };
  const auto perp_of_closure = [&](const IndexSet& closure) {
    IndexSet perp = IndexSet::full_set(side.opposite_n);
    closure.for_each([&](std::uint32_t i) { perp.intersect_with(side.row(i)); });
    return perp;
  };

  if (opts.sample) {
    Sampler rng(opts.sample_seed);
    if (side.n < 2) return report;
    for (std::uint64_t k = 0; k < *opts.sample; ++k) {
      const auto [a, b] = rng.distinct_pair(side.n);
      ++report.checked_cases;
      const IndexSet pencil = side.row(a) & side.row(b);
      const auto members = pencil.to_vector();
      if (members.size() < 2) continue;  // no mutually incident opposite pair
      std::uint32_t ai = rng.pick(members.size());
      std::uint32_t bi = rng.pick(members.size());
      while (bi == ai) bi = rng.pick(members.size());
      const IndexSet closure = closure_of(pencil);
      const IndexSet closure_perp = perp_of_closure(closure);
      if (!axiom4_config_holds(side, pencil, closure, closure_perp, members[ai], members[bi])) {
        report.pass = false;
        report.witness = {std::min(a, b), std::max(a, b), std::min(members[ai], members[bi]),
                          std::max(members[ai], members[bi])};
        return report;
      }
    }
    return report;
  }

  for (std::uint32_t a = 0; a < side.n; ++a) {
    for (std::uint32_t b = a + 1; b < side.n; ++b) {
      const IndexSet pencil = side.row(a) & side.row(b);
      if (pencil.count() < 2) continue;
      const IndexSet closure = closure_of(pencil);
      const IndexSet closure_perp = perp_of_closure(closure);
      const auto members = pencil.to_vector();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          ++report.checked_cases;
          if (!axiom4_config_holds(side, pencil, closure, closure_perp, members[i], members[j])) {
            report.pass = false;
            report.witness = {a, b, members[i], members[j]};
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace

std::pair<AxiomReport, AxiomReport> check_axiom1(const IncidenceStructure& s,
                                                 const CheckOptions& opts) {
  ensure_within_bound(s, opts);
  return {check_a1_side(point_side(s), AxiomClause::A1_pt, opts),
          check_a1_side(plane_side(s), AxiomClause::A1_pl, opts)};
}

std::pair<AxiomReport, AxiomReport> check_axiom2(const IncidenceStructure& s,
                                                 const CheckOptions& opts) {
  ensure_within_bound(s, opts);
  return {check_a2_side(point_side(s), AxiomClause::A2_pt, opts),
          check_a2_side(plane_side(s), AxiomClause::A2_pl, opts)};
}

std::pair<AxiomReport, AxiomReport> check_axiom3(const IncidenceStructure& s,
                                                 const CheckOptions& opts) {
  ensure_within_bound(s, opts);
  return {check_a3_side(point_side(s), AxiomClause::A3_pt, opts),
          check_a3_side(plane_side(s), AxiomClause::A3_pl, opts)};
}

AxiomReport check_axiom4(const IncidenceStructure& s, const CheckOptions& opts) {
  ensure_within_bound(s, opts);
  // The configurations are enumerated from the point side; the condition
  // itself is symmetric in the two sorts.
  return check_a4_from(point_side(s), opts);
}

AxiomSuiteReport check_all_axioms(const IncidenceStructure& s, const CheckOptions& opts) {
  AxiomSuiteReport suite;
  auto [a1p, a1l] = check_axiom1(s, opts);
  auto [a2p, a2l] = check_axiom2(s, opts);
  auto [a3p, a3l] = check_axiom3(s, opts);
  AxiomReport a4 = check_axiom4(s, opts);
  suite.reports = {std::move(a1p), std::move(a1l), std::move(a2p), std::move(a2l),
                   std::move(a3p), std::move(a3l), std::move(a4)};
  for (const AxiomReport& r : suite.reports) suite.all_pass = suite.all_pass && r.pass;

  const bool empty = s.point_count() == 0 && s.plane_count() == 0;
  if (empty) {
    suite.note = "degenerate: both sorts empty";
  } else if (!opts.sample && s.point_count() > 0 && s.plane_count() > 0 &&
             suite.reports[2].pass && suite.reports[3].pass && suite.reports[4].pass &&
             suite.reports[5].pass) {
    suite.note = "each of P and Pi has at least three elements";
  }
  return suite;
}

bool check_duality(const IncidenceStructure& s, const CheckOptions& opts) {
  CheckOptions exhaustive = opts;
  exhaustive.sample.reset();
  const AxiomSuiteReport primal = check_all_axioms(s, exhaustive);
  const AxiomSuiteReport dual = check_all_axioms(dualize(s), exhaustive);

  // Transposition sends clause index 2k to 2k+1 and vice versa; A4 (index 6)
  // stays put.
  for (int k = 0; k < 6; k += 2) {
    AxiomReport expected_pt = primal.reports[static_cast<std::size_t>(k) + 1];
    AxiomReport expected_pl = primal.reports[static_cast<std::size_t>(k)];
    expected_pt.clause = dual.reports[static_cast<std::size_t>(k)].clause;
    expected_pl.clause = dual.reports[static_cast<std::size_t>(k) + 1].clause;
    if (dual.reports[static_cast<std::size_t>(k)] != expected_pt) return false;
    if (dual.reports[static_cast<std::size_t>(k) + 1] != expected_pl) return false;
  }
  return dual.reports[6].pass == primal.reports[6].pass;
}

bool replay_axiom_witness(const IncidenceStructure& s, const AxiomReport& report) {
  if (report.pass || report.witness.empty()) return false;
  const auto& w = report.witness;

  const auto point_set = [&](std::initializer_list<std::uint32_t> ids) {
    PointSet set(s.point_count());
    for (std::uint32_t i : ids) set.add(PointId{i});
    return set;
  };
  const auto plane_set = [&](std::initializer_list<std::uint32_t> ids) {
    PlaneSet set(s.plane_count());
    for (std::uint32_t i : ids) set.add(PlaneId{i});
    return set;
  };

  switch (report.clause) {
    case AxiomClause::A1_pt:
      return w.size() == 1 && perp_points(s, point_set({w[0]})).count() == s.plane_count();
    case AxiomClause::A1_pl:
      return w.size() == 1 && perp_planes(s, plane_set({w[0]})).count() == s.point_count();
    case AxiomClause::A2_pt:
      return w.size() == 2 && perp_points(s, point_set({w[0], w[1]})).count() <= 2;
    case AxiomClause::A2_pl:
      return w.size() == 2 && perp_planes(s, plane_set({w[0], w[1]})).count() <= 2;
    case AxiomClause::A3_pt:
      return w.size() == 3 && perp_points(s, point_set({w[0], w[1], w[2]})).empty();
    case AxiomClause::A3_pl:
      return w.size() == 3 && perp_planes(s, plane_set({w[0], w[1], w[2]})).empty();
    case AxiomClause::A4: {
      if (w.size() != 4 || w[0] == w[1] || w[2] == w[3]) return false;
      const PointSet pts = point_set({w[0], w[1]});
      const PlaneSet pls = plane_set({w[2], w[3]});
      if (!mutually_incident(s, pts, pls)) return false;
      const PlaneSet pts_perp = perp_points(s, pts);
      const PointSet pls_perp = perp_planes(s, pls);
      const bool eq1 = pts_perp == perp_points(s, pls_perp);
      const bool eq2 = pls_perp == perp_planes(s, pts_perp);
      return !(eq1 && eq2);
    }
  }
  return false;
}

}  // namespace ppspace
