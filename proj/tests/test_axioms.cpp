#include <doctest.h>

#include <random>

#include "ppspace/axioms.hpp"
#include "ppspace/errors.hpp"
#include "ppspace/io.hpp"
#include "ppspace/pg_models.hpp"
#include "test_support.hpp"

using namespace ppspace;
using namespace ppspace::test;

namespace {

IncidenceStructure flipped_pg2(std::uint32_t point, std::uint32_t plane) {
  const IncidenceStructure s = generate_pg3(2);
  IncidenceBuilder b(15, 15);
  for (std::uint32_t p = 0; p < 15; ++p)
    for (std::uint32_t h = 0; h < 15; ++h) {
      bool value = s.incident(PointId{p}, PlaneId{h});
      if (p == point && h == plane) value = !value;
      if (value) b.set(p, h);
    }
  return b.build();
}

const AxiomReport& find_clause(const AxiomSuiteReport& suite, AxiomClause clause) {
  for (const AxiomReport& r : suite.reports)
    if (r.clause == clause) return r;
  FAIL("clause not present");
  return suite.reports.front();
}

}  // namespace

TEST_CASE("PG(3,2) passes all seven clauses with the expected case counts") {
  const AxiomSuiteReport suite = check_all_axioms(generate_pg3(2));
  CHECK(suite.all_pass);
  REQUIRE(suite.reports.size() == 7);
  CHECK(find_clause(suite, AxiomClause::A1_pt).checked_cases == 15);
  CHECK(find_clause(suite, AxiomClause::A1_pl).checked_cases == 15);
  CHECK(find_clause(suite, AxiomClause::A2_pt).checked_cases == 105);
  CHECK(find_clause(suite, AxiomClause::A2_pl).checked_cases == 105);
  CHECK(find_clause(suite, AxiomClause::A3_pt).checked_cases == 455);
  CHECK(find_clause(suite, AxiomClause::A3_pl).checked_cases == 455);
  CHECK(find_clause(suite, AxiomClause::A4).checked_cases == 315);
  CHECK(suite.note == "each of P and Pi has at least three elements");
}

TEST_CASE("axiom 1 fails when one plane holds every point") {
  IncidenceBuilder b(3, 1);
  for (std::uint32_t p = 0; p < 3; ++p) b.set(p, 0);
  const IncidenceStructure s = b.build();

  const auto [a1_pt, a1_pl] = check_axiom1(s);
  CHECK_FALSE(a1_pt.pass);
  CHECK(a1_pt.witness == std::vector<std::uint32_t>{0});
  CHECK(a1_pt.checked_cases == 1);
  CHECK(replay_axiom_witness(s, a1_pt));
  CHECK_FALSE(a1_pl.pass);
  CHECK(replay_axiom_witness(s, a1_pl));
}

TEST_CASE("axiom 2 fails on a pair with only two common planes") {
  IncidenceBuilder b(3, 3);
  for (std::uint32_t p = 0; p < 3; ++p)
    for (std::uint32_t h = 0; h < 2; ++h) b.set(p, h);
  const IncidenceStructure s = b.build();

  const auto [a2_pt, a2_pl] = check_axiom2(s);
  CHECK_FALSE(a2_pt.pass);
  CHECK(a2_pt.witness == std::vector<std::uint32_t>{0, 1});
  CHECK(replay_axiom_witness(s, a2_pt));
}

TEST_CASE("axiom 3 fails on a cross-bundle triple with no common plane") {
  IncidenceBuilder b(5, 6);
  for (std::uint32_t h : {0u, 1u, 2u})
    for (std::uint32_t p : {0u, 1u, 2u}) b.set(p, h);
  for (std::uint32_t h : {3u, 4u, 5u})
    for (std::uint32_t p : {0u, 3u, 4u}) b.set(p, h);
  const IncidenceStructure s = b.build();

  const auto [a3_pt, a3_pl] = check_axiom3(s);
  CHECK_FALSE(a3_pt.pass);
  // (0,1,2) has common planes, so the least failing triple is (0,1,3).
  CHECK(a3_pt.witness == std::vector<std::uint32_t>{0, 1, 3});
  CHECK(a3_pt.checked_cases == 2);
  CHECK(replay_axiom_witness(s, a3_pt));
  // Every plane of either bundle contains point 0, so the dual clause holds.
  CHECK(a3_pl.pass);
}

TEST_CASE("degenerate quantifier cases are checked when no distinct tuple exists") {
  SUBCASE("single incident point-plane pair") {
    IncidenceBuilder b(1, 1);
    b.set(0, 0);
    const IncidenceStructure s = b.build();
    const AxiomSuiteReport suite = check_all_axioms(s);
    CHECK_FALSE(find_clause(suite, AxiomClause::A1_pt).pass);
    CHECK_FALSE(find_clause(suite, AxiomClause::A2_pt).pass);  // |{A,A}^perp| = 1
    CHECK(find_clause(suite, AxiomClause::A2_pt).witness == std::vector<std::uint32_t>{0, 0});
    CHECK(find_clause(suite, AxiomClause::A3_pt).pass);  // nonempty singleton perp
    CHECK(replay_axiom_witness(s, find_clause(suite, AxiomClause::A2_pt)));
  }
  SUBCASE("single non-incident pair") {
    const IncidenceStructure s = IncidenceBuilder(1, 1).build();
    const AxiomSuiteReport suite = check_all_axioms(s);
    CHECK(find_clause(suite, AxiomClause::A1_pt).pass);
    CHECK_FALSE(find_clause(suite, AxiomClause::A3_pt).pass);
    CHECK(find_clause(suite, AxiomClause::A3_pt).witness ==
          std::vector<std::uint32_t>{0, 0, 0});
    CHECK(replay_axiom_witness(s, find_clause(suite, AxiomClause::A3_pt)));
  }
  SUBCASE("two points fall back to the pair for axiom 3") {
    IncidenceBuilder b(2, 1);
    b.set(0, 0);
    const IncidenceStructure s = b.build();
    const auto [a3_pt, a3_pl] = check_axiom3(s);
    CHECK_FALSE(a3_pt.pass);
    CHECK(a3_pt.witness == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(replay_axiom_witness(s, a3_pt));
  }
}

TEST_CASE("empty structure passes vacuously and is flagged degenerate") {
  const AxiomSuiteReport suite = check_all_axioms(IncidenceBuilder(0, 0).build());
  CHECK(suite.all_pass);
  for (const AxiomReport& r : suite.reports) CHECK(r.checked_cases == 0);
  CHECK(suite.note == "degenerate: both sorts empty");
}

TEST_CASE("single incidence flips of PG(3,2) break an axiom, with replayable witnesses") {
  std::mt19937_64 gen(31337);
  for (int round = 0; round < 20; ++round) {
    const std::uint32_t p = static_cast<std::uint32_t>(gen() % 15);
    const std::uint32_t h = static_cast<std::uint32_t>(gen() % 15);
    const IncidenceStructure mutant = flipped_pg2(p, h);
    const AxiomSuiteReport suite = check_all_axioms(mutant);
    CHECK_FALSE(suite.all_pass);
    bool replayed_all = true;
    for (const AxiomReport& r : suite.reports)
      if (!r.pass) replayed_all = replayed_all && replay_axiom_witness(mutant, r);
    CHECK(replayed_all);

    // Removing an incidence starves a pencil; adding one breaks the closure
    // equalities.
    const bool was_incident = generate_pg3(2).incident(PointId{p}, PlaneId{h});
    if (was_incident)
      CHECK_FALSE(find_clause(suite, AxiomClause::A2_pt).pass);
    else
      CHECK_FALSE(find_clause(suite, AxiomClause::A4).pass);
  }
}

TEST_CASE("duality check holds for models, mutants and random structures") {
  CHECK(check_duality(generate_pg3(2)));
  CHECK(check_duality(generate_pg3(3)));
  CHECK(check_duality(flipped_pg2(0, 0)));
  CHECK(check_duality(flipped_pg2(2, 7)));

  std::mt19937_64 gen(5);
  for (int round = 0; round < 50; ++round)
    CHECK(check_duality(random_structure(gen, 12, 12)));
}

TEST_CASE("exhaustive checks refuse beyond the size bound unless sampling") {
  IncidenceBuilder b(600, 3);
  for (std::uint32_t p = 0; p < 600; ++p) b.set(p, p % 3);
  const IncidenceStructure big = b.build();

  CHECK_THROWS_AS(check_all_axioms(big), SizeBoundError);

  CheckOptions opts;
  opts.size_bound = 1000;
  CHECK_FALSE(check_all_axioms(big, opts).all_pass);

  CheckOptions sampled;
  sampled.sample = 64;
  sampled.sample_seed = 9;
  const AxiomSuiteReport first = check_all_axioms(big, sampled);
  const AxiomSuiteReport second = check_all_axioms(big, sampled);
  CHECK(first.reports == second.reports);

  CheckOptions tight;
  tight.size_bound = 10;
  CHECK_THROWS_AS(check_all_axioms(generate_pg3(2), tight), SizeBoundError);
}

TEST_CASE("report lines render in the stable grammar") {
  const AxiomSuiteReport suite = check_all_axioms(generate_pg3(2));
  CHECK(format_report(find_clause(suite, AxiomClause::A1_pt)) == "A1_pt PASS cases=15");
  CHECK(format_report(find_clause(suite, AxiomClause::A4)) == "A4 PASS cases=315");

  IncidenceBuilder b(3, 3);
  for (std::uint32_t p = 0; p < 3; ++p)
    for (std::uint32_t h = 0; h < 2; ++h) b.set(p, h);
  const auto [a2_pt, a2_pl] = check_axiom2(b.build());
  CHECK(format_report(a2_pt) == "A2_pt FAIL witness=(P0,P1) cases=1");
  // Plane pair (0,1) holds all three points; (0,2) is the least failure.
  CHECK(format_report(a2_pl) == "A2_pl FAIL witness=(pi0,pi2) cases=2");
}
