#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ppspace/incidence.hpp"
#include "test_support.hpp"

using namespace ppspace;
using namespace ppspace::test;

TEST_CASE("incidence queries follow the canonical PG(3,2) encoding") {
  const IncidenceStructure s = build_pg2_by_rule();
  REQUIRE(s.point_count() == 15);
  REQUIRE(s.plane_count() == 15);

  // P1 = 0001 lies in pi2 = 0010; P3 = 0011 does not lie in pi1 = 0001.
  CHECK(incident(s, PointId{enc(1)}, PlaneId{enc(2)}));
  CHECK_FALSE(incident(s, PointId{enc(3)}, PlaneId{enc(1)}));

  // Full cross-check of both query orientations against the defining rule.
  for (std::uint32_t p = 0; p < 15; ++p)
    for (std::uint32_t h = 0; h < 15; ++h) {
      CHECK(s.incident(PointId{p}, PlaneId{h}) == pg2_incident_encoded(p + 1, h + 1));
      CHECK(s.planes_through(p).test(h) == s.points_in(h).test(p));
    }

  CHECK_THROWS_AS(s.incident(PointId{15}, PlaneId{0}), std::out_of_range);
  CHECK_THROWS_AS(s.incident(PointId{0}, PlaneId{15}), std::out_of_range);
}

TEST_CASE("perp_points matches the brute-force oracle on PG(3,2)") {
  const IncidenceStructure s = build_pg2_by_rule();

  const PlaneSet perp12 = perp_points(s, make_points(s, {1, 2}));
  CHECK(perp12 == make_planes(s, {4, 8, 12}));
  CHECK(perp12.bits.to_vector() == naive_perp_points(s, {enc(1), enc(2)}));

  const PlaneSet perp124 = perp_points(s, make_points(s, {1, 2, 4}));
  CHECK(perp124 == make_planes(s, {8}));
  CHECK(perp124.bits.to_vector() == naive_perp_points(s, {enc(1), enc(2), enc(4)}));

  CHECK(perp_points(s, PointSet(s.point_count())) == PlaneSet::full(s.plane_count()));
}

TEST_CASE("perp_planes matches the brute-force oracle on PG(3,2)") {
  const IncidenceStructure s = build_pg2_by_rule();

  const PointSet perp = perp_planes(s, make_planes(s, {4, 8, 12}));
  CHECK(perp == make_points(s, {1, 2, 3}));
  CHECK(perp.bits.to_vector() == naive_perp_planes(s, {enc(4), enc(8), enc(12)}));

  const PointSet perp8 = perp_planes(s, make_planes(s, {8}));
  CHECK(perp8 == make_points(s, {1, 2, 3, 4, 5, 6, 7}));

  CHECK(perp_planes(s, PlaneSet(s.plane_count())) == PointSet::full(s.point_count()));
}

TEST_CASE("mutually_incident agrees with its two subset characterizations") {
  const IncidenceStructure s = build_pg2_by_rule();

  CHECK(mutually_incident(s, make_points(s, {1, 2}), make_planes(s, {4, 8})));
  CHECK_FALSE(mutually_incident(s, make_points(s, {1, 3}), make_planes(s, {1})));
  CHECK(mutually_incident(s, PointSet(s.point_count()), make_planes(s, {1, 2, 3})));

  std::mt19937_64 gen(2024);
  for (int round = 0; round < 200; ++round) {
    const PointSet S = random_point_subset(gen, s);
    const PlaneSet Sigma = random_plane_subset(gen, s);
    const bool direct = mutually_incident(s, S, Sigma);
    CHECK(direct == S.subset_of(perp_planes(s, Sigma)));
    CHECK(direct == Sigma.subset_of(perp_points(s, S)));
  }
}

TEST_CASE("dualize transposes, is an involution, and transports perps") {
  std::mt19937_64 gen(7);

  SUBCASE("shape swap") {
    IncidenceBuilder b(2, 5);
    b.set(0, 3);
    b.set(1, 4);
    const IncidenceStructure s = b.build();
    const IncidenceStructure d = dualize(s);
    CHECK(d.point_count() == 5);
    CHECK(d.plane_count() == 2);
    CHECK(incident(d, PointId{3}, PlaneId{0}));
    CHECK(incident(d, PointId{4}, PlaneId{1}));
    CHECK_FALSE(incident(d, PointId{0}, PlaneId{0}));
  }

  SUBCASE("involution and perp transport on random structures") {
    for (int round = 0; round < 50; ++round) {
      const IncidenceStructure s = random_structure(gen, 12, 12);
      const IncidenceStructure d = dualize(s);
      CHECK(dualize(d) == s);

      const PointSet S = random_point_subset(gen, s);
      // A point set of s is a plane set of dualize(s).
      const PlaneSet transported(S.bits);
      CHECK(perp_points(s, S).bits == perp_planes(d, transported).bits);
    }
  }
}

TEST_CASE("the perp pair is a Galois connection") {
  std::mt19937_64 gen(11);
  std::vector<IncidenceStructure> models;
  models.push_back(build_pg2_by_rule());
  for (int i = 0; i < 6; ++i) models.push_back(random_structure(gen, 14, 14));

  for (const IncidenceStructure& s : models) {
    for (int round = 0; round < 100; ++round) {
      PointSet s2 = random_point_subset(gen, s);
      PointSet s1(s.point_count());
      s2.bits.for_each([&](std::uint32_t p) {
        if (gen() % 2 == 0) s1.add(PointId{p});
      });

      // Antitonicity.
      CHECK(perp_points(s, s2).subset_of(perp_points(s, s1)));

      // Extensivity.
      CHECK(s1.subset_of(perp_planes(s, perp_points(s, s1))));
      const PlaneSet sigma = random_plane_subset(gen, s);
      CHECK(sigma.subset_of(perp_points(s, perp_planes(s, sigma))));

      // Triple-perp collapse.
      CHECK(perp_points(s, perp_planes(s, perp_points(s, s1))) == perp_points(s, s1));

      // Adjunction: the three statements agree.
      const PointSet S = random_point_subset(gen, s);
      const bool a = S.subset_of(perp_planes(s, sigma));
      const bool b = mutually_incident(s, S, sigma);
      const bool c = sigma.subset_of(perp_points(s, S));
      CHECK(a == b);
      CHECK(b == c);
    }
  }
}

TEST_CASE("set arguments must be sized for the structure") {
  const IncidenceStructure s = build_pg2_by_rule();
  CHECK_THROWS_AS(perp_points(s, PointSet(14)), std::invalid_argument);
  CHECK_THROWS_AS(perp_planes(s, PlaneSet(16)), std::invalid_argument);
}
