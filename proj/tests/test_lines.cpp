#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "ppspace/errors.hpp"
#include "ppspace/lines.hpp"
#include "ppspace/pg_models.hpp"
#include "test_support.hpp"

using namespace ppspace;
using namespace ppspace::test;

namespace {

IndexSet points_of(const IncidenceStructure& s, std::initializer_list<std::uint32_t> encoded) {
  IndexSet set(s.point_count());
  for (std::uint32_t e : encoded) set.set(enc(e));
  return set;
}

IndexSet planes_of(const IncidenceStructure& s, std::initializer_list<std::uint32_t> encoded) {
  IndexSet set(s.plane_count());
  for (std::uint32_t e : encoded) set.set(enc(e));
  return set;
}

/// PG(3,2) with points relabelled, to exercise duality on a structure whose
/// matrix is not literally symmetric.
IncidenceStructure permuted_pg2() {
  const IncidenceStructure s = generate_pg3(2);
  IncidenceBuilder b(15, 15);
  for (std::uint32_t p = 0; p < 15; ++p)
    for (std::uint32_t h = 0; h < 15; ++h)
      if (s.incident(PointId{(p + 4) % 15}, PlaneId{h})) b.set(p, h);
  return b.build();
}

}  // namespace

TEST_CASE("collinearity in PG(3,2) matches the closure of the pair") {
  const IncidenceStructure s = generate_pg3(2);

  CHECK(collinear_points(s, PointId{enc(1)}, PointId{enc(2)}, PointId{enc(3)}));
  CHECK_FALSE(collinear_points(s, PointId{enc(1)}, PointId{enc(2)}, PointId{enc(4)}));
  CHECK(collinear_points(s, PointId{enc(5)}, PointId{enc(9)}, PointId{enc(5)}));  // C == A

  CHECK(collinear_planes(s, PlaneId{enc(4)}, PlaneId{enc(8)}, PlaneId{enc(12)}));
  CHECK_FALSE(collinear_planes(s, PlaneId{enc(4)}, PlaneId{enc(8)}, PlaneId{enc(1)}));
  CHECK(collinear_planes(s, PlaneId{enc(7)}, PlaneId{enc(9)}, PlaneId{enc(9)}));

  CHECK_THROWS_AS(collinear_points(s, PointId{1}, PointId{1}, PointId{2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(collinear_points(s, PointId{1}, PointId{20}, PointId{2}), std::out_of_range);
}

TEST_CASE("line construction from points and from planes agree in PG(3,2)") {
  const IncidenceStructure s = generate_pg3(2);

  const Line expected{points_of(s, {1, 2, 3}), planes_of(s, {4, 8, 12})};
  CHECK(line_through_points(s, PointId{enc(1)}, PointId{enc(2)}) == expected);
  CHECK(line_through_points(s, PointId{enc(2)}, PointId{enc(3)}) == expected);
  CHECK(line_through_planes(s, PlaneId{enc(4)}, PlaneId{enc(8)}) == expected);
  CHECK(line_through_planes(s, PlaneId{enc(4)}, PlaneId{enc(12)}) == expected);

  CHECK_THROWS_AS(line_through_points(s, PointId{3}, PointId{3}), std::invalid_argument);
  CHECK_THROWS_AS(line_through_planes(s, PlaneId{3}, PlaneId{3}), std::invalid_argument);
}

TEST_CASE("presentation independence: every pair inside a pencil presents the same line") {
  const IncidenceStructure s = generate_pg3(2);
  const LineTable table = LineTable::build(s);
  for (const Line& line : table.lines()) {
    const auto pts = line.points.to_vector();
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        CHECK(line_through_points(s, PointId{pts[i]}, PointId{pts[j]}) == line);
    const auto pls = line.planes.to_vector();
    for (std::size_t i = 0; i < pls.size(); ++i)
      for (std::size_t j = i + 1; j < pls.size(); ++j)
        CHECK(line_through_planes(s, PlaneId{pls[i]}, PlaneId{pls[j]}) == line);
  }
}

TEST_CASE("line census of PG(3,q)") {
  SUBCASE("q = 2: 35 lines, 3 points and 3 planes each, 7 lines per point") {
    const IncidenceStructure s = generate_pg3(2);
    const std::vector<Line> lines = all_lines(s);
    CHECK(lines.size() == 35);
    for (const Line& line : lines) {
      CHECK(line.points.count() == 3);
      CHECK(line.planes.count() == 3);
    }
    for (std::uint32_t p = 0; p < 15; ++p) {
      std::size_t through = 0;
      for (const Line& line : lines) through += line.points.test(p) ? 1 : 0;
      CHECK(through == 7);
    }
  }
  SUBCASE("q = 3: 130 lines, 4 points and 4 planes each") {
    const std::vector<Line> lines = all_lines(generate_pg3(3));
    CHECK(lines.size() == 130);
    for (const Line& line : lines) {
      CHECK(line.points.count() == 4);
      CHECK(line.planes.count() == 4);
    }
  }
}

TEST_CASE("lines_meet classifies equal, meeting and skew pairs") {
  const IncidenceStructure s = generate_pg3(2);
  const Line l12 = line_through_points(s, PointId{enc(1)}, PointId{enc(2)});
  const Line l14 = line_through_points(s, PointId{enc(1)}, PointId{enc(4)});
  const Line l48 = line_through_points(s, PointId{enc(4)}, PointId{enc(8)});

  CHECK(lines_meet(s, l12, l12).kind == MeetResult::Kind::equal);

  const MeetResult meet = lines_meet(s, l12, l14);
  REQUIRE(meet.kind == MeetResult::Kind::meet);
  CHECK(meet.shared_point == PointId{enc(1)});
  CHECK(meet.shared_plane == PlaneId{enc(8)});

  CHECK(lines_meet(s, l12, l48).kind == MeetResult::Kind::disjoint);

  SUBCASE("meet symmetry and incidence counts over all pairs") {
    const std::vector<Line> lines = all_lines(s);
    std::size_t meets = 0, skew = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const MeetResult forward = lines_meet(s, lines[i], lines[j]);
        const MeetResult backward = lines_meet(s, lines[j], lines[i]);
        CHECK(forward.kind == backward.kind);
        if (forward.kind == MeetResult::Kind::meet) {
          ++meets;
          CHECK((lines[i].points & lines[j].points).count() == 1);
          CHECK((lines[i].planes & lines[j].planes).count() == 1);
        } else {
          ++skew;
        }
      }
    // 15 points, 7 lines through each, meeting pairs share exactly one point.
    CHECK(meets == 15 * 21);
    CHECK(skew == 595 - 315);
  }
}

TEST_CASE("line table lookups cover every pair and deduplicate consistently") {
  const IncidenceStructure s = generate_pg3(2);
  const LineTable table = LineTable::build(s);
  CHECK(table.size() == 35);

  for (std::uint32_t a = 0; a < 15; ++a)
    for (std::uint32_t b = 0; b < 15; ++b) {
      if (a == b) continue;
      const std::int32_t id = table.line_of_points(a, b);
      REQUIRE(id >= 0);
      CHECK(table.lines()[static_cast<std::size_t>(id)].points.test(a));
      CHECK(table.lines()[static_cast<std::size_t>(id)].points.test(b));
      CHECK(table.find_by_point_pencil(table.lines()[static_cast<std::size_t>(id)].points) == id);
    }

  const auto [da, db] = table.defining_pair(table.line_of_points(enc(1), enc(2)));
  CHECK(da == enc(1));
  CHECK(db == enc(2));
}

TEST_CASE("duality swaps the two pencils of every line") {
  const IncidenceStructure s = permuted_pg2();
  const IncidenceStructure d = dualize(s);
  const std::vector<Line> primal = all_lines(s);
  const std::vector<Line> dual = all_lines(d);
  REQUIRE(primal.size() == dual.size());
  for (const Line& line : primal) {
    bool found = false;
    for (const Line& candidate : dual)
      found = found || (candidate.points == line.planes && candidate.planes == line.points);
    CHECK(found);
  }
}

TEST_CASE("malformed lines are rejected with the violated invariant") {
  // 2x2 identity: two points on disjoint planes; the pair's plane pencil is
  // empty and its point closure is everything.
  IncidenceBuilder b(2, 2);
  b.set(0, 0);
  b.set(1, 1);
  const IncidenceStructure s = b.build();
  CHECK_THROWS_AS(line_through_points(s, PointId{0}, PointId{1}), MalformedLineError);
  try {
    line_through_points(s, PointId{0}, PointId{1});
  } catch (const MalformedLineError& e) {
    CHECK(e.first_index() == 0);
    CHECK(e.second_index() == 1);
    CHECK_FALSE(e.from_planes());
    CHECK(e.invariant().find("fewer than 3") != std::string::npos);
  }
  CHECK_THROWS_AS(LineTable::build(s), MalformedLineError);
}

TEST_CASE("pencil intersections that disagree raise a structure inconsistency") {
  // Two bundles: planes 0-2 contain exactly {0,1,2}, planes 3-5 exactly
  // {0,3,4}. The lines through (1,2) and (3,4) share point 0 but no plane.
  IncidenceBuilder b(5, 6);
  for (std::uint32_t h : {0u, 1u, 2u})
    for (std::uint32_t p : {0u, 1u, 2u}) b.set(p, h);
  for (std::uint32_t h : {3u, 4u, 5u})
    for (std::uint32_t p : {0u, 3u, 4u}) b.set(p, h);
  const IncidenceStructure s = b.build();

  const Line first = line_through_points(s, PointId{1}, PointId{2});
  const Line second = line_through_points(s, PointId{3}, PointId{4});
  CHECK(first.points.count() == 3);
  CHECK(second.points.count() == 3);
  CHECK_THROWS_AS(lines_meet(s, first, second), StructureInconsistencyError);
}

TEST_CASE("validate_line accepts table lines and rejects tampered ones") {
  const IncidenceStructure s = generate_pg3(2);
  Line line = line_through_points(s, PointId{0}, PointId{1});
  CHECK_FALSE(validate_line(s, line).has_value());

  Line tampered = line;
  tampered.points.set(enc(5));
  CHECK(validate_line(s, tampered).has_value());
}
