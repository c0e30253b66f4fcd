#include "ppspace/lines.hpp"

#include <stdexcept>
#include <string>

#include "ppspace/errors.hpp"

namespace ppspace {

namespace {

void require_point(const IncidenceStructure& s, PointId p) {
  if (p.index >= s.point_count()) throw std::out_of_range("point index out of range");
}

void require_plane(const IncidenceStructure& s, PlaneId h) {
  if (h.index >= s.plane_count()) throw std::out_of_range("plane index out of range");
}

/// Points incident with every plane of the pencil.
IndexSet points_of_plane_set(const IncidenceStructure& s, const IndexSet& planes) {
  IndexSet acc = IndexSet::full_set(s.point_count());
  planes.for_each([&](std::uint32_t h) { acc.intersect_with(s.points_in(h)); });
  return acc;
}

/// Planes incident with every point of the pencil.
IndexSet planes_of_point_set(const IncidenceStructure& s, const IndexSet& points) {
  IndexSet acc = IndexSet::full_set(s.plane_count());
  points.for_each([&](std::uint32_t p) { acc.intersect_with(s.planes_through(p)); });
  return acc;
}

std::pair<std::uint32_t, std::uint32_t> least_two(const IndexSet& set) {
  std::uint32_t first = 0, second = 0;
  int seen = 0;
  set.for_each([&](std::uint32_t i) {
    if (seen == 0) first = i;
    if (seen == 1) second = i;
    ++seen;
  });
  if (seen >= 2) return {first, second};
  return {0, 0};
}

Line make_line(const IncidenceStructure& s, std::uint32_t a, std::uint32_t b, bool from_planes) {
  Line line;
  if (from_planes) {
    line.points = s.points_in(a) & s.points_in(b);
    line.planes = planes_of_point_set(s, line.points);
  } else {
    line.planes = s.planes_through(a) & s.planes_through(b);
    line.points = points_of_plane_set(s, line.planes);
  }
  if (auto failed = validate_line(s, line)) throw MalformedLineError(a, b, from_planes, *failed);
  return line;
}

}  // namespace

bool collinear_points(const IncidenceStructure& s, PointId a, PointId b, PointId c) {
  require_point(s, a);
  require_point(s, b);
  require_point(s, c);
  if (a == b) throw std::invalid_argument("collinearity needs two distinct reference points");
  // C in the closure of {A,B}  <=>  every plane through A and B passes through C.
  const IndexSet pencil = s.planes_through(a.index) & s.planes_through(b.index);
  return s.planes_through(c.index).contains_all(pencil);
}

bool collinear_planes(const IncidenceStructure& s, PlaneId a, PlaneId b, PlaneId c) {
  require_plane(s, a);
  require_plane(s, b);
  require_plane(s, c);
  if (a == b) throw std::invalid_argument("collinearity needs two distinct reference planes");
  const IndexSet pencil = s.points_in(a.index) & s.points_in(b.index);
  return s.points_in(c.index).contains_all(pencil);
}

std::optional<std::string> validate_line(const IncidenceStructure& s, const Line& line) {
  if (line.points.universe() != s.point_count() || line.planes.universe() != s.plane_count())
    throw std::invalid_argument("line pencils sized for a different structure");
  if (points_of_plane_set(s, line.planes) != line.points)
    return "point pencil is not the perp of the plane pencil";
  if (planes_of_point_set(s, line.points) != line.planes)
    return "plane pencil is not the perp of the point pencil";
  if (line.points.count() < 3) return "point pencil has fewer than 3 members";
  if (line.planes.count() < 3) return "plane pencil has fewer than 3 members";
  return std::nullopt;
}

Line line_through_points(const IncidenceStructure& s, PointId a, PointId b) {
  require_point(s, a);
  require_point(s, b);
  if (a == b) throw std::invalid_argument("a line needs two distinct points");
  return make_line(s, a.index, b.index, /*from_planes=*/false);
}

Line line_through_planes(const IncidenceStructure& s, PlaneId a, PlaneId b) {
  require_plane(s, a);
  require_plane(s, b);
  if (a == b) throw std::invalid_argument("a line needs two distinct planes");
  return make_line(s, a.index, b.index, /*from_planes=*/true);
}

MeetResult lines_meet(const IncidenceStructure& s, const Line& a, const Line& b) {
  for (const Line* line : {&a, &b}) {
    if (auto failed = validate_line(s, *line)) {
      const auto [p, q] = least_two(line->points);
      throw MalformedLineError(p, q, false, *failed);
    }
  }

  MeetResult result;
  if (a.points == b.points) {
    result.kind = MeetResult::Kind::equal;
    return result;
  }

  const IndexSet shared_points = a.points & b.points;
  const IndexSet shared_planes = a.planes & b.planes;
  const std::size_t np = shared_points.count();
  const std::size_t nh = shared_planes.count();

  if (np == 0 && nh == 0) {
    result.kind = MeetResult::Kind::disjoint;
    return result;
  }
  if (np == 1 && nh == 1) {
    result.kind = MeetResult::Kind::meet;
    result.shared_point = PointId{static_cast<std::uint32_t>(shared_points.first())};
    result.shared_plane = PlaneId{static_cast<std::uint32_t>(shared_planes.first())};
    return result;
  }
  throw StructureInconsistencyError(
      "distinct lines share " + std::to_string(np) + " point(s) but " + std::to_string(nh) +
      " plane(s); the structure violates the meet property");
}

LineTable LineTable::build(const IncidenceStructure& s) {
  LineTable table;
  table.n_points_ = s.point_count();
  table.n_planes_ = s.plane_count();
  table.point_pair_line_.assign(table.n_points_ * table.n_points_, -1);
  table.plane_pair_line_.assign(table.n_planes_ * table.n_planes_, -1);

  const std::uint32_t n = static_cast<std::uint32_t>(table.n_points_);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      Line line = line_through_points(s, PointId{a}, PointId{b});
      std::int32_t id;
      auto it = table.by_point_pencil_.find(line.points);
      if (it == table.by_point_pencil_.end()) {
        id = static_cast<std::int32_t>(table.lines_.size());
        table.by_point_pencil_.emplace(line.points, id);
        table.lines_.push_back(std::move(line));
        table.defining_pairs_.emplace_back(a, b);
      } else {
        id = it->second;
      }
      table.point_pair_line_[a * n + b] = id;
      table.point_pair_line_[b * n + a] = id;
    }
  }

  const std::size_t m = table.n_planes_;
  for (std::size_t id = 0; id < table.lines_.size(); ++id) {
    const auto members = table.lines_[id].planes.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        std::int32_t& fwd = table.plane_pair_line_[members[i] * m + members[j]];
        if (fwd == -1) {
          fwd = static_cast<std::int32_t>(id);
          table.plane_pair_line_[members[j] * m + members[i]] = static_cast<std::int32_t>(id);
        }
      }
    }
  }
  return table;
}

std::int32_t LineTable::find_by_point_pencil(const IndexSet& pencil) const {
  auto it = by_point_pencil_.find(pencil);
  return it == by_point_pencil_.end() ? -1 : it->second;
}

std::vector<Line> all_lines(const IncidenceStructure& s) { return LineTable::build(s).lines(); }

}  // namespace ppspace
