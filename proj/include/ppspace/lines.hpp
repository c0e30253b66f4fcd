#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ppspace/incidence.hpp"

namespace ppspace {

/// A line, as the pair of its two pencils: the points collinear with a
/// defining pair and the planes through them. The pencils determine each
/// other under perp; either one identifies the line.
struct Line {
  IndexSet points;  // the point pencil
  IndexSet planes;  // the plane pencil

  friend bool operator==(const Line&, const Line&) = default;
};

/// Outcome of intersecting two lines. kind == meet carries the unique
/// shared point and unique shared plane.
struct MeetResult {
  enum class Kind { equal, disjoint, meet };

  Kind kind = Kind::disjoint;
  std::optional<PointId> shared_point;
  std::optional<PlaneId> shared_plane;
};

/// C lies in the double-perp closure of {A, B}. Throws std::invalid_argument
/// when A == B.
bool collinear_points(const IncidenceStructure& s, PointId a, PointId b, PointId c);

/// Dual: gamma lies in the closure of {alpha, beta}.
bool collinear_planes(const IncidenceStructure& s, PlaneId a, PlaneId b, PlaneId c);

/// The line through two distinct points: point pencil = closure of {A, B},
/// plane pencil = perp of {A, B}. Throws MalformedLineError when the
/// construction violates a Line invariant (possible only in structures that
/// do not satisfy the axioms) and std::invalid_argument when A == B.
Line line_through_points(const IncidenceStructure& s, PointId a, PointId b);

/// Dual presentation of the same notion: the line through two distinct
/// planes.
Line line_through_planes(const IncidenceStructure& s, PlaneId a, PlaneId b);

/// Checks the Line invariants; returns the name of the first violated one,
/// or nothing if the line is well-formed over s.
std::optional<std::string> validate_line(const IncidenceStructure& s, const Line& line);

/// Intersects two well-formed lines. Throws MalformedLineError on malformed
/// input and StructureInconsistencyError when the two pencil intersections
/// disagree (nonempty on one side only, or not singletons) — such a pair
/// witnesses that the structure itself is inconsistent.
MeetResult lines_meet(const IncidenceStructure& s, const Line& a, const Line& b);

/// Every distinct line of the structure, with point-pair and plane-pair
/// lookup tables. Lines are numbered in order of their least defining point
/// pair, so ids are deterministic.
class LineTable {
public:
  /// Builds the table by constructing the line through every distinct point
  /// pair and deduplicating by point pencil. Propagates MalformedLineError
  /// with the first offending pair (pairs scanned in lexicographic order).
  static LineTable build(const IncidenceStructure& s);

  const std::vector<Line>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }

  /// Id of the line through two distinct points, or -1 when a == b.
  std::int32_t line_of_points(std::uint32_t a, std::uint32_t b) const {
    return point_pair_line_[a * n_points_ + b];
  }

  /// Id of a line whose plane pencil contains both planes, or -1 if none.
  std::int32_t line_of_planes(std::uint32_t a, std::uint32_t b) const {
    return plane_pair_line_[a * n_planes_ + b];
  }

  /// Id of the line with exactly this point pencil, or -1 if none.
  std::int32_t find_by_point_pencil(const IndexSet& pencil) const;

  /// The lexicographically least defining point pair of a line.
  std::pair<std::uint32_t, std::uint32_t> defining_pair(std::int32_t id) const {
    return defining_pairs_[static_cast<std::size_t>(id)];
  }

private:
  std::size_t n_points_ = 0;
  std::size_t n_planes_ = 0;
  std::vector<Line> lines_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> defining_pairs_;
  std::vector<std::int32_t> point_pair_line_;
  std::vector<std::int32_t> plane_pair_line_;
  std::map<IndexSet, std::int32_t> by_point_pencil_;
};

/// The set of distinct lines, deduplicated by point pencil.
std::vector<Line> all_lines(const IncidenceStructure& s);

}  // namespace ppspace
