#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppspace/index_set.hpp"

namespace ppspace {

struct PointTag;
struct PlaneTag;

/// Index of an element of one sort. The tag keeps point and plane indices
/// from mixing silently; everything in this engine is symmetric under the
/// point/plane interchange, which is exactly why the compiler should track
/// which side an index lives on.
template <typename Tag>
struct ElemId {
  std::uint32_t index = 0;

  friend bool operator==(ElemId, ElemId) = default;
  friend bool operator<(ElemId a, ElemId b) { return a.index < b.index; }
};

using PointId = ElemId<PointTag>;
using PlaneId = ElemId<PlaneTag>;

/// Finite subset of one sort, as a dense bit-set over [0, universe).
template <typename Tag>
struct ElemSet {
  IndexSet bits;

  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : bits(universe) {}
  ElemSet(std::size_t universe, std::initializer_list<std::uint32_t> members)
      : bits(universe) {
    for (std::uint32_t i : members) bits.set(i);
  }
  explicit ElemSet(IndexSet b) : bits(std::move(b)) {}

  static ElemSet full(std::size_t universe) { return ElemSet(IndexSet::full_set(universe)); }

  std::size_t universe() const { return bits.universe(); }
  std::size_t count() const { return bits.count(); }
  bool empty() const { return bits.empty(); }
  bool contains(ElemId<Tag> e) const { return bits.test(e.index); }
  void add(ElemId<Tag> e) { bits.set(e.index); }
  bool subset_of(const ElemSet& other) const { return other.bits.contains_all(bits); }

  std::vector<ElemId<Tag>> members() const {
    std::vector<ElemId<Tag>> out;
    out.reserve(count());
    bits.for_each([&](std::uint32_t i) { out.push_back(ElemId<Tag>{i}); });
    return out;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;
};

using PointSet = ElemSet<PointTag>;
using PlaneSet = ElemSet<PlaneTag>;

/// Finite incidence relation between indexed points and indexed planes,
/// stored in both orientations so that either side can be queried as a set.
/// Immutable after construction; all checkers are pure functions over it,
/// so instances may be shared freely across threads.
class IncidenceStructure {
public:
  std::size_t point_count() const { return n_points_; }
  std::size_t plane_count() const { return n_planes_; }

  /// Range-checked incidence query.
  bool incident(PointId p, PlaneId h) const {
    if (p.index >= n_points_) throw std::out_of_range("point index out of range");
    if (h.index >= n_planes_) throw std::out_of_range("plane index out of range");
    return rows_[p.index].test(h.index);
  }

  /// All planes through the given point (unchecked index).
  const IndexSet& planes_through(std::uint32_t point) const { return rows_[point]; }

  /// All points in the given plane (unchecked index).
  const IndexSet& points_in(std::uint32_t plane) const { return cols_[plane]; }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

private:
  friend class IncidenceBuilder;
  friend IncidenceStructure dualize(const IncidenceStructure& s);

  IncidenceStructure(std::size_t n_points, std::size_t n_planes,
                     std::vector<IndexSet> rows, std::vector<IndexSet> cols)
      : n_points_(n_points), n_planes_(n_planes),
        rows_(std::move(rows)), cols_(std::move(cols)) {}

  std::size_t n_points_ = 0;
  std::size_t n_planes_ = 0;
  std::vector<IndexSet> rows_;  // per point: planes through it
  std::vector<IndexSet> cols_;  // per plane: points in it
};

/// Accumulates incidences and derives the column view once, so a finished
/// IncidenceStructure is consistent in both orientations by construction.
class IncidenceBuilder {
public:
  IncidenceBuilder(std::size_t n_points, std::size_t n_planes);

  void set(std::uint32_t point, std::uint32_t plane, bool value = true);

  IncidenceStructure build() const;

private:
  std::size_t n_points_;
  std::size_t n_planes_;
  std::vector<IndexSet> rows_;
};

/// P is incident with pi. Symmetric in phrasing: the relation has no
/// direction, only two sorts.
bool incident(const IncidenceStructure& s, PointId p, PlaneId h);

/// All planes incident with every member of S. perp of the empty set is the
/// full plane set (vacuous universal quantifier).
PlaneSet perp_points(const IncidenceStructure& s, const PointSet& S);

/// All points incident with every member of Sigma; dual of perp_points.
PointSet perp_planes(const IncidenceStructure& s, const PlaneSet& Sigma);

/// Every member of S incident with every member of Sigma. Equivalent to
/// S ⊆ perp_planes(Sigma) and to Sigma ⊆ perp_points(S).
bool mutually_incident(const IncidenceStructure& s, const PointSet& S, const PlaneSet& Sigma);

/// The transposed structure: points become planes and vice versa. An
/// involution: dualize(dualize(s)) == s.
IncidenceStructure dualize(const IncidenceStructure& s);

}  // namespace ppspace
