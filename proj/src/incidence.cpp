#include "ppspace/incidence.hpp"

#include <stdexcept>

namespace ppspace {

IncidenceBuilder::IncidenceBuilder(std::size_t n_points, std::size_t n_planes)
    : n_points_(n_points), n_planes_(n_planes),
      rows_(n_points, IndexSet(n_planes)) {}

void IncidenceBuilder::set(std::uint32_t point, std::uint32_t plane, bool value) {
  if (point >= n_points_) throw std::out_of_range("point index out of range");
  if (plane >= n_planes_) throw std::out_of_range("plane index out of range");
  if (value)
    rows_[point].set(plane);
  else
    rows_[point].reset(plane);
}

IncidenceStructure IncidenceBuilder::build() const {
  std::vector<IndexSet> cols(n_planes_, IndexSet(n_points_));
  for (std::uint32_t p = 0; p < n_points_; ++p)
    rows_[p].for_each([&](std::uint32_t h) { cols[h].set(p); });
  return IncidenceStructure(n_points_, n_planes_, rows_, std::move(cols));
}

bool incident(const IncidenceStructure& s, PointId p, PlaneId h) {
  return s.incident(p, h);
}

namespace {

void require_universe(std::size_t got, std::size_t want, const char* what) {
  if (got != want) throw std::invalid_argument(std::string(what) + " has wrong universe size");
}

}  // namespace

PlaneSet perp_points(const IncidenceStructure& s, const PointSet& S) {
  require_universe(S.universe(), s.point_count(), "point set");
  IndexSet acc = IndexSet::full_set(s.plane_count());
  S.bits.for_each([&](std::uint32_t p) { acc.intersect_with(s.planes_through(p)); });
  return PlaneSet(std::move(acc));
}

PointSet perp_planes(const IncidenceStructure& s, const PlaneSet& Sigma) {
  require_universe(Sigma.universe(), s.plane_count(), "plane set");
  IndexSet acc = IndexSet::full_set(s.point_count());
  Sigma.bits.for_each([&](std::uint32_t h) { acc.intersect_with(s.points_in(h)); });
  return PointSet(std::move(acc));
}

bool mutually_incident(const IncidenceStructure& s, const PointSet& S, const PlaneSet& Sigma) {
  require_universe(S.universe(), s.point_count(), "point set");
  require_universe(Sigma.universe(), s.plane_count(), "plane set");
  bool ok = true;
  S.bits.for_each([&](std::uint32_t p) {
    if (ok && !s.planes_through(p).contains_all(Sigma.bits)) ok = false;
  });
  return ok;
}

IncidenceStructure dualize(const IncidenceStructure& s) {
  return IncidenceStructure(s.n_planes_, s.n_points_, s.cols_, s.rows_);
}

}  // namespace ppspace
