#include "ppspace/theorems.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "ppspace/errors.hpp"

namespace ppspace {

namespace {

using Sort = WitnessElem::Sort;

WitnessElem pt(std::uint32_t i) { return {Sort::point, i}; }
WitnessElem pl(std::uint32_t i) { return {Sort::plane, i}; }
WitnessElem ln(std::uint32_t i) { return {Sort::line, i}; }

IndexSet points_of_plane_set(const IncidenceStructure& s, const IndexSet& planes) {
  IndexSet acc = IndexSet::full_set(s.point_count());
  planes.for_each([&](std::uint32_t h) { acc.intersect_with(s.points_in(h)); });
  return acc;
}

}  // namespace

TheoremReport check_unique_plane(const IncidenceStructure& s) {
  TheoremReport report{"unique_plane"};
  const std::uint32_t n = static_cast<std::uint32_t>(s.point_count());
  const std::uint32_t m = static_cast<std::uint32_t>(s.plane_count());

  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      const IndexSet pair_perp = s.planes_through(a) & s.planes_through(b);
      for (std::uint32_t c = b + 1; c < n; ++c) {
        // c collinear with a,b  <=>  every plane through a,b passes through c.
        if (s.planes_through(c).contains_all(pair_perp)) continue;
        ++report.checked_cases;
        if ((pair_perp & s.planes_through(c)).count() != 1) {
          report.pass = false;
          report.witness = {pt(a), pt(b), pt(c)};
          return report;
        }
      }
    }
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) {
      const IndexSet pair_perp = s.points_in(a) & s.points_in(b);
      for (std::uint32_t c = b + 1; c < m; ++c) {
        if (s.points_in(c).contains_all(pair_perp)) continue;
        ++report.checked_cases;
        if ((pair_perp & s.points_in(c)).count() != 1) {
          report.pass = false;
          report.witness = {pl(a), pl(b), pl(c)};
          return report;
        }
      }
    }
  }
  return report;
}

TheoremReport check_meet(const IncidenceStructure& s, const LineTable& table) {
  (void)s;
  TheoremReport report{"line_meet"};
  const auto& lines = table.lines();
  for (std::uint32_t i = 0; i < lines.size(); ++i) {
    for (std::uint32_t j = i + 1; j < lines.size(); ++j) {
      ++report.checked_cases;
      const std::size_t np = lines[i].points.intersection_count_capped(lines[j].points, 2);
      const std::size_t nh = lines[i].planes.intersection_count_capped(lines[j].planes, 2);
      const bool ok = (np == 0 && nh == 0) || (np == 1 && nh == 1);
      if (!ok) {
        report.pass = false;
        report.witness = {ln(i), ln(j)};
        return report;
      }
    }
  }
  return report;
}

TheoremReport check_proper_pencil(const IncidenceStructure& s, const LineTable& table) {
  TheoremReport report{"proper_pencil"};
  const std::uint32_t m = static_cast<std::uint32_t>(s.plane_count());
  const auto& lines = table.lines();

  // A line through two points of a plane stays strictly inside the plane.
  for (std::uint32_t alpha = 0; alpha < m; ++alpha) {
    const IndexSet& col = s.points_in(alpha);
    const auto members = col.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++report.checked_cases;
        const std::int32_t id = table.line_of_points(members[i], members[j]);
        const IndexSet& closure = lines[static_cast<std::size_t>(id)].points;
        if (!(col.contains_all(closure) && closure != col)) {
          report.pass = false;
          report.witness = {pl(alpha), pt(members[i]), pt(members[j])};
          return report;
        }
      }
    }
  }

  // A line not lying in a plane meets it in exactly one point.
  for (std::uint32_t id = 0; id < lines.size(); ++id) {
    for (std::uint32_t alpha = 0; alpha < m; ++alpha) {
      if (lines[id].planes.test(alpha)) continue;
      ++report.checked_cases;
      if (lines[id].points.intersection_count_capped(s.points_in(alpha), 2) != 1) {
        report.pass = false;
        report.witness = {ln(id), pl(alpha)};
        return report;
      }
    }
  }
  return report;
}

TheoremReport check_vy_characterization(const IncidenceStructure& s, const LineTable& table) {
  TheoremReport report{"vy_plane_cover"};
  const std::uint32_t n = static_cast<std::uint32_t>(s.point_count());
  const auto& lines = table.lines();

  std::vector<std::vector<std::uint32_t>> line_members(lines.size());
  for (std::size_t id = 0; id < lines.size(); ++id) line_members[id] = lines[id].points.to_vector();

  IndexSet cover(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      const std::int32_t id_ab = table.line_of_points(a, b);
      for (std::uint32_t c = b + 1; c < n; ++c) {
        if (lines[static_cast<std::size_t>(id_ab)].points.test(c)) continue;  // collinear
        const IndexSet perp3 =
            s.planes_through(a) & s.planes_through(b) & s.planes_through(c);
        if (perp3.count() != 1) {
          report.pass = false;
          report.witness = {pt(a), pt(b), pt(c)};
          return report;
        }
        const std::uint32_t pi = static_cast<std::uint32_t>(perp3.first());
        const std::array<std::array<std::uint32_t, 3>, 3> labelings{{
            {a, b, c},  // base AB, apex C
            {b, c, a},  // base BC, apex A
            {c, a, b},  // base CA, apex B
        }};
        for (const auto& [y, z, apex] : labelings) {
          ++report.checked_cases;
          cover.clear();
          for (std::uint32_t d : line_members[static_cast<std::size_t>(table.line_of_points(y, z))])
            cover.unite_with(
                lines[static_cast<std::size_t>(table.line_of_points(apex, d))].points);
          if (cover != s.points_in(pi)) {
            report.pass = false;
            report.witness = {pt(y), pt(z), pt(apex)};
            return report;
          }
        }
      }
    }
  }
  return report;
}

std::vector<TheoremReport> check_vy_axioms(const IncidenceStructure& s, const LineTable& table) {
  const std::uint32_t n = static_cast<std::uint32_t>(s.point_count());
  const std::uint32_t m = static_cast<std::uint32_t>(s.plane_count());
  const auto& lines = table.lines();

  TheoremReport a1{"vy_A1"}, a2{"vy_A2"}, a3{"vy_A3"}, e0{"vy_E0"}, e1{"vy_E1"}, e2{"vy_E2"},
      e3{"vy_E3"}, e3p{"vy_E3p"};

  // A1: every distinct point pair lies on a derived line.
  for (std::uint32_t a = 0; a < n && a1.pass; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      ++a1.checked_cases;
      const std::int32_t id = table.line_of_points(a, b);
      if (id < 0 || !lines[static_cast<std::size_t>(id)].points.test(a) ||
          !lines[static_cast<std::size_t>(id)].points.test(b)) {
        a1.pass = false;
        a1.witness = {pt(a), pt(b)};
        break;
      }
    }
  }

  // A2: at most one line on both A and B — every pair inside a line's
  // point pencil presents that same line.
  for (std::uint32_t id = 0; id < lines.size() && a2.pass; ++id) {
    const auto members = lines[id].points.to_vector();
    for (std::size_t i = 0; i < members.size() && a2.pass; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++a2.checked_cases;
        if (table.line_of_points(members[i], members[j]) != static_cast<std::int32_t>(id)) {
          a2.pass = false;
          a2.witness = {ln(id), pt(members[i]), pt(members[j])};
          break;
        }
      }
    }
  }

  // A3: for a non-collinear triple, a line joining distinct points of two
  // sides meets the third side.
  {
    std::vector<std::vector<std::uint32_t>> line_members(lines.size());
    for (std::size_t id = 0; id < lines.size(); ++id)
      line_members[id] = lines[id].points.to_vector();

    for (std::uint32_t a = 0; a < n && a3.pass; ++a) {
      for (std::uint32_t b = a + 1; b < n && a3.pass; ++b) {
        const std::int32_t id_ab = table.line_of_points(a, b);
        for (std::uint32_t c = b + 1; c < n && a3.pass; ++c) {
          if (lines[static_cast<std::size_t>(id_ab)].points.test(c)) continue;
          const std::array<std::array<std::uint32_t, 3>, 3> labelings{{
              {a, b, c},  // target AB, apex C
              {b, c, a},
              {c, a, b},
          }};
          for (const auto& [ta, tb, apex] : labelings) {
            const Line& target = lines[static_cast<std::size_t>(table.line_of_points(ta, tb))];
            const auto& side1 = line_members[static_cast<std::size_t>(table.line_of_points(tb, apex))];
            const auto& side2 = line_members[static_cast<std::size_t>(table.line_of_points(apex, ta))];
            for (std::uint32_t d : side1) {
              for (std::uint32_t e : side2) {
                if (d == e) continue;
                ++a3.checked_cases;
                const Line& joined = lines[static_cast<std::size_t>(table.line_of_points(d, e))];
                if (!joined.points.intersects(target.points) &&
                    !joined.planes.intersects(target.planes)) {
                  a3.pass = false;
                  a3.witness = {pt(ta), pt(tb), pt(apex), pt(d), pt(e)};
                  break;
                }
              }
              if (!a3.pass) break;
            }
            if (!a3.pass) break;
          }
        }
      }
    }
  }

  // E0: at least three points on every line (enforced at construction, but
  // stated as its own verdict).
  for (std::uint32_t id = 0; id < lines.size(); ++id) {
    ++e0.checked_cases;
    if (lines[id].points.count() < 3) {
      e0.pass = false;
      e0.witness = {ln(id)};
      break;
    }
  }

  // E1: there exists at least one line.
  e1.checked_cases = 1;
  if (lines.empty()) e1.pass = false;

  // E2: all points are not on the same line.
  for (std::uint32_t id = 0; id < lines.size(); ++id) {
    ++e2.checked_cases;
    if (lines[id].points.count() == n) {
      e2.pass = false;
      e2.witness = {ln(id)};
      break;
    }
  }

  // E3: all points are not on the same plane.
  for (std::uint32_t alpha = 0; alpha < m; ++alpha) {
    ++e3.checked_cases;
    if (s.points_in(alpha).count() == n) {
      e3.pass = false;
      e3.witness = {pl(alpha)};
      break;
    }
  }

  // E3': any two distinct planes have a line in common.
  for (std::uint32_t alpha = 0; alpha < m && e3p.pass; ++alpha) {
    for (std::uint32_t beta = alpha + 1; beta < m; ++beta) {
      ++e3p.checked_cases;
      const IndexSet common = s.points_in(alpha) & s.points_in(beta);
      if (table.find_by_point_pencil(common) < 0) {
        e3p.pass = false;
        e3p.witness = {pl(alpha), pl(beta)};
        break;
      }
    }
  }

  return {std::move(a1), std::move(a2), std::move(a3), std::move(e0),
          std::move(e1), std::move(e2), std::move(e3), std::move(e3p)};
}

namespace {

/// Deterministic raw draws; mirrors the sampler used by the axiom checks.
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

/// Sampled counterparts of the theorem checks, for structures above the
/// exhaustive bound. Lines are built on demand; a malformed construction
/// fails the report with the offending pair as witness.
struct SampledChecks {
  const IncidenceStructure& s;
  std::uint64_t draws;
  std::uint64_t seed;

  std::optional<Line> points_line(TheoremReport& r, std::uint32_t a, std::uint32_t b) const {
    try {
      return line_through_points(s, PointId{a}, PointId{b});
    } catch (const MalformedLineError&) {
      r.pass = false;
      r.witness = {pt(std::min(a, b)), pt(std::max(a, b))};
      return std::nullopt;
    }
  }

  std::optional<Line> planes_line(TheoremReport& r, std::uint32_t a, std::uint32_t b) const {
    try {
      return line_through_planes(s, PlaneId{a}, PlaneId{b});
    } catch (const MalformedLineError&) {
      r.pass = false;
      r.witness = {pl(std::min(a, b)), pl(std::max(a, b))};
      return std::nullopt;
    }
  }

  bool collinear_raw(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    return s.planes_through(c).contains_all(s.planes_through(a) & s.planes_through(b));
  }

  TheoremReport unique_plane() const {
    TheoremReport r{"unique_plane"};
    Sampler rng(seed);
    const std::size_t n = s.point_count(), m = s.plane_count();
    for (std::uint64_t k = 0; k < draws && n >= 3; ++k) {
      std::uint32_t a = rng.pick(n), b = rng.pick(n), c = rng.pick(n);
      if (a == b || b == c || a == c) continue;
      if (collinear_raw(a, b, c)) continue;
      ++r.checked_cases;
      if ((s.planes_through(a) & s.planes_through(b) & s.planes_through(c)).count() != 1) {
        r.pass = false;
        r.witness = {pt(a), pt(b), pt(c)};
        return r;
      }
    }
    for (std::uint64_t k = 0; k < draws && m >= 3; ++k) {
      std::uint32_t a = rng.pick(m), b = rng.pick(m), c = rng.pick(m);
      if (a == b || b == c || a == c) continue;
      if (s.points_in(c).contains_all(s.points_in(a) & s.points_in(b))) continue;
      ++r.checked_cases;
      if ((s.points_in(a) & s.points_in(b) & s.points_in(c)).count() != 1) {
        r.pass = false;
        r.witness = {pl(a), pl(b), pl(c)};
        return r;
      }
    }
    return r;
  }

  TheoremReport line_meet() const {
    TheoremReport r{"line_meet"};
    Sampler rng(seed);
    const std::size_t n = s.point_count();
    for (std::uint64_t k = 0; k < draws && n >= 2; ++k) {
      const auto [a, b] = rng.distinct_pair(n);
      const auto [c, d] = rng.distinct_pair(n);
      const auto first = points_line(r, a, b);
      if (!first) return r;
      const auto second = points_line(r, c, d);
      if (!second) return r;
      if (first->points == second->points) continue;
      ++r.checked_cases;
      const std::size_t np = first->points.intersection_count_capped(second->points, 2);
      const std::size_t nh = first->planes.intersection_count_capped(second->planes, 2);
      if (!((np == 0 && nh == 0) || (np == 1 && nh == 1))) {
        r.pass = false;
        r.witness = {pt(a), pt(b), pt(c), pt(d)};
        return r;
      }
    }
    return r;
  }

  TheoremReport proper_pencil() const {
    TheoremReport r{"proper_pencil"};
    Sampler rng(seed);
    const std::size_t n = s.point_count(), m = s.plane_count();
    for (std::uint64_t k = 0; k < draws && m >= 1; ++k) {
      const std::uint32_t alpha = rng.pick(m);
      const auto members = s.points_in(alpha).to_vector();
      ++r.checked_cases;
      if (members.size() < 2) continue;
      std::uint32_t i = rng.pick(members.size());
      std::uint32_t j = rng.pick(members.size());
      while (j == i) j = rng.pick(members.size());
      const auto line = points_line(r, members[i], members[j]);
      if (!line) return r;
      if (!(s.points_in(alpha).contains_all(line->points) && line->points != s.points_in(alpha))) {
        r.pass = false;
        r.witness = {pl(alpha), pt(members[i]), pt(members[j])};
        return r;
      }
    }
    for (std::uint64_t k = 0; k < draws && n >= 2 && m >= 1; ++k) {
      const auto [a, b] = rng.distinct_pair(n);
      const auto line = points_line(r, a, b);
      if (!line) return r;
      ++r.checked_cases;
      std::uint32_t alpha = 0;
      bool found = false;
      for (int attempt = 0; attempt < 32; ++attempt) {
        alpha = rng.pick(m);
        if (!line->planes.test(alpha)) {
          found = true;
          break;
        }
      }
      if (!found) continue;
      if (line->points.intersection_count_capped(s.points_in(alpha), 2) != 1) {
        r.pass = false;
        r.witness = {pt(a), pt(b), pl(alpha)};
        return r;
      }
    }
    return r;
  }

  TheoremReport vy_plane_cover() const {
    TheoremReport r{"vy_plane_cover"};
    Sampler rng(seed);
    const std::size_t n = s.point_count();
    for (std::uint64_t k = 0; k < draws && n >= 3; ++k) {
      std::uint32_t a = rng.pick(n), b = rng.pick(n), c = rng.pick(n);
      if (a == b || b == c || a == c || collinear_raw(a, b, c)) continue;
      ++r.checked_cases;
      const IndexSet perp3 = s.planes_through(a) & s.planes_through(b) & s.planes_through(c);
      if (perp3.count() != 1) {
        r.pass = false;
        r.witness = {pt(a), pt(b), pt(c)};
        return r;
      }
      const std::uint32_t pi = static_cast<std::uint32_t>(perp3.first());
      const auto base = points_line(r, a, b);
      if (!base) return r;
      IndexSet cover(n);
      bool bad = false;
      base->points.for_each([&](std::uint32_t d) {
        if (bad) return;
        const auto joined = points_line(r, c, d);
        if (!joined) {
          bad = true;
          return;
        }
        cover.unite_with(joined->points);
      });
      if (bad) return r;
      if (cover != s.points_in(pi)) {
        r.pass = false;
        r.witness = {pt(a), pt(b), pt(c)};
        return r;
      }
    }
    return r;
  }

  std::vector<TheoremReport> vy_axioms() const {
    TheoremReport a1{"vy_A1"}, a2{"vy_A2"}, a3{"vy_A3"}, e0{"vy_E0"}, e1{"vy_E1"}, e2{"vy_E2"},
        e3{"vy_E3"}, e3p{"vy_E3p"};
    const std::size_t n = s.point_count(), m = s.plane_count();

    {
      Sampler rng(seed);
      for (std::uint64_t k = 0; k < draws && n >= 2 && a1.pass; ++k) {
        const auto [a, b] = rng.distinct_pair(n);
        ++a1.checked_cases;
        const auto line = points_line(a1, a, b);
        if (!line) break;
        if (!line->points.test(a) || !line->points.test(b)) {
          a1.pass = false;
          a1.witness = {pt(a), pt(b)};
        }
      }
    }
    {
      Sampler rng(seed);
      for (std::uint64_t k = 0; k < draws && n >= 2 && a2.pass; ++k) {
        const auto [a, b] = rng.distinct_pair(n);
        const auto line = points_line(a2, a, b);
        if (!line) break;
        const auto members = line->points.to_vector();
        std::uint32_t i = rng.pick(members.size());
        std::uint32_t j = rng.pick(members.size());
        while (j == i) j = rng.pick(members.size());
        ++a2.checked_cases;
        const auto other = points_line(a2, members[i], members[j]);
        if (!other) break;
        if (other->points != line->points || other->planes != line->planes) {
          a2.pass = false;
          a2.witness = {pt(a), pt(b), pt(members[i]), pt(members[j])};
        }
      }
    }
    {
      Sampler rng(seed);
      for (std::uint64_t k = 0; k < draws && n >= 3 && a3.pass; ++k) {
        std::uint32_t a = rng.pick(n), b = rng.pick(n), c = rng.pick(n);
        if (a == b || b == c || a == c || collinear_raw(a, b, c)) continue;
        const auto target = points_line(a3, a, b);
        if (!target) break;
        const auto side1 = points_line(a3, b, c);
        if (!side1) break;
        const auto side2 = points_line(a3, c, a);
        if (!side2) break;
        const auto m1 = side1->points.to_vector();
        const auto m2 = side2->points.to_vector();
        std::uint32_t d = m1[rng.pick(m1.size())];
        std::uint32_t e = m2[rng.pick(m2.size())];
        bool distinct = d != e;
        for (int attempt = 0; attempt < 32 && !distinct; ++attempt) {
          e = m2[rng.pick(m2.size())];
          distinct = d != e;
        }
        if (!distinct) continue;
        ++a3.checked_cases;
        const auto joined = points_line(a3, d, e);
        if (!joined) break;
        if (!joined->points.intersects(target->points) &&
            !joined->planes.intersects(target->planes)) {
          a3.pass = false;
          a3.witness = {pt(a), pt(b), pt(c), pt(d), pt(e)};
        }
      }
    }
    {
      Sampler rng(seed);
      for (std::uint64_t k = 0; k < draws && n >= 2 && e0.pass; ++k) {
        const auto [a, b] = rng.distinct_pair(n);
        ++e0.checked_cases;
        const auto line = points_line(e0, a, b);
        if (!line) break;
        if (line->points.count() < 3) {
          e0.pass = false;
          e0.witness = {pt(a), pt(b)};
        }
      }
    }
    {
      e1.checked_cases = 1;
      if (n < 2) {
        e1.pass = false;
      } else {
        const auto line = points_line(e1, 0, 1);
        if (line) e1.pass = true;
      }
    }
    {
      Sampler rng(seed);
      for (std::uint64_t k = 0; k < draws && n >= 2 && e2.pass; ++k) {
        const auto [a, b] = rng.distinct_pair(n);
        ++e2.checked_cases;
        const auto line = points_line(e2, a, b);
        if (!line) break;
        if (line->points.count() == n) {
          e2.pass = false;
          e2.witness = {pt(a), pt(b)};
        }
      }
    }
    {
      Sampler rng(seed);
      for (std::uint64_t k = 0; k < draws && m >= 1 && e3.pass; ++k) {
        const std::uint32_t alpha = rng.pick(m);
        ++e3.checked_cases;
        if (s.points_in(alpha).count() == n) {
          e3.pass = false;
          e3.witness = {pl(alpha)};
        }
      }
    }
    {
      Sampler rng(seed);
      for (std::uint64_t k = 0; k < draws && m >= 2 && e3p.pass; ++k) {
        const auto [alpha, beta] = rng.distinct_pair(m);
        ++e3p.checked_cases;
        const auto line = planes_line(e3p, alpha, beta);
        if (!line) break;
        // Membership in the derived line set: some point pair presents it.
        std::uint32_t first = 0, second = 0;
        int seen = 0;
        line->points.for_each([&](std::uint32_t p) {
          if (seen == 0) first = p;
          if (seen == 1) second = p;
          ++seen;
        });
        const auto presented = points_line(e3p, first, second);
        if (!presented) break;
        if (presented->points != line->points) {
          e3p.pass = false;
          e3p.witness = {pl(alpha), pl(beta)};
        }
      }
    }

    return {std::move(a1), std::move(a2), std::move(a3), std::move(e0),
            std::move(e1), std::move(e2), std::move(e3), std::move(e3p)};
  }
};

TheoremReport synthesized_failure(const std::string& name, const MalformedLineError& e) {
  TheoremReport r{name};
  r.pass = false;
  const Sort sort = e.from_planes() ? Sort::plane : Sort::point;
  r.witness = {{sort, e.first_index()}, {sort, e.second_index()}};
  return r;
}

}  // namespace

TheoremSuite run_theorem_checks(const IncidenceStructure& s, const TheoremRunOptions& opts) {
  TheoremSuite suite;
  suite.axioms = check_all_axioms(s, opts.check);
  if (!suite.axioms.all_pass && !opts.force)
    throw PreconditionError(
        "the structure fails the axioms; theorem reports would not be meaningful "
        "(set force to run them anyway)");

  if (opts.check.sample) {
    const SampledChecks sampled{s, *opts.check.sample, opts.check.sample_seed};
    suite.theorem_reports = {sampled.unique_plane(), sampled.line_meet(),
                             sampled.proper_pencil(), sampled.vy_plane_cover()};
    suite.vy_reports = sampled.vy_axioms();
  } else {
    try {
      const LineTable table = LineTable::build(s);
      suite.theorem_reports = {check_unique_plane(s), check_meet(s, table),
                               check_proper_pencil(s, table),
                               check_vy_characterization(s, table)};
      suite.vy_reports = check_vy_axioms(s, table);
    } catch (const MalformedLineError& e) {
      // No line table exists; every line-dependent verdict fails with the
      // offending pair. unique_plane needs no lines, so it still runs.
      suite.note = std::string("line construction failed: ") + e.what();
      suite.theorem_reports = {check_unique_plane(s), synthesized_failure("line_meet", e),
                               synthesized_failure("proper_pencil", e),
                               synthesized_failure("vy_plane_cover", e)};
      suite.vy_reports = {synthesized_failure("vy_A1", e),  synthesized_failure("vy_A2", e),
                          synthesized_failure("vy_A3", e),  synthesized_failure("vy_E0", e),
                          synthesized_failure("vy_E1", e),  synthesized_failure("vy_E2", e),
                          synthesized_failure("vy_E3", e),  synthesized_failure("vy_E3p", e)};
    }
  }

  for (const TheoremReport& r : suite.theorem_reports)
    suite.theorems_pass = suite.theorems_pass && r.pass;
  for (const TheoremReport& r : suite.vy_reports) suite.vy_pass = suite.vy_pass && r.pass;

  const TheoremReport* e2 = nullptr;
  const TheoremReport* e3 = nullptr;
  for (const TheoremReport& r : suite.vy_reports) {
    if (r.theorem == "vy_E2") e2 = &r;
    if (r.theorem == "vy_E3") e3 = &r;
  }
  if (e2 && e3 && !e2->pass && e3->pass && s.plane_count() > 0)
    suite.e2_failure_implies_e3_failure = false;
  return suite;
}

bool replay_theorem_witness(const IncidenceStructure& s, const LineTable* table,
                            const TheoremReport& report) {
  if (report.pass) return false;
  if (report.theorem == "vy_E1" && report.witness.empty()) return s.point_count() < 2;
  if (report.witness.empty()) return false;
  const auto& w = report.witness;

  try {
  const auto same_sort_pair = [&](Sort sort) {
    return w.size() == 2 && w[0].sort == sort && w[1].sort == sort;
  };

  const auto point_closure = [&](std::uint32_t a, std::uint32_t b) {
    return points_of_plane_set(s, s.planes_through(a) & s.planes_through(b));
  };

  // Malformed-line form: the pair either fails to build a line or builds
  // one that misses its defining elements.
  if (same_sort_pair(Sort::point)) {
    try {
      const Line line = line_through_points(s, PointId{w[0].index}, PointId{w[1].index});
      if (report.theorem == "vy_E0") return line.points.count() < 3;
      if (report.theorem == "vy_E2") return line.points.count() == s.point_count();
      return !(line.points.test(w[0].index) && line.points.test(w[1].index));
    } catch (const MalformedLineError&) {
      return true;
    }
  }
  if (same_sort_pair(Sort::plane) && report.theorem != "vy_E3p") {
    try {
      line_through_planes(s, PlaneId{w[0].index}, PlaneId{w[1].index});
      return false;
    } catch (const MalformedLineError&) {
      return true;
    }
  }

  if (report.theorem == "unique_plane" && w.size() == 3) {
    if (w[0].sort == Sort::point) {
      const IndexSet pair_perp = s.planes_through(w[0].index) & s.planes_through(w[1].index);
      if (s.planes_through(w[2].index).contains_all(pair_perp)) return false;  // collinear
      return (pair_perp & s.planes_through(w[2].index)).count() != 1;
    }
    const IndexSet pair_perp = s.points_in(w[0].index) & s.points_in(w[1].index);
    if (s.points_in(w[2].index).contains_all(pair_perp)) return false;
    return (pair_perp & s.points_in(w[2].index)).count() != 1;
  }

  if (report.theorem == "line_meet" && w.size() == 2 && w[0].sort == Sort::line && table) {
    const Line& x = table->lines()[w[0].index];
    const Line& y = table->lines()[w[1].index];
    const std::size_t np = x.points.intersection_count_capped(y.points, 2);
    const std::size_t nh = x.planes.intersection_count_capped(y.planes, 2);
    return !((np == 0 && nh == 0) || (np == 1 && nh == 1));
  }
  if (report.theorem == "line_meet" && w.size() == 4 && w[0].sort == Sort::point) {
    // Sampled form: two defining point pairs.
    const Line x = line_through_points(s, PointId{w[0].index}, PointId{w[1].index});
    const Line y = line_through_points(s, PointId{w[2].index}, PointId{w[3].index});
    if (x.points == y.points) return false;
    const std::size_t np = x.points.intersection_count_capped(y.points, 2);
    const std::size_t nh = x.planes.intersection_count_capped(y.planes, 2);
    return !((np == 0 && nh == 0) || (np == 1 && nh == 1));
  }

  if (report.theorem == "proper_pencil") {
    if (w.size() == 3 && w[0].sort == Sort::plane) {
      const IndexSet& col = s.points_in(w[0].index);
      const IndexSet closure = point_closure(w[1].index, w[2].index);
      return !(col.contains_all(closure) && closure != col);
    }
    if (w.size() == 2 && w[0].sort == Sort::line && table) {
      const Line& line = table->lines()[w[0].index];
      if (line.planes.test(w[1].index)) return false;
      return line.points.intersection_count_capped(s.points_in(w[1].index), 2) != 1;
    }
    if (w.size() == 3 && w[0].sort == Sort::point) {
      // Sampled form: (A, B, alpha).
      const Line line = line_through_points(s, PointId{w[0].index}, PointId{w[1].index});
      if (line.planes.test(w[2].index)) return false;
      return line.points.intersection_count_capped(s.points_in(w[2].index), 2) != 1;
    }
  }

  if (report.theorem == "vy_plane_cover" && w.size() == 3) {
    const std::uint32_t y = w[0].index, z = w[1].index, apex = w[2].index;
    const IndexSet perp3 =
        s.planes_through(y) & s.planes_through(z) & s.planes_through(apex);
    const IndexSet pair_perp = s.planes_through(y) & s.planes_through(z);
    if (s.planes_through(apex).contains_all(pair_perp)) return false;  // collinear
    if (perp3.count() != 1) return true;
    const std::uint32_t pi = static_cast<std::uint32_t>(perp3.first());
    IndexSet cover(s.point_count());
    point_closure(y, z).for_each(
        [&](std::uint32_t d) { cover.unite_with(point_closure(apex, d)); });
    return cover != s.points_in(pi);
  }

  if (report.theorem == "vy_A2" && w.size() == 3 && w[0].sort == Sort::line && table) {
    const Line& line = table->lines()[w[0].index];
    const IndexSet closure = point_closure(w[1].index, w[2].index);
    return closure != line.points;
  }
  if (report.theorem == "vy_A2" && w.size() == 4) {
    return point_closure(w[0].index, w[1].index) != point_closure(w[2].index, w[3].index);
  }

  if (report.theorem == "vy_A3" && w.size() == 5) {
    const std::uint32_t a = w[0].index, b = w[1].index, c = w[2].index;
    const std::uint32_t d = w[3].index, e = w[4].index;
    if (d == e) return false;
    if (!point_closure(b, c).test(d) || !point_closure(c, a).test(e)) return false;
    const IndexSet target_pts = point_closure(a, b);
    const IndexSet target_pls = s.planes_through(a) & s.planes_through(b);
    const IndexSet joined_pts = point_closure(d, e);
    const IndexSet joined_pls = s.planes_through(d) & s.planes_through(e);
    return !joined_pts.intersects(target_pts) && !joined_pls.intersects(target_pls);
  }

  if (report.theorem == "vy_E0" && w.size() == 1 && w[0].sort == Sort::line && table)
    return table->lines()[w[0].index].points.count() < 3;
  if (report.theorem == "vy_E2" && w.size() == 1 && w[0].sort == Sort::line && table)
    return table->lines()[w[0].index].points.count() == s.point_count();
  if (report.theorem == "vy_E3" && w.size() == 1 && w[0].sort == Sort::plane)
    return s.points_in(w[0].index).count() == s.point_count();

  if (report.theorem == "vy_E3p" && w.size() == 2 && w[0].sort == Sort::plane) {
    const IndexSet common = s.points_in(w[0].index) & s.points_in(w[1].index);
    const auto members = common.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (point_closure(members[i], members[j]) == common) return false;
    return true;
  }

  return false;
  } catch (const MalformedLineError&) {
    // A line needed by the replay cannot even be built: violation confirmed.
    return true;
  }
}

}  // namespace ppspace
