#pragma once

// Global sections of i*O on a closed subspace Y: germs of holomorphic
// functions along Y, written as series in the coordinates of one chart.
//
// A monomial r^v in reference chart R reads c^(M^T v) in a chart C, where M
// is the transition C -> R. It is a germ along Y iff every such exponent
// vector is nonnegative in every chart meeting Y.

#include <string>
#include <vector>

#include "cohomc/cohomology_group.hpp"
#include "cohomc/lattice_support.hpp"
#include "cohomc/space_atlas.hpp"

namespace cohomc {

struct SectionSpace {
  CohomologyGroup value;
};

inline void to_json(json& j, const SectionSpace& s) { j = s.value; }

/// Germs at a point of a d-dimensional space: all of the nonnegative
/// orthant, or just the constants when d = 0.
inline SectionSpace point_germs(std::size_t ambient_dim, std::string reference_chart = {}) {
  if (ambient_dim == 0) return {CohomologyGroup::finite(1)};
  return {CohomologyGroup::series(ExponentSupport::orthant(ambient_dim).with_note("germ at the point in local coordinates"),
                                  std::move(reference_chart))};
}

/// Exponent constraints on a monomial in `map.target` coordinates that make
/// it holomorphic in the `map.source` chart: column j of M gives sum_i M[i][j] v_i >= 0.
inline std::vector<LinearConstraint> holomorphy_constraints(const MonomialMap& map) {
  const auto& m = map.matrix;
  if (!m.square()) throw InvalidArgument("holomorphy constraints need a square exponent matrix");
  const auto mt = m.transpose();
  std::vector<LinearConstraint> out;
  for (std::size_t j = 0; j < mt.rows(); ++j) out.emplace_back(mt.row(j), 0);
  return out;
}

namespace detail {

inline void check_equations(const Space& x, const SubspaceComponent& y) {
  for (const auto& c : x.charts)
    if (!y.equations.contains(c.id))
      throw InvalidArgument("subspace " + y.name + " does not list chart " + c.id + " (meeting or disjoint)");
  for (const auto& [chart, eqs] : y.equations) {
    const auto& ch = x.chart(chart);
    if (!eqs) continue;
    for (const auto& coord : *eqs)
      if (std::find(ch.coordinates.begin(), ch.coordinates.end(), coord) == ch.coordinates.end())
        throw InvalidArgument("chart " + chart + " has no coordinate " + coord);
    const std::size_t expected = y.kind == SubspaceKind::kPoint ? ch.dim() : 1;
    if (eqs->size() != expected)
      throw InvalidArgument("subspace " + y.name + " is outside the supported shape in chart " + chart +
                            " (points vanish on every coordinate, curves on exactly one)");
  }
}

}  // namespace detail

/// Sections on one connected component of a closed subspace.
inline SectionSpace component_sections(const Space& x, const SubspaceComponent& y) {
  detail::check_equations(x, y);
  const auto meeting = y.meeting_charts(x);
  if (meeting.empty()) throw InvalidArgument("subspace " + y.name + " meets no chart of " + x.name);
  const std::size_t d = x.chart(meeting.front()).dim();

  if (y.kind == SubspaceKind::kPoint) {
    const auto& own = meeting.front();
    auto germs = point_germs(d, x.qualified(own));
    if (!y.reference_chart || *y.reference_chart == own || d == 0) return germs;
    // Present the germs in another chart: exponents there are M_{ref->own}^T v.
    const auto m = transition(x, *y.reference_chart, own).matrix.transpose();
    auto moved = transform(germs.value.as_series().support, m);
    return {CohomologyGroup::series(std::move(moved), x.qualified(*y.reference_chart))};
  }

  if (d < 2) throw InvalidArgument("curve " + y.name + " needs an ambient surface");
  const std::string ref = y.reference_chart.value_or(meeting.front());
  if (std::find(meeting.begin(), meeting.end(), ref) == meeting.end())
    throw InvalidArgument("reference chart " + ref + " does not meet " + y.name);

  auto cs = ExponentSupport::orthant(d).constraints();
  for (const auto& c : meeting) {
    if (c == ref) continue;
    auto more = holomorphy_constraints(transition(x, c, ref));
    cs.insert(cs.end(), more.begin(), more.end());
  }
  ExponentSupport support(d, std::move(cs), {}, "converges in a neighborhood of " + y.name);
  if (is_origin_only(support)) return {CohomologyGroup::finite(1)};
  return {CohomologyGroup::series(std::move(support), x.qualified(ref))};
}

/// H^0_c(Y, i*O): the direct sum of the sections on each component.
inline SectionSpace subspace_sections(const Space& x, const ClosedSubspace& y) {
  if (y.ambient != x.name) throw InvalidArgument("subspace " + y.name + " is not registered on " + x.name);
  std::vector<CohomologyGroup> parts;
  for (const auto& c : y.components) parts.push_back(component_sections(x, c).value);
  return {CohomologyGroup::direct_sum(parts)};
}

}  // namespace cohomc
