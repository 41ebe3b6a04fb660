#pragma once

// Spaces as atlases of coordinate charts glued by Laurent-monomial maps.
//
// A transition t = s^M means target coordinate t_i = prod_j s_j^M[i][j].
// Composition follows exponent matrices: M_ac = M_bc * M_ab.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cohomc/cohomology_group.hpp"
#include "cohomc/int_matrix.hpp"

namespace cohomc {

struct Chart {
  std::string id;
  std::vector<std::string> coordinates;

  std::size_t dim() const noexcept { return coordinates.size(); }
};

struct MonomialMap {
  std::string source;
  std::string target;
  IntMatrix matrix;

  MonomialMap inverse() const { return {target, source, matrix.unimodular_inverse()}; }
};

enum class Family { kPoint, kAffine, kCStar, kC2Minus0, kP1, kP2, kLineBundle, kHirzebruch, kProduct, kCustom };

struct Space {
  std::string name;
  Family family = Family::kCustom;
  std::map<std::string, std::int64_t> parameters;
  std::vector<Chart> charts;
  std::vector<MonomialMap> transitions;  // closed under inversion
  bool compact = false;
  std::vector<Space> factors;  // Product only

  int complex_dimension() const { return charts.empty() ? 0 : static_cast<int>(charts.front().dim()); }

  std::optional<std::size_t> chart_index(const std::string& id) const {
    for (std::size_t i = 0; i < charts.size(); ++i)
      if (charts[i].id == id) return i;
    return std::nullopt;
  }

  const Chart& chart(const std::string& id) const {
    auto i = chart_index(id);
    if (!i) throw InvalidArgument("space " + name + " has no chart '" + id + "'");
    return charts[*i];
  }

  /// "<space>.<chart>", the label carried by Series groups.
  std::string qualified(const std::string& chart_id) const { return name + "." + chart_id; }

  std::int64_t parameter(const std::string& key) const {
    auto it = parameters.find(key);
    if (it == parameters.end()) throw InvalidArgument("space " + name + " has no parameter " + key);
    return it->second;
  }
};

enum class SubspaceKind { kPoint, kCurve };

/// One connected piece of a closed subspace. `equations` lists, for every
/// chart of the ambient space, the coordinates that vanish on the piece, or
/// nullopt when the chart misses it.
struct SubspaceComponent {
  std::string name;
  SubspaceKind kind = SubspaceKind::kPoint;
  std::map<std::string, std::optional<std::vector<std::string>>> equations;
  /// Chart whose coordinates the section exponents are written in. For a
  /// curve it must meet the curve; defaults to the lowest-indexed one that does.
  std::optional<std::string> reference_chart;

  std::vector<std::string> meeting_charts(const Space& ambient) const {
    std::vector<std::string> out;
    for (const auto& c : ambient.charts)
      if (auto it = equations.find(c.id); it != equations.end() && it->second) out.push_back(c.id);
    return out;
  }
};

struct ClosedSubspace {
  std::string name;
  std::string ambient;
  std::vector<SubspaceComponent> components;
  Space intrinsic;
};

/// X = (X \ Y) u Y with the complement identified by a registered name.
struct Decomposition {
  Space total;
  ClosedSubspace closed;
  Space complement;
  std::vector<Note> notes;

  std::string label() const { return total.name + " \\ " + closed.name; }
};

namespace detail {

inline void add_transition(Space& s, const std::string& from, const std::string& to, IntMatrix m) {
  MonomialMap forward{from, to, std::move(m)};
  auto backward = forward.inverse();
  s.transitions.push_back(std::move(forward));
  s.transitions.push_back(std::move(backward));
}

inline Chart chart2(const std::string& id, const std::string& suffix) { return {id, {"z" + suffix, "w" + suffix}}; }

}  // namespace detail

/// Throws InvalidArgument describing the first violated atlas invariant.
inline void validate_atlas(const Space& s) {
  std::set<std::string> ids;
  for (const auto& c : s.charts) {
    if (!ids.insert(c.id).second) throw InvalidArgument("duplicate chart id '" + c.id + "'");
    std::set<std::string> names(c.coordinates.begin(), c.coordinates.end());
    if (names.size() != c.coordinates.size()) throw InvalidArgument("chart " + c.id + " repeats a coordinate name");
    if (c.dim() != s.charts.front().dim()) throw InvalidArgument("charts of " + s.name + " differ in dimension");
  }
  std::map<std::pair<std::string, std::string>, IntMatrix> direct;
  for (const auto& t : s.transitions) {
    const auto& a = s.chart(t.source);
    s.chart(t.target);
    if (t.matrix.rows() != a.dim() || t.matrix.cols() != a.dim())
      throw InvalidArgument("transition " + t.source + "->" + t.target + " has the wrong shape");
    if (!t.matrix.unimodular())
      throw InvalidArgument("transition " + t.source + "->" + t.target + " is not unimodular");
    direct[{t.source, t.target}] = t.matrix;
  }
  for (const auto& [key, m] : direct) {
    auto back = direct.find({key.second, key.first});
    if (back == direct.end()) throw InvalidArgument("transition " + key.first + "->" + key.second + " lacks an inverse");
    if (back->second * m != IntMatrix::identity(m.rows()))
      throw InvalidArgument("transitions " + key.first + "<->" + key.second + " are not mutually inverse");
  }
  for (const auto& [ab, m_ab] : direct) {
    for (const auto& [bc, m_bc] : direct) {
      if (ab.second != bc.first || ab.first == bc.second) continue;
      auto ac = direct.find({ab.first, bc.second});
      if (ac == direct.end()) continue;
      if (ac->second != m_bc * m_ab)
        throw InvalidArgument("cocycle condition fails on " + ab.first + "," + ab.second + "," + bc.second);
    }
  }
}

inline Space make_point() {
  Space s;
  s.name = "pt";
  s.family = Family::kPoint;
  s.charts = {{"p", {}}};
  s.compact = true;
  return s;
}

/// n isolated points; intrinsic space of a finite subspace.
inline Space make_points(std::size_t n) {
  if (n == 1) return make_point();
  Space s;
  s.name = std::to_string(n) + "pt";
  s.family = Family::kPoint;
  for (std::size_t i = 0; i < n; ++i) s.charts.push_back({"p" + std::to_string(i), {}});
  s.compact = true;
  return s;
}

inline Space make_affine(std::int64_t n) {
  if (n < 1) throw InvalidArgument("Affine(n) needs n >= 1");
  Space s;
  s.name = "C" + std::to_string(n);
  s.family = Family::kAffine;
  s.parameters["n"] = n;
  Chart c{"U0", {}};
  if (n == 1) c.coordinates = {"z"};
  else if (n == 2) c.coordinates = {"z", "w"};
  else
    for (std::int64_t i = 0; i < n; ++i) c.coordinates.push_back("x" + std::to_string(i));
  s.charts = {c};
  return s;
}

inline Space make_cstar() {
  Space s;
  s.name = "CStar";
  s.family = Family::kCStar;
  s.charts = {{"U0", {"z"}}};
  return s;
}

inline Space make_c2_minus_origin() {
  Space s;
  s.name = "C2minus0";
  s.family = Family::kC2Minus0;
  s.charts = {{"U0", {"z", "w"}}};
  return s;
}

/// U0 carries the affine coordinate z, U1 the coordinate w = 1/z at infinity.
inline Space make_p1() {
  Space s;
  s.name = "P1";
  s.family = Family::kP1;
  s.charts = {{"U0", {"z"}}, {"U1", {"w"}}};
  detail::add_transition(s, "U0", "U1", IntMatrix{{-1}});
  s.compact = true;
  return s;
}

/// Standard affine charts of P^2 = {[x0:x1:x2]}: U_i = {x_i != 0}.
inline Space make_p2() {
  Space s;
  s.name = "P2";
  s.family = Family::kP2;
  s.charts = {detail::chart2("U0", "0"), detail::chart2("U1", "1"), detail::chart2("U2", "2")};
  detail::add_transition(s, "U0", "U1", IntMatrix{{-1, 0}, {-1, 1}});
  detail::add_transition(s, "U0", "U2", IntMatrix{{0, -1}, {1, -1}});
  detail::add_transition(s, "U1", "U2", IntMatrix{{1, -1}, {0, -1}});
  s.compact = true;
  return s;
}

/// Total space of E_k over P^1: z1 = 1/z0, w1 = z0^k w0.
inline Space make_line_bundle(std::int64_t k) {
  Space s;
  s.name = "E_{" + std::to_string(k) + "}";
  s.family = Family::kLineBundle;
  s.parameters["k"] = k;
  s.charts = {detail::chart2("X0", "0"), detail::chart2("X1", "1")};
  detail::add_transition(s, "X0", "X1", IntMatrix{{-1, 0}, {k, 1}});
  return s;
}

/// Four-chart atlas of the Hirzebruch surface H_k, rules in the order
/// X0->X1, X1->X2, X2->X3, X0->X3.
inline Space make_hirzebruch(std::int64_t k) {
  Space s;
  s.name = "H_{" + std::to_string(k) + "}";
  s.family = Family::kHirzebruch;
  s.parameters["k"] = k;
  s.charts = {detail::chart2("X0", "0"), detail::chart2("X1", "1"), detail::chart2("X2", "2"),
              detail::chart2("X3", "3")};
  detail::add_transition(s, "X0", "X1", IntMatrix{{-1, 0}, {k, 1}});
  detail::add_transition(s, "X1", "X2", IntMatrix{{1, 0}, {0, -1}});
  detail::add_transition(s, "X2", "X3", IntMatrix{{-1, 0}, {-k, 1}});
  detail::add_transition(s, "X0", "X3", IntMatrix{{1, 0}, {0, -1}});
  s.compact = true;
  return s;
}

/// Chart-pair atlas with block-diagonal transitions; X coordinates first.
inline Space make_product(const Space& a, const Space& b) {
  Space s;
  s.name = a.name + "x" + b.name;
  s.family = Family::kProduct;
  s.compact = a.compact && b.compact;
  s.factors = {a, b};
  for (const auto& ca : a.charts) {
    for (const auto& cb : b.charts) {
      Chart c{ca.id + "*" + cb.id, {}};
      for (const auto& x : ca.coordinates) c.coordinates.push_back(a.name + "." + x);
      for (const auto& y : cb.coordinates) c.coordinates.push_back(b.name + "." + y);
      s.charts.push_back(std::move(c));
    }
  }
  auto moves = [](const Space& f, const Chart& c) {
    std::vector<MonomialMap> out{{c.id, c.id, IntMatrix::identity(c.dim())}};
    for (const auto& t : f.transitions)
      if (t.source == c.id) out.push_back(t);
    return out;
  };
  for (const auto& ca : a.charts) {
    for (const auto& cb : b.charts) {
      for (const auto& ta : moves(a, ca)) {
        for (const auto& tb : moves(b, cb)) {
          if (ta.source == ta.target && tb.source == tb.target) continue;
          s.transitions.push_back({ca.id + "*" + cb.id, ta.target + "*" + tb.target,
                                   IntMatrix::block_diagonal(ta.matrix, tb.matrix)});
        }
      }
    }
  }
  return s;
}

inline Space make_p1_times_c1() { return make_product(make_p1(), make_affine(1)); }

/// Builds a builtin by family name. Accepted names: Point, Affine (n),
/// CStar, C2minus0, P1, P2, LineBundle (k), Hirzebruch (k), and the short
/// aliases C1, C2, E (E_{-k}), Eplus (E_k), H (H_k), P1xC1.
inline Space make_builtin(const std::string& name, const std::map<std::string, std::int64_t>& params = {}) {
  auto param = [&](const std::string& key, std::optional<std::int64_t> fallback = std::nullopt) {
    if (auto it = params.find(key); it != params.end()) return it->second;
    if (fallback) return *fallback;
    throw InvalidArgument("builtin " + name + " needs parameter " + key);
  };
  if (name == "Point" || name == "pt") return make_point();
  if (name == "Affine") return make_affine(param("n"));
  if (name == "C1") return make_affine(1);
  if (name == "C2") return make_affine(2);
  if (name == "CStar") return make_cstar();
  if (name == "C2minus0") return make_c2_minus_origin();
  if (name == "P1") return make_p1();
  if (name == "P2") return make_p2();
  if (name == "LineBundle") return make_line_bundle(param("k"));
  if (name == "E") return make_line_bundle(-param("k"));
  if (name == "Eplus") return make_line_bundle(param("k"));
  if (name == "Hirzebruch" || name == "H") return make_hirzebruch(param("k"));
  if (name == "P1xC1") return make_p1_times_c1();
  throw InvalidArgument("unknown builtin space '" + name + "'");
}

/// Registered (or path-composed) transition between two charts.
inline MonomialMap transition(const Space& s, const std::string& from, const std::string& to) {
  const auto& src = s.chart(from);
  s.chart(to);
  if (from == to) return {from, to, IntMatrix::identity(src.dim())};
  std::map<std::string, IntMatrix> reached{{from, IntMatrix::identity(src.dim())}};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    const auto at = queue.front();
    queue.pop_front();
    for (const auto& t : s.transitions) {
      if (t.source != at || reached.contains(t.target)) continue;
      reached.emplace(t.target, t.matrix * reached.at(at));
      if (t.target == to) return {from, to, reached.at(to)};
      queue.push_back(t.target);
    }
  }
  throw NotRegistered("charts " + from + " and " + to + " of " + s.name + " do not overlap");
}

namespace detail {

inline SubspaceComponent point_at(const Space& ambient, const std::string& chart, const std::string& name,
                                  std::optional<std::string> present_in = std::nullopt) {
  SubspaceComponent c;
  c.name = name;
  c.kind = SubspaceKind::kPoint;
  for (const auto& ch : ambient.charts) c.equations[ch.id] = std::nullopt;
  c.equations[chart] = ambient.chart(chart).coordinates;
  c.reference_chart = std::move(present_in);
  return c;
}

inline SubspaceComponent curve(const Space& ambient, const std::string& name,
                               const std::map<std::string, std::string>& vanishing, std::string reference) {
  SubspaceComponent c;
  c.name = name;
  c.kind = SubspaceKind::kCurve;
  for (const auto& ch : ambient.charts) c.equations[ch.id] = std::nullopt;
  for (const auto& [chart, coord] : vanishing) c.equations[chart] = std::vector<std::string>{coord};
  c.reference_chart = std::move(reference);
  return c;
}

inline Note c1_convention_note() {
  return {"c1_coordinate_convention",
          "H^1_c(C^1) is written in the coordinate w = 1/z at infinity: {e >= 1} in w is {i <= -1} in z. "
          "A product form over s >= 0 includes the constant s = 0, which is not compactly supported; "
          "it is dropped."};
}

}  // namespace detail

/// Every decomposition X = (X \ Y) u Y registered for a builtin total space.
inline std::vector<Decomposition> builtin_decompositions(const Space& x) {
  std::vector<Decomposition> out;
  switch (x.family) {
    case Family::kP1: {
      ClosedSubspace inf{"{inf}", x.name, {detail::point_at(x, "U1", "inf")}, make_point()};
      out.push_back({x, inf, make_affine(1), {detail::c1_convention_note()}});
      ClosedSubspace two{"{0,inf}",
                         x.name,
                         {detail::point_at(x, "U1", "inf", "U0"), detail::point_at(x, "U0", "0", "U0")},
                         make_points(2)};
      out.push_back({x, two, make_cstar(), {}});
      break;
    }
    case Family::kP2: {
      ClosedSubspace p{"{p}", x.name, {detail::point_at(x, "U0", "p")}, make_point()};
      out.push_back({x, p, make_line_bundle(-1), {}});
      break;
    }
    case Family::kAffine: {
      if (x.parameter("n") != 2) break;
      ClosedSubspace o{"{(0,0)}", x.name, {detail::point_at(x, "U0", "(0,0)")}, make_point()};
      out.push_back({x,
                     o,
                     make_c2_minus_origin(),
                     {{"c2minus0_strict_exponents",
                       "H^1_c(C^2 \\ {0}) is often quoted with exponents i,j > 0, but the isomorphism "
                       "is with the full germ space (H^0_c(C^2) = 0 leaves nothing to quotient); the engine "
                       "reports the full orthant i,j >= 0."}}});
      break;
    }
    case Family::kHirzebruch: {
      const auto k = x.parameter("k");
      const auto p1 = make_p1();
      out.push_back({x,
                     {"Y_0", x.name, {detail::curve(x, "Y_0", {{"X0", "z0"}, {"X3", "z3"}}, "X3")}, p1},
                     make_p1_times_c1(),
                     {}});
      out.push_back({x,
                     {"Y_1", x.name, {detail::curve(x, "Y_1", {{"X0", "w0"}, {"X1", "w1"}}, "X1")}, p1},
                     make_line_bundle(-k),
                     {}});
      out.push_back({x,
                     {"Y_2", x.name, {detail::curve(x, "Y_2", {{"X1", "z1"}, {"X2", "z2"}}, "X1")}, p1},
                     make_p1_times_c1(),
                     {}});
      out.push_back({x,
                     {"Y_3", x.name, {detail::curve(x, "Y_3", {{"X2", "w2"}, {"X3", "w3"}}, "X3")}, p1},
                     make_line_bundle(k),
                     {{"y3_section_reading",
                       "Sections along Y_3 are transported in chart X2 coordinates (z2, w2), not z0, w0; "
                       "the resulting H^0_c(Y_3) = C, not H^0_c(Y_2)."}}});
      break;
    }
    default:
      break;
  }
  return out;
}

/// Registered decompositions whose complement is `space`, in preference
/// order. `k_hint` picks the Hirzebruch surface for spaces (P1xC1) that are
/// a complement in every H_k.
inline std::vector<Decomposition> decompositions_for(const Space& space, std::int64_t k_hint = 1) {
  std::vector<Space> totals;
  switch (space.family) {
    case Family::kAffine:
    case Family::kCStar:
      totals.push_back(make_p1());
      break;
    case Family::kC2Minus0:
      totals.push_back(make_affine(2));
      break;
    case Family::kLineBundle: {
      const auto d = space.parameter("k");
      if (d == -1) totals.push_back(make_p2());
      totals.push_back(make_hirzebruch(d < 0 ? -d : d));
      break;
    }
    case Family::kProduct:
      totals.push_back(make_hirzebruch(k_hint));
      break;
    default:
      break;
  }
  std::vector<Decomposition> out;
  for (const auto& t : totals)
    for (auto& d : builtin_decompositions(t))
      if (d.complement.name == space.name) out.push_back(std::move(d));
  return out;
}

/// Reads either {"builtin": name, "k": .., "n": ..} or a custom atlas
/// {"name", "charts": [{"id", "coordinates"}], "transitions": [{"from", "to",
/// "matrix"}], "compact"}. Missing inverse transitions are added.
inline Space space_from_json(const json& j) {
  try {
    if (j.contains("builtin")) {
      std::map<std::string, std::int64_t> params;
      for (const char* key : {"k", "n"})
        if (j.contains(key)) params[key] = j.at(key).get<std::int64_t>();
      return make_builtin(j.at("builtin").get<std::string>(), params);
    }
    Space s;
    s.name = j.value("name", std::string("custom"));
    s.family = Family::kCustom;
    s.compact = j.at("compact").get<bool>();
    for (const auto& jc : j.at("charts"))
      s.charts.push_back({jc.at("id").get<std::string>(), jc.at("coordinates").get<std::vector<std::string>>()});
    if (s.charts.empty()) throw InvalidArgument("custom atlas has no charts");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& jt : j.value("transitions", json::array())) {
      MonomialMap m{jt.at("from").get<std::string>(), jt.at("to").get<std::string>(),
                    IntMatrix::from_rows(jt.at("matrix").get<std::vector<std::vector<std::int64_t>>>())};
      seen.insert({m.source, m.target});
      s.transitions.push_back(std::move(m));
    }
    const auto given = s.transitions;
    for (const auto& t : given) {
      if (seen.contains({t.target, t.source})) continue;
      if (!t.matrix.unimodular()) throw InvalidArgument("transition " + t.source + "->" + t.target + " is not unimodular");
      s.transitions.push_back(t.inverse());
    }
    validate_atlas(s);
    return s;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed space description: ") + e.what());
  }
}

}  // namespace cohomc
