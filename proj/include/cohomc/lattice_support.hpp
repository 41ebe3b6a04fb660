#pragma once

// Integer-lattice subsets carrying the exponents of formal power series.
//
// A support is a conjunction of integer linear inequalities a.v >= b plus a
// finite set of excluded lattice points. Everything here is exact integer
// arithmetic; the brute-force `enumerate` doubles as the cross-check oracle.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cohomc/errors.hpp"
#include "cohomc/int_matrix.hpp"

namespace cohomc {

using json = nlohmann::ordered_json;

/// Exponents of the local coordinates of one monomial.
using ExponentVector = std::vector<std::int64_t>;

inline constexpr std::int64_t kDefaultOracleBound = 16;

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::int64_t content(std::span<const std::int64_t> a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// a.x >= b
struct Row {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;
};

/// Divides by the coefficient content and rounds the bound up. Integer
/// solutions are preserved; rational ones may be cut.
inline void tighten(Row& r) {
  const std::int64_t g = content(r.a);
  if (g <= 1) return;
  for (auto& x : r.a) x /= g;
  r.b = ceil_div(r.b, g);
}

/// Fourier-Motzkin elimination with integer tightening after every step.
/// Returns true only when the system provably has no integer solution.
/// A false answer means "not refuted", not "feasible".
inline bool provably_infeasible(std::vector<Row> rows, std::size_t dim) {
  for (std::size_t var = 0; var <= dim; ++var) {
    std::map<std::vector<std::int64_t>, std::int64_t> dedup;
    for (auto& r : rows) {
      tighten(r);
      auto [it, fresh] = dedup.emplace(r.a, r.b);
      if (!fresh) it->second = std::max(it->second, r.b);
    }
    rows.clear();
    for (auto& [a, b] : dedup) {
      if (content(a) == 0) {
        if (b > 0) return true;
        continue;
      }
      rows.push_back({a, b});
    }
    if (var == dim) break;

    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[var] > 0)
        pos.push_back(r);
      else if (r.a[var] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const std::int64_t cp = -n.a[var];
        const std::int64_t cn = p.a[var];
        Row c;
        c.a.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) c.a[i] = cp * p.a[i] + cn * n.a[i];
        c.b = cp * p.b + cn * n.b;
        next.push_back(std::move(c));
      }
    }
    rows = std::move(next);
  }
  return false;
}

}  // namespace detail

enum class Sense { kAtLeast, kGreater };

/// normal . v (>= | >) bound
struct LinearConstraint {
  std::vector<std::int64_t> normal;
  std::int64_t bound = 0;
  Sense sense = Sense::kAtLeast;

  LinearConstraint() = default;
  LinearConstraint(std::vector<std::int64_t> n, std::int64_t b, Sense s = Sense::kAtLeast)
      : normal(std::move(n)), bound(b), sense(s) {
    if (normal.empty()) throw InvalidArgument("constraint has no coefficients");
    if (detail::content(normal) == 0) throw InvalidArgument("constraint normal is the zero vector");
  }

  std::size_t dimension() const noexcept { return normal.size(); }

  bool holds(std::span<const std::int64_t> v) const {
    if (v.size() != normal.size()) throw DimensionMismatch(normal.size(), v.size());
    const std::int64_t lhs = detail::dot(normal, v);
    return sense == Sense::kAtLeast ? lhs >= bound : lhs > bound;
  }

  /// Strict sense becomes >= bound+1, then the gcd of the normal is divided out.
  LinearConstraint canonical() const {
    LinearConstraint c = *this;
    if (c.sense == Sense::kGreater) {
      c.bound += 1;
      c.sense = Sense::kAtLeast;
    }
    detail::Row r{c.normal, c.bound};
    detail::tighten(r);
    c.normal = std::move(r.a);
    c.bound = r.b;
    return c;
  }

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
  friend auto operator<=>(const LinearConstraint& x, const LinearConstraint& y) {
    if (auto c = x.normal <=> y.normal; c != 0) return c;
    if (auto c = x.bound <=> y.bound; c != 0) return c;
    return static_cast<int>(x.sense) <=> static_cast<int>(y.sense);
  }
};

/// Coordinate constraint x_i >= bound.
inline LinearConstraint at_least(std::size_t dim, std::size_t i, std::int64_t bound) {
  std::vector<std::int64_t> n(dim, 0);
  n[i] = 1;
  return {std::move(n), bound};
}

/// Coordinate constraint x_i <= bound.
inline LinearConstraint at_most(std::size_t dim, std::size_t i, std::int64_t bound) {
  std::vector<std::int64_t> n(dim, 0);
  n[i] = -1;
  return {std::move(n), -bound};
}

class ExponentSupport {
 public:
  explicit ExponentSupport(std::size_t dim, std::vector<LinearConstraint> constraints = {},
                           std::set<ExponentVector> excluded = {}, std::string note = {})
      : dim_(dim), constraints_(std::move(constraints)), excluded_(std::move(excluded)), note_(std::move(note)) {
    if (dim_ == 0) throw InvalidArgument("support dimension must be at least 1");
    canonicalize();
  }

  static ExponentSupport full(std::size_t dim) { return ExponentSupport(dim); }

  static ExponentSupport orthant(std::size_t dim) {
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < dim; ++i) cs.push_back(at_least(dim, i, 0));
    return ExponentSupport(dim, std::move(cs));
  }

  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }
  const std::set<ExponentVector>& excluded() const noexcept { return excluded_; }
  const std::string& note() const noexcept { return note_; }

  ExponentSupport with_note(std::string note) const {
    ExponentSupport s = *this;
    s.note_ = std::move(note);
    return s;
  }

  bool satisfies_constraints(std::span<const std::int64_t> v) const {
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c.holds(v); });
  }

  /// Conservative emptiness: true means no lattice point satisfies the
  /// constraints (exclusions ignored).
  bool provably_empty() const { return detail::provably_infeasible(rows(), dim_); }

  /// Coordinates the constraints force to a single value, with that value.
  std::map<std::size_t, std::int64_t> pinned_coordinates() const {
    std::map<std::size_t, std::int64_t> lower, upper, out;
    for (const auto& c : constraints_) {
      std::size_t nonzero = 0, idx = 0;
      for (std::size_t i = 0; i < dim_; ++i)
        if (c.normal[i] != 0) ++nonzero, idx = i;
      if (nonzero != 1) continue;
      if (c.normal[idx] == 1) lower[idx] = c.bound;
      if (c.normal[idx] == -1) upper[idx] = -c.bound;
    }
    for (auto [i, lo] : lower)
      if (auto it = upper.find(i); it != upper.end() && it->second == lo) out[i] = lo;
    return out;
  }

  /// Canonical-form equality; the convergence note is inert and ignored.
  friend bool operator==(const ExponentSupport& a, const ExponentSupport& b) {
    return a.dim_ == b.dim_ && a.constraints_ == b.constraints_ && a.excluded_ == b.excluded_;
  }

  std::vector<detail::Row> rows() const {
    std::vector<detail::Row> out;
    for (const auto& c : constraints_) out.push_back({c.normal, c.bound});
    return out;
  }

 private:
  void canonicalize() {
    std::map<std::vector<std::int64_t>, std::int64_t> tightest;
    for (const auto& raw : constraints_) {
      if (raw.dimension() != dim_) throw DimensionMismatch(dim_, raw.dimension());
      auto c = raw.canonical();
      auto [it, fresh] = tightest.emplace(c.normal, c.bound);
      if (!fresh) it->second = std::max(it->second, c.bound);
    }
    constraints_.clear();
    for (auto& [n, b] : tightest) constraints_.push_back(LinearConstraint(n, b));

    for (const auto& e : excluded_)
      if (e.size() != dim_) throw DimensionMismatch(dim_, e.size());
    std::erase_if(excluded_, [&](const auto& e) { return !satisfies_constraints(e); });

    while (absorb_one_exclusion()) {
    }
  }

  // On a support confined to a line, an excluded endpoint is the unique
  // lattice point of a facet; remove it by shifting that facet instead.
  bool absorb_one_exclusion() {
    if (excluded_.empty()) return false;
    const auto pinned = pinned_coordinates();
    if (pinned.size() + 1 != dim_) return false;
    for (auto eit = excluded_.begin(); eit != excluded_.end(); ++eit) {
      const auto& e = *eit;
      for (auto& c : constraints_) {
        if (detail::dot(c.normal, e) != c.bound) continue;
        auto face = rows();
        face.push_back({negate(c.normal), -c.bound});
        bool singleton = true;
        for (std::size_t i = 0; i < dim_ && singleton; ++i) {
          auto above = face, below = face;
          above.push_back({unit(i, 1), e[i] + 1});
          below.push_back({unit(i, -1), -(e[i] - 1)});
          singleton = detail::provably_infeasible(above, dim_) && detail::provably_infeasible(below, dim_);
        }
        if (!singleton) continue;
        c.bound += 1;
        excluded_.erase(eit);
        std::erase_if(excluded_, [&](const auto& x) { return !satisfies_constraints(x); });
        return true;
      }
    }
    return false;
  }

  static std::vector<std::int64_t> negate(std::vector<std::int64_t> v) {
    for (auto& x : v) x = -x;
    return v;
  }

  std::vector<std::int64_t> unit(std::size_t i, std::int64_t sign) const {
    std::vector<std::int64_t> u(dim_, 0);
    u[i] = sign;
    return u;
  }

  std::size_t dim_;
  std::vector<LinearConstraint> constraints_;
  std::set<ExponentVector> excluded_;
  std::string note_;
};

inline bool contains(const ExponentSupport& s, std::span<const std::int64_t> v) {
  if (v.size() != s.dimension()) throw DimensionMismatch(s.dimension(), v.size());
  return s.satisfies_constraints(v) && !s.excluded().contains(ExponentVector(v.begin(), v.end()));
}

/// Members of `s` inside the box [-bound, bound]^d, in lexicographic order.
inline std::vector<ExponentVector> enumerate(const ExponentSupport& s, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("enumeration bound must be positive");
  std::vector<ExponentVector> out;
  const std::size_t d = s.dimension();
  ExponentVector v(d, -bound);
  while (true) {
    if (contains(s, v)) out.push_back(v);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (v[i] < bound) {
        ++v[i];
        break;
      }
      v[i] = -bound;
      if (i == 0) return out;
    }
  }
}

/// Image of `s` under the exponent change v -> M v:
/// contains(result, M v) <=> contains(s, v).
///
/// For |det M| = 1 the constraints are pulled back through M^-1 exactly. For
/// other invertible M the equivalence holds on the image lattice M Z^d only,
/// and exclusions are rejected since their image set is not expressible.
inline ExponentSupport transform(const ExponentSupport& s, const IntMatrix& m, bool assert_unimodular = true) {
  const std::size_t d = s.dimension();
  if (m.rows() != d || m.cols() != d) throw DimensionMismatch(d, m.rows());
  const std::int64_t det = m.determinant();
  if (det == 0) throw InvalidArgument("singular exponent matrix " + m.to_string());
  const bool unimodular = det == 1 || det == -1;
  if (assert_unimodular && !unimodular)
    throw InvalidArgument("matrix asserted unimodular has determinant " + std::to_string(det));
  if (!unimodular && !s.excluded().empty())
    throw InvalidArgument("non-unimodular image of a support with exclusions is not expressible");

  // a.v >= b with v = adj(M) u / det.
  const IntMatrix adj_t = m.adjugate().transpose();
  std::vector<LinearConstraint> cs;
  for (const auto& c : s.constraints()) {
    auto n = adj_t.apply(c.normal);
    // (adj^T a).u >= b*det, flipped when det < 0; for det = -1 the two flips
    // leave the bound alone.
    std::int64_t b = unimodular ? c.bound : c.bound * det;
    if (det < 0) {
      for (auto& x : n) x = -x;
      if (!unimodular) b = -b;
    }
    cs.emplace_back(std::move(n), b);
  }
  std::set<ExponentVector> ex;
  for (const auto& e : s.excluded()) ex.insert(m.apply(e));
  return ExponentSupport(d, std::move(cs), std::move(ex), s.note());
}

inline ExponentSupport intersect(const ExponentSupport& a, const ExponentSupport& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  auto cs = a.constraints();
  cs.insert(cs.end(), b.constraints().begin(), b.constraints().end());
  auto ex = a.excluded();
  ex.insert(b.excluded().begin(), b.excluded().end());
  return ExponentSupport(a.dimension(), std::move(cs), std::move(ex), a.note().empty() ? b.note() : a.note());
}

/// Removes one member. A non-member indicates a caller logic error.
inline ExponentSupport remove_point(const ExponentSupport& s, const ExponentVector& v) {
  if (!contains(s, v)) throw InvalidArgument("remove_point: point is not a member of the support");
  auto ex = s.excluded();
  ex.insert(v);
  return ExponentSupport(s.dimension(), s.constraints(), std::move(ex), s.note());
}

inline bool equals_up_to(const ExponentSupport& a, const ExponentSupport& b,
                         std::int64_t bound = kDefaultOracleBound) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch(a.dimension(), b.dimension());
  return enumerate(a, bound) == enumerate(b, bound);
}

inline bool contains_origin(const ExponentSupport& s) { return contains(s, ExponentVector(s.dimension(), 0)); }

/// True when the origin is the only lattice point satisfying the constraints
/// of a support whose constraints are homogeneous (bound 0).
inline bool is_origin_only(const ExponentSupport& s) {
  if (!contains_origin(s)) return false;
  for (const auto& c : s.constraints())
    if (c.bound != 0) return false;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    for (std::int64_t sign : {1, -1}) {
      auto rows = s.rows();
      std::vector<std::int64_t> n(s.dimension(), 0);
      n[i] = sign;
      rows.push_back({n, 1});
      if (!detail::provably_infeasible(rows, s.dimension())) return false;
    }
  }
  return true;
}

/// Cartesian product; coordinates of `a` come first. Exclusions would turn
/// into infinite sets, so punctured factors are rejected.
inline ExponentSupport product(const ExponentSupport& a, const ExponentSupport& b) {
  if (!a.excluded().empty() || !b.excluded().empty())
    throw Unsupported("product of punctured supports; split exclusions first");
  const std::size_t d = a.dimension() + b.dimension();
  std::vector<LinearConstraint> cs;
  for (const auto& c : a.constraints()) {
    auto n = c.normal;
    n.resize(d, 0);
    cs.emplace_back(std::move(n), c.bound);
  }
  for (const auto& c : b.constraints()) {
    std::vector<std::int64_t> n(a.dimension(), 0);
    n.insert(n.end(), c.normal.begin(), c.normal.end());
    cs.emplace_back(std::move(n), c.bound);
  }
  return ExponentSupport(d, std::move(cs), {}, a.note().empty() ? b.note() : a.note());
}

/// Disjoint exclusion-free pieces whose union is `s`. Each excluded point e
/// is cut out lexicographically: {x_0 > e_0}, {x_0 < e_0}, {x_0 = e_0, x_1 > e_1}, ...
inline std::vector<ExponentSupport> split_exclusions(const ExponentSupport& s) {
  const std::size_t d = s.dimension();
  std::vector<ExponentSupport> done;
  std::vector<ExponentSupport> work{ExponentSupport(d, s.constraints(), {}, s.note())};
  for (const auto& e : s.excluded()) {
    std::vector<ExponentSupport> next;
    for (const auto& piece : work) {
      if (!contains(piece, e)) {
        next.push_back(piece);
        continue;
      }
      std::vector<LinearConstraint> prefix = piece.constraints();
      for (std::size_t i = 0; i < d; ++i) {
        for (bool upper : {true, false}) {
          auto cs = prefix;
          cs.push_back(upper ? at_least(d, i, e[i] + 1) : at_most(d, i, e[i] - 1));
          ExponentSupport cut(d, std::move(cs), {}, s.note());
          if (!cut.provably_empty()) next.push_back(std::move(cut));
        }
        prefix.push_back(at_least(d, i, e[i]));
        prefix.push_back(at_most(d, i, e[i]));
      }
    }
    work = std::move(next);
  }
  done.insert(done.end(), work.begin(), work.end());
  return done;
}

/// Drops coordinates the constraints pin to 0. Returns the reduced support
/// (or nullopt if every coordinate is pinned) and the indices kept.
inline std::pair<std::optional<ExponentSupport>, std::vector<std::size_t>> drop_zero_coordinates(
    const ExponentSupport& s) {
  const auto pinned = s.pinned_coordinates();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < s.dimension(); ++i)
    if (auto it = pinned.find(i); it == pinned.end() || it->second != 0) keep.push_back(i);
  if (keep.size() == s.dimension()) return {s, keep};
  if (keep.empty()) return {std::nullopt, keep};

  auto project = [&](std::span<const std::int64_t> v) {
    std::vector<std::int64_t> out;
    for (auto i : keep) out.push_back(v[i]);
    return out;
  };
  std::vector<LinearConstraint> cs;
  for (const auto& c : s.constraints()) {
    auto n = project(c.normal);
    if (detail::content(n) == 0) continue;  // only involved pinned coordinates
    cs.emplace_back(std::move(n), c.bound);
  }
  std::set<ExponentVector> ex;
  for (const auto& e : s.excluded()) ex.insert(project(e));
  return {ExponentSupport(keep.size(), std::move(cs), std::move(ex), s.note()), keep};
}

inline void to_json(json& j, const ExponentSupport& s) {
  j = json::object();
  j["dim"] = s.dimension();
  j["constraints"] = json::array();
  for (const auto& c : s.constraints()) {
    json jc = json::object();
    jc["normal"] = c.normal;
    jc["bound"] = c.bound;
    j["constraints"].push_back(std::move(jc));
  }
  j["excluded"] = json::array();
  for (const auto& e : s.excluded()) j["excluded"].push_back(e);
  j["note"] = s.note();
}

inline ExponentSupport support_from_json(const json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<LinearConstraint> cs;
    for (const auto& jc : j.at("constraints"))
      cs.emplace_back(jc.at("normal").get<std::vector<std::int64_t>>(), jc.at("bound").get<std::int64_t>());
    std::set<ExponentVector> ex;
    for (const auto& e : j.value("excluded", json::array())) ex.insert(e.get<ExponentVector>());
    return ExponentSupport(dim, std::move(cs), std::move(ex), j.value("note", std::string{}));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed support JSON: ") + e.what());
  }
}

}  // namespace cohomc
