#pragma once

// Brute-force comparison of cohomology groups by lattice enumeration in the
// box [-B, B]^d. Independent of the symbolic canonical forms.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cohomc/cohomology_group.hpp"
#include "cohomc/lattice_support.hpp"

namespace cohomc {

enum class VerdictKind { kEqual, kDiffer, kIncomparable };

inline std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::kEqual: return "Equal";
    case VerdictKind::kDiffer: return "Differ";
    case VerdictKind::kIncomparable: return "Incomparable";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::kIncomparable;
  std::optional<ExponentVector> witness;
  std::string detail;

  bool equal() const noexcept { return kind == VerdictKind::kEqual; }
};

inline std::int64_t truncated_dimension(const CohomologyGroup& g, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("oracle bound must be positive");
  if (auto n = g.finite_dimension()) return *n;
  if (g.is_series()) return static_cast<std::int64_t>(enumerate(g.as_series().support, bound).size());
  std::int64_t total = 0;
  for (const auto& s : g.as_direct_sum().summands) total += truncated_dimension(s, bound);
  return total;
}

namespace detail {

inline Verdict by_count(const CohomologyGroup& a, const CohomologyGroup& b, std::int64_t bound) {
  const auto na = truncated_dimension(a, bound), nb = truncated_dimension(b, bound);
  if (na != nb)
    return {VerdictKind::kDiffer, std::nullopt,
            "truncated dimensions " + std::to_string(na) + " vs " + std::to_string(nb)};
  return {VerdictKind::kIncomparable, std::nullopt, "different shapes with equal truncated dimension"};
}

/// Enumeration of a support after dropping coordinates pinned to zero; a
/// support pinned entirely to the origin becomes a 0-dimensional set.
struct Reduced {
  std::size_t dim = 0;
  std::vector<ExponentVector> points;
  std::optional<ExponentSupport> support;
};

inline Reduced reduce(const ExponentSupport& s, std::int64_t bound) {
  auto [r, kept] = drop_zero_coordinates(s);
  if (!r) return {0, contains_origin(s) ? std::vector<ExponentVector>{{}} : std::vector<ExponentVector>{}, std::nullopt};
  return {r->dimension(), enumerate(*r, bound), r};
}

inline Verdict compare_series(const ExponentSupport& a, const ExponentSupport& b, std::int64_t bound) {
  const auto ra = reduce(a, bound), rb = reduce(b, bound);
  if (ra.dim != rb.dim) {
    if (ra.points.size() != rb.points.size())
      return {VerdictKind::kDiffer, std::nullopt, "supports of different effective dimension"};
    return {VerdictKind::kIncomparable, std::nullopt, "supports of different effective dimension"};
  }
  if (ra.points == rb.points) return {VerdictKind::kEqual, std::nullopt, {}};
  if (ra.dim >= 2 && ra.dim <= 3) {
    std::vector<std::size_t> perm(ra.dim);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      auto moved = enumerate(transform(*rb.support, IntMatrix::permutation(perm)), bound);
      if (moved == ra.points) return {VerdictKind::kEqual, std::nullopt, "equal after coordinate permutation"};
    }
  }
  std::vector<ExponentVector> diff;
  std::set_symmetric_difference(ra.points.begin(), ra.points.end(), rb.points.begin(), rb.points.end(),
                                std::back_inserter(diff));
  return {VerdictKind::kDiffer, diff.front(), "enumerations differ"};
}

inline bool match_summands(const std::vector<CohomologyGroup>& a, const std::vector<CohomologyGroup>& b,
                           std::size_t i, std::vector<bool>& used, std::int64_t bound);

}  // namespace detail

inline Verdict groups_equal(const CohomologyGroup& a, const CohomologyGroup& b,
                            std::int64_t bound = kDefaultOracleBound) {
  if (bound < 1) throw InvalidArgument("oracle bound must be positive");
  if (a.is_finite() && b.is_finite()) {
    if (*a.finite_dimension() == *b.finite_dimension()) return {VerdictKind::kEqual, std::nullopt, {}};
    return {VerdictKind::kDiffer, std::nullopt,
            "dimensions " + std::to_string(*a.finite_dimension()) + " vs " + std::to_string(*b.finite_dimension())};
  }
  if (a.is_series() && b.is_series()) return detail::compare_series(a.as_series().support, b.as_series().support, bound);
  if (a.is_direct_sum() && b.is_direct_sum()) {
    const auto& sa = a.as_direct_sum().summands;
    const auto& sb = b.as_direct_sum().summands;
    std::vector<bool> used(sb.size(), false);
    if (sa.size() == sb.size() && detail::match_summands(sa, sb, 0, used, bound))
      return {VerdictKind::kEqual, std::nullopt, {}};
  }
  return detail::by_count(a, b, bound);
}

namespace detail {

inline bool match_summands(const std::vector<CohomologyGroup>& a, const std::vector<CohomologyGroup>& b,
                           std::size_t i, std::vector<bool>& used, std::int64_t bound) {
  if (i == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j] || !groups_equal(a[i], b[j], bound).equal()) continue;
    used[j] = true;
    if (match_summands(a, b, i + 1, used, bound)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace detail

inline void to_json(json& j, const Verdict& v) {
  j = json::object();
  j["verdict"] = to_string(v.kind);
  if (v.witness) j["witness"] = *v.witness;
  if (!v.detail.empty()) j["detail"] = v.detail;
}

}  // namespace cohomc
