#pragma once

// Kunneth formula for compactly supported cohomology with coefficients in
// the structure sheaf:
//
//   H^n_c(X x Y) = (+)_{p+q=n} H^p_c(X) (x) H^q_c(Y).
//
// All groups are complex vector spaces, hence torsion free, so the free
// product (Tor) term of the general sequence is identically zero.

#include <vector>

#include "cohomc/catalog.hpp"
#include "cohomc/cohomology_group.hpp"
#include "cohomc/lattice_support.hpp"
#include "cohomc/space_atlas.hpp"

namespace cohomc {

/// Tensor product of two groups. Series (x) Series is the series over the
/// product support, coordinates of `a` first; punctured supports are first
/// split into disjoint unpunctured pieces, so the result may be a DirectSum.
inline CohomologyGroup tensor(const CohomologyGroup& a, const CohomologyGroup& b) {
  if (a.is_zero() || b.is_zero()) return CohomologyGroup::zero();
  if (a.is_direct_sum() || b.is_direct_sum()) {
    std::vector<CohomologyGroup> parts;
    for (const auto& x : a.summands())
      for (const auto& y : b.summands()) parts.push_back(tensor(x, y));
    return CohomologyGroup::direct_sum(parts);
  }
  if (a.is_finite() && b.is_finite()) return CohomologyGroup::finite(*a.finite_dimension() * *b.finite_dimension());
  if (a.is_finite() || b.is_finite()) {
    const auto& n = a.is_finite() ? a : b;
    const auto& s = a.is_finite() ? b : a;
    return CohomologyGroup::direct_sum(std::vector<CohomologyGroup>(static_cast<std::size_t>(*n.finite_dimension()), s));
  }
  const auto& sa = a.as_series();
  const auto& sb = b.as_series();
  const auto chart = sa.reference_chart + "*" + sb.reference_chart;
  std::vector<CohomologyGroup> parts;
  for (const auto& pa : split_exclusions(sa.support))
    for (const auto& pb : split_exclusions(sb.support)) parts.push_back(CohomologyGroup::series(product(pa, pb), chart));
  return CohomologyGroup::direct_sum(parts);
}

struct KunnethSummand {
  int p = 0;
  int q = 0;
  CohomologyGroup left;
  CohomologyGroup right;
  CohomologyGroup product;
};

/// Summands p + q = n; degrees above a factor's dimension contribute zero.
inline std::vector<KunnethSummand> kunneth_summands(const GradedCohomology& hx, const GradedCohomology& hy, int n) {
  if (n < 0) throw InvalidArgument("negative degree");
  std::vector<KunnethSummand> out;
  for (int p = 0; p <= n; ++p) {
    const int q = n - p;
    const auto& l = hx.at(p);
    const auto& r = hy.at(q);
    out.push_back({p, q, l, r, tensor(l, r)});
  }
  return out;
}

inline CohomologyGroup kunneth_degree(const GradedCohomology& hx, const GradedCohomology& hy, int n) {
  std::vector<CohomologyGroup> parts;
  for (const auto& s : kunneth_summands(hx, hy, n)) parts.push_back(s.product);
  return CohomologyGroup::direct_sum(parts);
}

struct KunnethResult {
  GradedCohomology graded;
  std::map<int, std::vector<KunnethSummand>> summands;
  std::vector<Note> notes;
};

/// H^*_c of a registered product from the catalog entries of its factors.
inline KunnethResult compute_kunneth(const Space& space, const Catalog& catalog, std::optional<int> max_q = std::nullopt) {
  if (space.family != Family::kProduct || space.factors.size() != 2)
    throw NotRegistered(space.name + " is not a registered product");
  const auto hx = catalog.lookup(space.factors[0]);
  const auto hy = catalog.lookup(space.factors[1]);
  KunnethResult r;
  r.graded.dimension = space.complex_dimension();
  for (int n = 0; n <= max_q.value_or(r.graded.dimension); ++n) {
    r.summands[n] = kunneth_summands(hx, hy, n);
    r.graded.set(n, kunneth_degree(hx, hy, n), Provenance::kKunneth);
  }
  for (const auto& f : space.factors) {
    if (f.family == Family::kAffine && f.parameter("n") == 1) {
      r.notes.push_back(detail::c1_convention_note());
      break;
    }
  }
  return r;
}

inline json kunneth_to_json(const KunnethResult& r) {
  json j = json::object();
  for (const auto& [n, list] : r.summands) {
    json arr = json::array();
    for (const auto& s : list) {
      json js = json::object();
      js["p"] = s.p;
      js["q"] = s.q;
      js["left"] = s.left;
      js["right"] = s.right;
      js["product"] = s.product;
      arr.push_back(std::move(js));
    }
    j[std::to_string(n)] = std::move(arr);
  }
  json out = json::object();
  out["summands"] = std::move(j);
  out["torsion"] = "zero: vector-space coefficients are torsion free";
  return out;
}

}  // namespace cohomc
