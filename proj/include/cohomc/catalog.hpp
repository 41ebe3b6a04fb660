#pragma once

// Registry of known graded compactly supported cohomology. Seeded with the
// base facts the derivations rely on; solved results are added as they
// are derived, and a second derivation must agree with the first.

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "cohomc/cohomology_group.hpp"
#include "cohomc/oracle.hpp"
#include "cohomc/space_atlas.hpp"

namespace cohomc {

struct CatalogEntry {
  std::string space;
  std::map<std::string, std::int64_t> parameters;
  GradedCohomology graded;
};

namespace detail {

inline GradedCohomology graded_of(int dimension, std::initializer_list<std::pair<int, GradedEntry>> entries) {
  GradedCohomology g;
  g.dimension = dimension;
  for (const auto& [q, e] : entries) g.entries[q] = e;
  return g;
}

/// H^q_c(H_k) for every k: compact, with the positive-degree vanishing the
/// exact-sequence simplifications presuppose.
inline GradedCohomology hirzebruch_axioms() {
  return graded_of(2, {{0, {CohomologyGroup::finite(1), Provenance::kAxiom}},
                       {1, {CohomologyGroup::zero(), Provenance::kAxiom}},
                       {2, {CohomologyGroup::zero(), Provenance::kAxiom}}});
}

inline CohomologyGroup c1_first_group() {
  return CohomologyGroup::series(ExponentSupport(1, {at_least(1, 0, 1)}, {}, "converges at infinity"), "P1.U1");
}

}  // namespace detail

class Catalog {
 public:
  Catalog() {
    using detail::graded_of;
    const auto one = CohomologyGroup::finite(1);
    const auto zero = CohomologyGroup::zero();
    seed(make_point(), graded_of(0, {{0, {one, Provenance::kAxiom}}}));
    seed(make_p1(), graded_of(1, {{0, {one, Provenance::kAxiom}}, {1, {zero, Provenance::kStated}}}));
    seed(make_p2(), graded_of(2, {{0, {one, Provenance::kAxiom}},
                                  {1, {zero, Provenance::kStated}},
                                  {2, {zero, Provenance::kStated}}}));
    seed(make_affine(1), graded_of(1, {{0, {zero, Provenance::kAxiom}},
                                       {1, {detail::c1_first_group(), Provenance::kStated}}}));
    // H^2_c(C^2) is deliberately absent.
    seed(make_affine(2), graded_of(2, {{0, {zero, Provenance::kAxiom}}, {1, {zero, Provenance::kStated}}}));
  }

  Catalog(const Catalog& other) {
    std::shared_lock lock(other.mutex_);
    entries_ = other.entries_;
  }

  std::optional<GradedCohomology> find(const Space& space) const {
    std::shared_lock lock(mutex_);
    return find_unlocked(space);
  }

  GradedCohomology lookup(const Space& space) const {
    if (auto g = find(space)) return *g;
    throw NotRegistered("no catalog entry for " + space.name);
  }

  /// Stores `graded` for `space`. Degrees already known must agree under the
  /// oracle at `bound`; new degrees are merged in.
  void register_graded(const Space& space, const GradedCohomology& graded, std::int64_t bound = kDefaultOracleBound) {
    check_compactness(space, graded);
    std::unique_lock lock(mutex_);
    auto existing = find_unlocked(space);
    GradedCohomology merged = existing.value_or(GradedCohomology{graded.dimension, {}});
    for (const auto& [q, e] : graded.entries) {
      auto it = merged.entries.find(q);
      if (it == merged.entries.end()) {
        merged.entries[q] = e;
        continue;
      }
      const auto v = groups_equal(it->second.group, e.group, bound);
      if (!v.equal())
        throw ConflictingEntry("H^" + std::to_string(q) + "_c(" + space.name + ") disagrees with the catalog (" +
                               to_string(v.kind) + (v.detail.empty() ? "" : ": " + v.detail) + ")");
    }
    entries_[space.name] = CatalogEntry{space.name, space.parameters, std::move(merged)};
  }

  json dump() const {
    std::shared_lock lock(mutex_);
    json j = json::object();
    json spaces = json::array();
    for (const auto& [name, e] : entries_) {
      json je = json::object();
      je["space"] = name;
      je["parameters"] = e.parameters;
      je["groups"] = graded_to_json(e.graded);
      spaces.push_back(std::move(je));
    }
    j["entries"] = std::move(spaces);
    json fam = json::object();
    fam["family"] = "Hirzebruch";
    fam["applies_to"] = "H_{k} for every integer k";
    fam["groups"] = graded_to_json(detail::hirzebruch_axioms());
    j["families"] = json::array({fam});
    return j;
  }

 private:
  std::optional<GradedCohomology> find_unlocked(const Space& space) const {
    if (auto it = entries_.find(space.name); it != entries_.end()) return it->second.graded;
    if (space.family == Family::kHirzebruch) return detail::hirzebruch_axioms();
    return std::nullopt;
  }

  void seed(const Space& space, GradedCohomology g) {
    entries_[space.name] = CatalogEntry{space.name, space.parameters, std::move(g)};
  }

  static void check_compactness(const Space& space, const GradedCohomology& g) {
    if (space.family == Family::kPoint) return;
    auto it = g.entries.find(0);
    if (it == g.entries.end()) return;
    const auto expected = space.compact ? CohomologyGroup::finite(1) : CohomologyGroup::zero();
    if (it->second.group != expected)
      throw ConflictingEntry("H^0_c(" + space.name + ") must be " + (space.compact ? "C (compact)" : "0 (noncompact)"));
  }

  mutable std::shared_mutex mutex_;
  std::map<std::string, CatalogEntry> entries_;
};

}  // namespace cohomc
