#pragma once

// Method dispatch shared by the CLI and the acceptance suite: compute a
// space's graded groups by one method, or cross-check two methods.

#include <optional>
#include <string>
#include <vector>

#include "cohomc/catalog.hpp"
#include "cohomc/kunneth.hpp"
#include "cohomc/les_engine.hpp"
#include "cohomc/oracle.hpp"
#include "cohomc/space_atlas.hpp"

namespace cohomc {

enum class Method { kAdditive, kKunneth, kCatalog };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::kAdditive: return "additive";
    case Method::kKunneth: return "kunneth";
    case Method::kCatalog: return "catalog";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  if (s == "additive") return Method::kAdditive;
  if (s == "kunneth") return Method::kKunneth;
  if (s == "catalog") return Method::kCatalog;
  throw InvalidArgument("unknown method '" + s + "' (additive, kunneth, catalog)");
}

struct ComputeRequest {
  Method method = Method::kAdditive;
  std::optional<int> max_q;
  bool partial = false;
  std::optional<std::string> via;  // decomposition label or total-space name
  std::int64_t k_hint = 1;
  bool register_result = true;
};

struct ComputeOutcome {
  Space space;
  Method method = Method::kAdditive;
  GradedCohomology graded;
  std::vector<int> underdetermined;
  std::vector<Note> notes;
  json explain;
};

inline Decomposition choose_decomposition(const Space& space, const ComputeRequest& req) {
  auto decs = decompositions_for(space, req.k_hint);
  if (decs.empty()) throw NotRegistered("no registered decomposition has complement " + space.name);
  if (!req.via) return decs.front();
  for (auto& d : decs)
    if (d.label() == *req.via || d.total.name == *req.via || d.closed.name == *req.via) return d;
  throw NotRegistered("no decomposition of " + space.name + " matches '" + *req.via + "'");
}

inline ComputeOutcome run_method(const Space& space, const ComputeRequest& req, Catalog& catalog) {
  ComputeOutcome out;
  out.space = space;
  out.method = req.method;
  switch (req.method) {
    case Method::kAdditive: {
      const auto dec = choose_decomposition(space, req);
      auto r = compute_additive(dec, catalog, req.max_q, req.partial);
      out.graded = std::move(r.graded);
      out.underdetermined = std::move(r.underdetermined);
      out.notes = std::move(r.notes);
      out.explain = sequence_to_json(r.sequence, r.solution);
      out.explain["via"] = r.via;
      break;
    }
    case Method::kKunneth: {
      auto r = compute_kunneth(space, catalog, req.max_q);
      out.graded = std::move(r.graded);
      out.notes = std::move(r.notes);
      out.explain = kunneth_to_json(r);
      break;
    }
    case Method::kCatalog: {
      out.graded = catalog.lookup(space);
      out.explain = json::object();
      out.explain["entry"] = space.name;
      return out;
    }
  }
  if (req.register_result) catalog.register_graded(space, out.graded);
  return out;
}

inline json outcome_to_json(const ComputeOutcome& o, bool explain) {
  json j = json::object();
  j["space"] = o.space.name;
  j["method"] = to_string(o.method);
  json groups = graded_to_json(o.graded);
  for (int q : o.underdetermined) groups[std::to_string(q)] = json{{"type", "underdetermined"}};
  // graded_to_json orders by degree; re-sort after inserting underdetermined ones.
  json sorted = json::object();
  for (int q = 0; q <= o.graded.dimension; ++q)
    if (groups.contains(std::to_string(q))) sorted[std::to_string(q)] = groups[std::to_string(q)];
  j["groups"] = std::move(sorted);
  j["notes"] = json::array();
  for (const auto& n : o.notes) j["notes"].push_back(n);
  if (explain) j["explain"] = o.explain;
  return j;
}

struct VerifyOutcome {
  std::map<int, Verdict> verdicts;
  bool all_equal = true;
};

/// Runs both methods (the first result is registered) and compares every
/// degree with the oracle at `bound`.
inline VerifyOutcome verify(const Space& space, Method first, Method second, std::int64_t bound, Catalog& catalog,
                            ComputeRequest base = {}) {
  base.method = first;
  base.partial = true;
  const auto a = run_method(space, base, catalog);
  base.method = second;
  base.register_result = false;
  const auto b = run_method(space, base, catalog);
  VerifyOutcome v;
  const int top = std::max(a.graded.dimension, b.graded.dimension);
  for (int q = 0; q <= top; ++q) {
    const bool ha = a.graded.entries.contains(q) || q > a.graded.dimension;
    const bool hb = b.graded.entries.contains(q) || q > b.graded.dimension;
    Verdict verdict;
    if (!ha || !hb)
      verdict = {VerdictKind::kIncomparable, std::nullopt, "degree not determined by both methods"};
    else
      verdict = groups_equal(a.graded.at(q), b.graded.at(q), bound);
    v.all_equal = v.all_equal && verdict.equal();
    v.verdicts[q] = std::move(verdict);
  }
  return v;
}

}  // namespace cohomc
