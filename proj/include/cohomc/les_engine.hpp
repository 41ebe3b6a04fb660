#pragma once

// Long exact sequence of the additive property for X = (X \ Y) u Y,
//
//   0 -> H^0_c(X\Y) -> H^0_c(X) -> H^0_c(Y, i*O) -> H^1_c(X\Y) -> ... -> 0,
//
// and a solver that reads unknown groups off it using exactness alone.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cohomc/catalog.hpp"
#include "cohomc/cohomology_group.hpp"
#include "cohomc/section_calculus.hpp"
#include "cohomc/space_atlas.hpp"

namespace cohomc {

struct SequenceTerm {
  enum class Kind {
    kKnown,
    kUnknown,  // a complement group to solve for
    kOpaque,   // a group the inputs do not provide; never solved for
  };

  Kind kind = Kind::kKnown;
  std::string id;
  std::string label;
  int degree = 0;
  CohomologyGroup group;
  Provenance provenance = Provenance::kCatalog;

  static SequenceTerm known(std::string label, CohomologyGroup g, Provenance p, int degree = 0) {
    return {Kind::kKnown, {}, std::move(label), degree, std::move(g), p};
  }
  static SequenceTerm unknown(std::string id, std::string label, int degree) {
    return {Kind::kUnknown, std::move(id), std::move(label), degree, {}, Provenance::kSolved};
  }

  bool is_known_zero() const { return kind == Kind::kKnown && group.is_zero(); }
};

struct ExactSequence {
  std::vector<SequenceTerm> terms;
};

enum class MissingPolicy { kReject, kOpaque };

inline std::string unknown_id(int q) { return "U" + std::to_string(q); }

/// Interleaves U^q, H^q_c(X), H^q_c(Y) for q = 0..max_q between boundary zeros.
inline ExactSequence build_les(const Decomposition& dec, const GradedCohomology& hx, const GradedCohomology& hy,
                               int max_q, MissingPolicy missing = MissingPolicy::kReject) {
  if (max_q < 0) throw InvalidArgument("max_q must be nonnegative");
  const auto& xn = dec.total.name;
  const auto& cn = dec.complement.name;
  ExactSequence seq;
  seq.terms.push_back(SequenceTerm::known("0", CohomologyGroup::zero(), Provenance::kAxiom));
  for (int q = 0; q <= max_q; ++q) {
    const auto qs = std::to_string(q);
    seq.terms.push_back(SequenceTerm::unknown(unknown_id(q), "H^" + qs + "_c(" + cn + ")", q));

    const auto x_label = "H^" + qs + "_c(" + xn + ")";
    if (hx.has(q)) {
      auto it = hx.entries.find(q);
      seq.terms.push_back(SequenceTerm::known(x_label, hx.at(q),
                                              it == hx.entries.end() ? Provenance::kAxiom : it->second.provenance, q));
    } else if (missing == MissingPolicy::kOpaque) {
      SequenceTerm t;
      t.kind = SequenceTerm::Kind::kOpaque;
      t.id = "X" + qs;
      t.label = x_label;
      t.degree = q;
      seq.terms.push_back(std::move(t));
    } else {
      throw NotRegistered(x_label + " is not known");
    }

    const auto y_label = "H^" + qs + "_c(" + dec.closed.name + ", i*O)";
    if (!hy.has(q)) throw NotRegistered(y_label + " is not known");
    auto it = hy.entries.find(q);
    seq.terms.push_back(
        SequenceTerm::known(y_label, hy.at(q), it == hy.entries.end() ? Provenance::kAxiom : it->second.provenance, q));
  }
  seq.terms.push_back(SequenceTerm::known("0", CohomologyGroup::zero(), Provenance::kAxiom));
  return seq;
}

/// Maximal run of terms strictly between two known zeros.
struct Fragment {
  enum class Status { kKnownOnly, kResolved, kUnderdetermined };

  std::size_t begin = 0;  // index of the first interior term
  std::size_t end = 0;    // one past the last interior term
  Status status = Status::kKnownOnly;
  std::string rule;
};

struct Solution {
  std::map<std::string, CohomologyGroup> values;
  std::vector<Fragment> fragments;
  std::vector<std::string> underdetermined;
  std::vector<Note> notes;
};

namespace detail {

inline Fragment::Status resolve_fragment(const std::vector<SequenceTerm>& t, Fragment& f, Solution& sol) {
  std::vector<std::size_t> unknowns;
  bool opaque = false;
  for (std::size_t i = f.begin; i < f.end; ++i) {
    if (t[i].kind == SequenceTerm::Kind::kUnknown) unknowns.push_back(i);
    if (t[i].kind == SequenceTerm::Kind::kOpaque) opaque = true;
  }
  const std::size_t n = f.end - f.begin;
  auto all_other_finite = [&](std::size_t skip) {
    for (std::size_t i = f.begin; i < f.end; ++i)
      if (i != skip && !(t[i].kind == SequenceTerm::Kind::kKnown && t[i].group.is_finite())) return false;
    return true;
  };
  // Alternating sum of dimensions over a finite exact fragment vanishes.
  auto alternating = [&](std::size_t skip) {
    std::int64_t s = 0;
    for (std::size_t i = f.begin; i < f.end; ++i)
      if (i != skip) s += ((i - f.begin) % 2 == 0 ? 1 : -1) * *t[i].group.finite_dimension();
    return s;
  };

  if (unknowns.empty() && !opaque) {
    if (all_other_finite(f.end) && alternating(f.end) != 0)
      throw InconsistentFragment("known finite fragment starting at term " + std::to_string(f.begin) +
                                 " has nonzero alternating dimension sum");
    return Fragment::Status::kKnownOnly;
  }
  auto give_up = [&] {
    for (auto i : unknowns) sol.underdetermined.push_back(t[i].id);
    return Fragment::Status::kUnderdetermined;
  };
  if (opaque || unknowns.size() != 1) return give_up();

  const std::size_t u = unknowns.front();
  if (n == 1) {
    f.rule = "isolated";
    sol.values[t[u].id] = CohomologyGroup::zero();
    return Fragment::Status::kResolved;
  }
  if (n == 2) {
    f.rule = "isomorphism";
    sol.values[t[u].id] = t[u == f.begin ? f.begin + 1 : f.begin].group;
    return Fragment::Status::kResolved;
  }
  if (all_other_finite(u)) {
    // s_other + sign(u) * dim(u) = 0
    const std::int64_t sign = (u - f.begin) % 2 == 0 ? 1 : -1;
    const std::int64_t dim = -sign * alternating(u);
    if (dim < 0)
      throw InconsistentFragment("fragment forces a negative dimension for " + t[u].label);
    f.rule = "alternating_sum";
    sol.values[t[u].id] = CohomologyGroup::finite(dim);
    return Fragment::Status::kResolved;
  }
  // 0 -> C^c -> K -> U -> 0 with K spanned by germs: U = K minus constants.
  if (n == 3 && u == f.begin + 2 && t[f.begin].group.is_finite() && !t[f.begin].group.is_zero()) {
    const auto c = *t[f.begin].group.finite_dimension();
    const auto parts = t[f.begin + 1].group.summands();
    const bool germ_like = !parts.empty() && std::all_of(parts.begin(), parts.end(), [](const auto& g) {
      return g.is_series() && contains_origin(g.as_series().support);
    });
    if (!germ_like) return give_up();
    if (c > static_cast<std::int64_t>(parts.size()))
      throw InconsistentFragment("quotient by C^" + std::to_string(c) + " but only " + std::to_string(parts.size()) +
                                 " constant terms are available in " + t[f.begin + 1].label);
    std::vector<CohomologyGroup> out;
    for (const auto& g : parts) {
      const auto& s = g.as_series();
      out.push_back(CohomologyGroup::series(remove_point(s.support, ExponentVector(s.support.dimension(), 0)),
                                            s.reference_chart));
    }
    if (c < static_cast<std::int64_t>(parts.size()))
      sol.notes.push_back({"constants_removed_from_every_summand",
                           "Quotient of " + t[f.begin + 1].label + " by C^" + std::to_string(c) +
                               " removed the constant term from each of its " + std::to_string(parts.size()) +
                               " summands; a " + std::to_string(c) +
                               "-dimensional quotient nominally removes only " + std::to_string(c) + " dimension(s)."});
    f.rule = "quotient_by_constants";
    sol.values[t[u].id] = CohomologyGroup::direct_sum(out);
    return Fragment::Status::kResolved;
  }
  return give_up();
}

}  // namespace detail

/// Splits at every known zero and resolves each fragment by the patterns:
/// isolated (0->U->0), isomorphism (0->A->U->0), alternating sum (one
/// unknown, everything else finite), quotient by constants
/// (0->C^c->K->U->0). Anything else leaves its unknowns underdetermined.
inline Solution solve(const ExactSequence& seq) {
  const auto& t = seq.terms;
  if (t.empty() || !t.front().is_known_zero() || !t.back().is_known_zero())
    throw InvalidArgument("exact sequence must start and end with 0");
  Solution sol;
  std::size_t start = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!t[i].is_known_zero()) continue;
    if (i > start) {
      Fragment f{start, i, Fragment::Status::kKnownOnly, {}};
      f.status = detail::resolve_fragment(t, f, sol);
      sol.fragments.push_back(std::move(f));
    }
    start = i + 1;
  }
  return sol;
}

/// Replaces every solved unknown by a known term.
inline ExactSequence substitute(const ExactSequence& seq, const Solution& sol) {
  ExactSequence out = seq;
  for (auto& term : out.terms) {
    if (term.kind != SequenceTerm::Kind::kUnknown) continue;
    if (auto it = sol.values.find(term.id); it != sol.values.end()) {
      term.kind = SequenceTerm::Kind::kKnown;
      term.group = it->second;
      term.provenance = Provenance::kSolved;
    }
  }
  return out;
}

inline std::string to_string(Fragment::Status s) {
  switch (s) {
    case Fragment::Status::kKnownOnly: return "known";
    case Fragment::Status::kResolved: return "resolved";
    case Fragment::Status::kUnderdetermined: return "underdetermined";
  }
  return "?";
}

/// Ordered terms (solved values filled in) plus the zero-split fragments.
inline json sequence_to_json(const ExactSequence& seq, const Solution& sol) {
  const auto filled = substitute(seq, sol);
  json j = json::object();
  j["terms"] = json::array();
  for (const auto& term : filled.terms) {
    json jt = json::object();
    jt["label"] = term.label;
    if (term.kind == SequenceTerm::Kind::kKnown) {
      jt["group"] = term.group;
      jt["provenance"] = to_string(term.provenance);
    } else {
      jt["group"] = json{{"type", "underdetermined"}};
      jt["provenance"] = term.kind == SequenceTerm::Kind::kOpaque ? "missing" : "unsolved";
    }
    j["terms"].push_back(std::move(jt));
  }
  j["fragments"] = json::array();
  for (const auto& f : sol.fragments) {
    json jf = json::object();
    jf["begin"] = f.begin;
    jf["end"] = f.end;
    jf["status"] = to_string(f.status);
    if (!f.rule.empty()) jf["rule"] = f.rule;
    j["fragments"].push_back(std::move(jf));
  }
  return j;
}

/// Graded groups of a closed subspace: sections in degree 0, zero above.
inline GradedCohomology subspace_cohomology(const Decomposition& dec) {
  GradedCohomology g;
  g.dimension = dec.closed.intrinsic.complex_dimension();
  g.set(0, subspace_sections(dec.total, dec.closed).value, Provenance::kSolved);
  for (int q = 1; q <= g.dimension; ++q) g.set(q, CohomologyGroup::zero(), Provenance::kAxiom);
  return g;
}

struct AdditiveResult {
  GradedCohomology graded;
  std::vector<int> underdetermined;
  std::vector<Note> notes;
  ExactSequence sequence;
  Solution solution;
  std::string via;
};

/// H^*_c of `dec.complement` from the catalog's H^*_c(X), the sections on Y
/// and exactness. With `partial` unset an unforced degree throws
/// Underdetermined; otherwise it is listed in the result.
inline AdditiveResult compute_additive(const Decomposition& dec, const Catalog& catalog,
                                       std::optional<int> max_q = std::nullopt, bool partial = false) {
  const int top = max_q.value_or(dec.total.complex_dimension());
  const auto hx = catalog.lookup(dec.total);
  const auto hy = subspace_cohomology(dec);

  AdditiveResult r;
  r.via = dec.label();
  r.sequence = build_les(dec, hx, hy, top, MissingPolicy::kOpaque);
  if (!dec.complement.compact) {
    // A noncompact space carries no nonzero holomorphic function of compact support.
    r.sequence.terms[1] = SequenceTerm::known(r.sequence.terms[1].label, CohomologyGroup::zero(), Provenance::kAxiom, 0);
  }
  r.solution = solve(r.sequence);
  r.graded.dimension = dec.complement.complex_dimension();
  for (int q = 0; q <= top; ++q) {
    const auto& term = r.sequence.terms[1 + 3 * static_cast<std::size_t>(q)];
    if (term.kind == SequenceTerm::Kind::kKnown) {
      r.graded.set(q, term.group, term.provenance);
    } else if (auto it = r.solution.values.find(term.id); it != r.solution.values.end()) {
      r.graded.set(q, it->second, Provenance::kSolved);
    } else {
      r.underdetermined.push_back(q);
    }
  }

  r.notes = dec.notes;
  r.notes.insert(r.notes.end(), r.solution.notes.begin(), r.solution.notes.end());
  for (int q : r.underdetermined) {
    r.notes.push_back({"underdetermined_degree_" + std::to_string(q),
                       "H^" + std::to_string(q) + "_c(" + dec.complement.name +
                           ") is not forced by exactness: a neighbouring group in the sequence for " + dec.label() +
                           " is unknown."});
  }
  if (!partial && !r.underdetermined.empty())
    throw Underdetermined(r.underdetermined.front(), "H^" + std::to_string(r.underdetermined.front()) + "_c(" +
                                                         dec.complement.name + ") via " + dec.label());
  return r;
}

}  // namespace cohomc
