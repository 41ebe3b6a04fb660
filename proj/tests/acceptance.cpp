// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cohomc/cli.hpp"
#include "cohomc/cohomc.hpp"

using namespace cohomc;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << (why.tellp() > 0 ? "; " : "") << what;
    }
  }
};

ExponentSupport support_of(const CohomologyGroup& g) { return g.as_series().support; }

bool has_note(const std::vector<Note>& notes, const std::string& id) {
  return std::any_of(notes.begin(), notes.end(), [&](const Note& n) { return n.id == id; });
}

ComputeOutcome additive(const Space& s, Catalog& cat, std::optional<std::string> via = std::nullopt, bool partial = false) {
  ComputeRequest req;
  req.method = Method::kAdditive;
  req.via = std::move(via);
  req.partial = partial;
  return run_method(s, req, cat);
}

// Independent count over 0 <= n, m <= b.
std::int64_t count_box(std::int64_t b, const std::function<bool(std::int64_t, std::int64_t)>& pred) {
  std::int64_t c = 0;
  for (std::int64_t n = 0; n <= b; ++n)
    for (std::int64_t m = 0; m <= b; ++m) c += pred(n, m) ? 1 : 0;
  return c;
}

void criterion_1(Check& c) {
  Catalog cat;
  const auto o = additive(make_affine(1), cat);
  c.expect(o.graded.at(0).is_zero(), "H^0 not zero");
  const auto& g = o.graded.at(1);
  c.expect(g.is_series(), "H^1 not a series");
  if (!g.is_series()) return;
  c.expect(support_of(g) == ExponentSupport(1, {at_least(1, 0, 1)}), "support is not {e >= 1}");
  c.expect(g.as_series().reference_chart == "P1.U1", "not in the chart at infinity");
  // Back in the affine coordinate z = 1/w the support is {i <= -1}.
  const auto affine = transform(support_of(g), IntMatrix{{-1}});
  c.expect(affine == ExponentSupport(1, {at_most(1, 0, -1)}), "affine form is not {i <= -1}");
  c.expect(truncated_dimension(g, 10) == 10, "truncated dimension at B=10 is not 10");
  c.expect(has_note(o.notes, "c1_coordinate_convention"), "coordinate convention note missing");
}

void criterion_2(Check& c) {
  Catalog cat;
  const auto o = additive(make_cstar(), cat);
  const auto& g = o.graded.at(1);
  c.expect(g.is_direct_sum() && g.summands().size() == 2, "H^1 is not a sum of two series");
  if (!g.is_direct_sum()) return;
  const auto neg = CohomologyGroup::series(ExponentSupport(1, {at_most(1, 0, -1)}));
  const auto pos = CohomologyGroup::series(ExponentSupport(1, {at_least(1, 0, 1)}));
  c.expect(groups_equal(g, CohomologyGroup::direct_sum({neg, pos}), 16).equal(), "supports are not {i<=-1} + {j>=1}");
  for (const auto& s : g.summands()) c.expect(s.as_series().reference_chart == "P1.U0", "summand not in the affine chart");
  c.expect(has_note(o.notes, "constants_removed_from_every_summand"), "bookkeeping note missing");
}

void criterion_3(Check& c) {
  Catalog cat;
  const auto o = additive(make_c2_minus_origin(), cat, std::nullopt, true);
  c.expect(o.graded.at(1).is_series() && support_of(o.graded.at(1)) == ExponentSupport::orthant(2),
           "H^1 is not the full orthant");
  c.expect(o.underdetermined == std::vector<int>{2}, "H^2 not reported underdetermined");
  c.expect(has_note(o.notes, "c2minus0_strict_exponents"), "strict-exponent note missing");
  Catalog strict;
  try {
    additive(make_c2_minus_origin(), strict);
    c.expect(false, "non-partial run did not raise");
  } catch (const Underdetermined& e) {
    c.expect(e.degree() == 2, "wrong underdetermined degree");
  }
}

void criterion_4(Check& c) {
  Catalog cat;
  const auto o = additive(make_line_bundle(-1), cat, "P2");
  const auto& g = o.graded.at(1);
  c.expect(g.is_series() && support_of(g) == remove_point(ExponentSupport::orthant(2), {0, 0}),
           "H^1 is not orthant minus origin");
  c.expect(o.graded.at(2).is_zero(), "H^2 not zero");
  const auto oracle = count_box(10, [](auto n, auto m) { return n || m; });
  c.expect(oracle == 120 && truncated_dimension(g, 10) == oracle, "truncated dimension at B=10 is not 120");
}

void criterion_5(Check& c) {
  for (std::int64_t k = 1; k <= 4; ++k) {
    Catalog cat;
    const auto o = additive(make_line_bundle(-k), cat, "H_{" + std::to_string(k) + "} \\ Y_1");
    const auto& g = o.graded.at(1);
    if (!g.is_series()) {
      c.expect(false, "k=" + std::to_string(k) + ": H^1 not a series");
      continue;
    }
    const auto expect = remove_point(
        ExponentSupport(2, {at_least(2, 0, 0), at_least(2, 1, 0), LinearConstraint({-1, k}, 0)}), {0, 0});
    c.expect(support_of(g) == expect, "k=" + std::to_string(k) + ": support is not the km-n cone minus origin");
    c.expect(truncated_dimension(g, 12) == count_box(12, [k](auto n, auto m) { return k * m - n >= 0 && (n || m); }),
             "k=" + std::to_string(k) + ": enumeration mismatch");
    c.expect(o.graded.at(2).is_zero(), "k=" + std::to_string(k) + ": H^2 not zero");
    if (k == 1) {
      c.expect(truncated_dimension(g, 10) == 65, "k=1 truncated dimension at B=10 is not 65");
      Catalog other;
      const auto plane = additive(make_line_bundle(-1), other, "P2").graded.at(1);
      // (n, m) in X1 goes to (n, m - n) in the plane's chart.
      const auto aligned = CohomologyGroup::series(transform(support_of(g), IntMatrix{{1, 0}, {-1, 1}}));
      c.expect(groups_equal(aligned, plane, 16).equal(), "k=1 group not equal to the plane route after alignment");
    }
  }
}

void criterion_6(Check& c) {
  for (std::int64_t k = 1; k <= 4; ++k) {
    Catalog cat;
    const auto o = additive(make_line_bundle(k), cat);
    c.expect(o.explain.at("via") == "H_{" + std::to_string(k) + "} \\ Y_3", "k=" + std::to_string(k) + ": wrong route");
    c.expect(o.graded.at(1).is_zero() && o.graded.at(2).is_zero(), "k=" + std::to_string(k) + ": H^1 or H^2 nonzero");
  }
}

void criterion_7(Check& c) {
  const auto p = make_p1_times_c1();
  for (std::int64_t k : {0, 1, 2, 3}) {
    Catalog cat;
    ComputeRequest req;
    req.k_hint = k;
    const auto a = run_method(p, req, cat);
    const auto ray = CohomologyGroup::series(ExponentSupport(1, {at_least(1, 0, 1)}));
    c.expect(a.graded.at(1).is_series() && groups_equal(a.graded.at(1), ray, 16).equal(),
             "additive H^1 is not the ray {n >= 1} (k=" + std::to_string(k) + ")");
    c.expect(a.graded.at(2).is_zero(), "additive H^2 nonzero");
    Catalog fresh;
    const auto v = verify(p, Method::kAdditive, Method::kKunneth, 16, fresh, req);
    c.expect(v.all_equal, "verify additive,kunneth not all Equal (k=" + std::to_string(k) + ")");
  }
  std::ostringstream out, err;
  c.expect(run_cli({"verify", "--builtin", "P1xC1", "--methods", "additive,kunneth", "--bound", "16"}, out, err) == 0,
           "cli verify exit code nonzero");
}

void criterion_8(Check& c) {
  const auto h = make_hirzebruch(0);
  const auto y1 = builtin_decompositions(h).at(1);
  const auto g = subspace_sections(h, y1.closed).value;
  c.expect(g.is_series(), "Y_1 sections are not a series");
  if (g.is_series()) {
    const auto members = enumerate(support_of(g), 16);
    std::vector<ExponentVector> expect;
    for (std::int64_t n = 0; n <= 16; ++n)
      for (std::int64_t m = 0; m <= 16; ++m)
        if (0 * m - n >= 0) expect.push_back({n, m});
    c.expect(members == expect, "support is not {n = 0, m >= 0}");
  }
  try {
    Catalog cat;
    additive(make_line_bundle(0), cat, "H_{0} \\ Y_1");
  } catch (const std::exception& e) {
    c.expect(false, std::string("pipeline failed: ") + e.what());
  }
}

// Compact restatement of the randomized property suites.
void criterion_9(Check& c) {
  std::mt19937_64 rng(9);
  auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };

  for (int t = 0; t < 40; ++t) {
    const auto d = static_cast<std::size_t>(uni(1, 3));
    std::vector<LinearConstraint> cs;
    for (auto i = uni(0, 3); i > 0; --i) {
      std::vector<std::int64_t> n(d);
      do
        for (auto& x : n) x = uni(-2, 2);
      while (std::all_of(n.begin(), n.end(), [](auto x) { return x == 0; }));
      cs.emplace_back(n, uni(-2, 1));
    }
    const ExponentSupport s(d, cs);
    IntMatrix m = IntMatrix::identity(d);
    if (d > 1) {
      auto rows = m.to_rows();
      rows[0][d - 1] = uni(-2, 2);
      m = IntMatrix::from_rows(rows);
    }
    const auto b = d == 3 ? std::int64_t{6} : uni(1, 32);
    const auto img = transform(s, m);
    for (const auto& v : enumerate(ExponentSupport::full(d), b))
      if (contains(s, v) != contains(img, m.apply(v))) c.expect(false, "transform bijectivity");
    const auto sq = intersect(s, img);
    if (!equals_up_to(sq, intersect(img, s), b) || !equals_up_to(intersect(s, s), s, b)) c.expect(false, "intersect laws");
    const auto members = enumerate(s, b);
    if (!members.empty()) {
      const auto r = remove_point(s, members.front());
      if (contains(r, members.front()) || enumerate(r, b).size() + 1 != members.size()) c.expect(false, "remove_point");
    }
  }

  for (std::int64_t k = -8; k <= 8; ++k) {
    const auto h = make_hirzebruch(k);
    const auto loop = transition(h, "X3", "X0").matrix * transition(h, "X2", "X3").matrix *
                      transition(h, "X1", "X2").matrix * transition(h, "X0", "X1").matrix;
    if (loop != IntMatrix::identity(2)) c.expect(false, "cocycle k=" + std::to_string(k));
  }

  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(uni(1, 7));
    std::vector<std::int64_t> rank(n, 0), dims(n);
    for (std::size_t i = 0; i + 1 < n; ++i) rank[i] = uni(0, 4);
    for (std::size_t i = 0; i < n; ++i) dims[i] = (i ? rank[i - 1] : 0) + rank[i];
    const auto hidden = static_cast<std::size_t>(uni(0, static_cast<std::int64_t>(n) - 1));
    ExactSequence seq;
    seq.terms.push_back(SequenceTerm::known("0", CohomologyGroup::zero(), Provenance::kAxiom));
    for (std::size_t i = 0; i < n; ++i)
      seq.terms.push_back(i == hidden ? SequenceTerm::unknown("U", "U", 0)
                                      : SequenceTerm::known("V", CohomologyGroup::finite(dims[i]), Provenance::kAxiom));
    seq.terms.push_back(SequenceTerm::known("0", CohomologyGroup::zero(), Provenance::kAxiom));
    const auto sol = solve(seq);
    if (!sol.values.contains("U") || sol.values.at("U") != CohomologyGroup::finite(dims[hidden]))
      c.expect(false, "solver fragment " + std::to_string(t));
  }

  for (int t = 0; t < 50; ++t) {
    GradedCohomology a, b;
    a.dimension = static_cast<int>(uni(0, 3));
    b.dimension = static_cast<int>(uni(0, 3));
    std::vector<std::int64_t> da(4, 0), db(4, 0);
    for (int q = 0; q <= a.dimension; ++q) a.set(q, CohomologyGroup::finite(da[q] = uni(0, 5)), Provenance::kCatalog);
    for (int q = 0; q <= b.dimension; ++q) b.set(q, CohomologyGroup::finite(db[q] = uni(0, 5)), Provenance::kCatalog);
    for (int n = 0; n <= a.dimension + b.dimension; ++n) {
      std::int64_t expect = 0;
      for (int p = 0; p <= n; ++p)
        if (p <= 3 && n - p <= 3) expect += da[p] * db[n - p];
      if (kunneth_degree(a, b, n) != CohomologyGroup::finite(expect)) c.expect(false, "kunneth convolution");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 C1 via P1 minus infinity", criterion_1},
      {"2 C* via P1 minus two points", criterion_2},
      {"3 C2 minus origin", criterion_3},
      {"4 E_{-1} via P2 minus a point", criterion_4},
      {"5 E_{-k} via H_k minus Y_1, k=1..4", criterion_5},
      {"6 E_k via H_k minus Y_3, k=1..4", criterion_6},
      {"7 P1 x C1 additive vs Kunneth", criterion_7},
      {"8 H_0 sections along Y_1", criterion_8},
      {"9 property suites", criterion_9},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << name;
    if (!c.ok) std::cout << " (" << c.why.str() << ")";
    std::cout << "\n";
    failures += c.ok ? 0 : 1;
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed in "
            << ms << " ms\n";
  return failures;
}
