#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cohomc/lattice_support.hpp"

namespace cohomc {

class CohomologyGroup;

struct ZeroGroup {
  friend bool operator==(const ZeroGroup&, const ZeroGroup&) = default;
};

struct FiniteDim {
  std::int64_t dim = 0;
  friend bool operator==(const FiniteDim&, const FiniteDim&) = default;
};

/// Formal series spanned by the monomials whose exponents (in the
/// coordinates of `reference_chart`) lie in `support`.
struct Series {
  ExponentSupport support;
  std::string reference_chart;
  friend bool operator==(const Series& a, const Series& b) {
    return a.support == b.support && a.reference_chart == b.reference_chart;
  }
};

struct DirectSum {
  std::vector<CohomologyGroup> summands;
  friend bool operator==(const DirectSum&, const DirectSum&);
};

/// A complex vector space as the engine sees it. Normal form:
/// FiniteDim(0) and empty series are Zero; a DirectSum is flat, has no Zero
/// summands, at most one FiniteDim summand (first), and at least two entries.
class CohomologyGroup {
 public:
  using Variant = std::variant<ZeroGroup, FiniteDim, Series, DirectSum>;

  CohomologyGroup() : value_(ZeroGroup{}) {}

  static CohomologyGroup zero() { return CohomologyGroup(); }

  static CohomologyGroup finite(std::int64_t dim) {
    if (dim < 0) throw InvalidArgument("negative dimension");
    CohomologyGroup g;
    if (dim > 0) g.value_ = FiniteDim{dim};
    return g;
  }

  static CohomologyGroup series(ExponentSupport support, std::string reference_chart = {}) {
    CohomologyGroup g;
    if (!support.provably_empty()) g.value_ = Series{std::move(support), std::move(reference_chart)};
    return g;
  }

  static CohomologyGroup direct_sum(const std::vector<CohomologyGroup>& parts) {
    std::vector<CohomologyGroup> flat;
    std::int64_t finite_total = 0;
    auto add = [&](auto&& self, const CohomologyGroup& g) -> void {
      if (g.is_zero()) return;
      if (auto* f = std::get_if<FiniteDim>(&g.value_)) {
        finite_total += f->dim;
      } else if (auto* ds = std::get_if<DirectSum>(&g.value_)) {
        for (const auto& s : ds->summands) self(self, s);
      } else {
        flat.push_back(g);
      }
    };
    for (const auto& p : parts) add(add, p);
    if (finite_total > 0) flat.insert(flat.begin(), finite(finite_total));
    if (flat.empty()) return zero();
    if (flat.size() == 1) return flat.front();
    CohomologyGroup g;
    g.value_ = DirectSum{std::move(flat)};
    return g;
  }

  const Variant& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return std::holds_alternative<ZeroGroup>(value_); }
  bool is_finite() const noexcept { return is_zero() || std::holds_alternative<FiniteDim>(value_); }
  bool is_series() const noexcept { return std::holds_alternative<Series>(value_); }
  bool is_direct_sum() const noexcept { return std::holds_alternative<DirectSum>(value_); }

  /// Dimension of a Zero/FiniteDim group; nullopt for infinite-dimensional ones.
  std::optional<std::int64_t> finite_dimension() const {
    if (is_zero()) return 0;
    if (auto* f = std::get_if<FiniteDim>(&value_)) return f->dim;
    return std::nullopt;
  }

  const Series& as_series() const { return std::get<Series>(value_); }
  const DirectSum& as_direct_sum() const { return std::get<DirectSum>(value_); }

  /// Summands of a DirectSum, or the group itself.
  std::vector<CohomologyGroup> summands() const {
    if (auto* ds = std::get_if<DirectSum>(&value_)) return ds->summands;
    if (is_zero()) return {};
    return {*this};
  }

  friend bool operator==(const CohomologyGroup& a, const CohomologyGroup& b) { return a.value_ == b.value_; }

 private:
  Variant value_;
};

inline bool operator==(const DirectSum& a, const DirectSum& b) { return a.summands == b.summands; }

enum class Provenance { kAxiom, kStated, kCatalog, kSolved, kKunneth };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kAxiom: return "axiom";
    case Provenance::kStated: return "stated";
    case Provenance::kCatalog: return "catalog";
    case Provenance::kSolved: return "solved";
    case Provenance::kKunneth: return "kunneth";
  }
  return "unknown";
}

/// Machine-readable flag for an output that rests on a convention or on a
/// resolved discrepancy.
struct Note {
  std::string id;
  std::string message;
  friend auto operator<=>(const Note&, const Note&) = default;
};

struct GradedEntry {
  CohomologyGroup group;
  Provenance provenance = Provenance::kCatalog;
};

/// H^q_c for 0 <= q <= dimension. Degrees above the complex dimension are
/// implicitly Zero; degrees at or below it must be present to be read.
struct GradedCohomology {
  int dimension = 0;
  std::map<int, GradedEntry> entries;

  bool has(int q) const { return q > dimension || entries.contains(q); }

  const CohomologyGroup& at(int q) const {
    static const CohomologyGroup kZero;
    if (q < 0) throw InvalidArgument("negative degree");
    if (q > dimension) return kZero;
    auto it = entries.find(q);
    if (it == entries.end()) throw NotRegistered("degree " + std::to_string(q) + " is not known");
    return it->second.group;
  }

  void set(int q, CohomologyGroup g, Provenance p) { entries[q] = GradedEntry{std::move(g), p}; }
};

inline void to_json(json& j, const CohomologyGroup& g) {
  j = json::object();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZeroGroup>) {
          j["type"] = "zero";
        } else if constexpr (std::is_same_v<T, FiniteDim>) {
          j["type"] = "finite";
          j["dim"] = v.dim;
        } else if constexpr (std::is_same_v<T, Series>) {
          j["type"] = "series";
          j["reference_chart"] = v.reference_chart;
          j["support"] = v.support;
        } else {
          j["type"] = "direct_sum";
          j["summands"] = json::array();
          for (const auto& s : v.summands) j["summands"].push_back(s);
        }
      },
      g.value());
}

inline CohomologyGroup group_from_json(const json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    if (type == "zero") return CohomologyGroup::zero();
    if (type == "finite") return CohomologyGroup::finite(j.at("dim").get<std::int64_t>());
    if (type == "series")
      return CohomologyGroup::series(support_from_json(j.at("support")), j.value("reference_chart", std::string{}));
    if (type == "direct_sum") {
      std::vector<CohomologyGroup> parts;
      for (const auto& s : j.at("summands")) parts.push_back(group_from_json(s));
      return CohomologyGroup::direct_sum(parts);
    }
    throw InvalidArgument("unknown group type '" + type + "'");
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed group JSON: ") + e.what());
  }
}

inline void to_json(json& j, const Note& n) {
  j = json::object();
  j["id"] = n.id;
  j["message"] = n.message;
}

inline json graded_to_json(const GradedCohomology& h) {
  json j = json::object();
  for (const auto& [q, e] : h.entries) {
    json g = e.group;
    g["provenance"] = to_string(e.provenance);
    j[std::to_string(q)] = std::move(g);
  }
  return j;
}

}  // namespace cohomc
