#pragma once

// Brute-force analysis of finite commutative semigroups given by Cayley
// tables, and the bridge that turns a finite set of ideal classes of one of
// the exact models into such a table. Used as an independent cross-check of
// the models' idempotent classification and group operations.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tclass/errors.hpp"

namespace tclass {

using CayleyTable = std::vector<std::vector<std::size_t>>;

class FiniteCommSemigroup {
 public:
  static constexpr std::size_t kDefaultAssociativityCap = 512;

  /// Validates shape, index range, commutativity and (exhaustively)
  /// associativity. Throws InvalidArgument on any violation, or when the
  /// table is larger than `associativity_cap`.
  explicit FiniteCommSemigroup(CayleyTable table,
                               std::size_t associativity_cap = kDefaultAssociativityCap);

  std::size_t size() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const CayleyTable& table() const { return table_; }

  /// Fixture format: first line m, then m rows of m 0-based indices.
  static FiniteCommSemigroup read(std::istream& in);
  void write(std::ostream& out) const;

  friend bool operator==(const FiniteCommSemigroup&, const FiniteCommSemigroup&) = default;

 private:
  CayleyTable table_;
};

bool is_clifford(const FiniteCommSemigroup& s);
std::vector<std::size_t> idempotents(const FiniteCommSemigroup& s);

struct ConstituentGroup {
  /// The idempotent e, as a semigroup index.
  std::size_t identity = 0;
  /// Position of e inside `elements`.
  std::size_t identity_position = 0;
  /// Sorted indices of G_e inside the semigroup.
  std::vector<std::size_t> elements;
  /// The group table over positions in `elements`.
  FiniteCommSemigroup group;
};

/// G_e = {ae | abe = e for some b}, with the group axioms verified. Throws
/// NotIdempotent when e*e != e.
ConstituentGroup constituent_group(const FiniteCommSemigroup& s, std::size_t e);

/// A model of ideal classes the oracle can drive.
template <class M>
concept ClassModel = requires(const M& m, const typename M::Class& c) {
  { m.mul(c, c) } -> std::same_as<typename M::Class>;
  { m.idempotent_of(c) } -> std::same_as<typename M::Class>;
  { m.group_inv(c) } -> std::same_as<typename M::Class>;
  { m.render(c) } -> std::convertible_to<std::string>;
} && std::totally_ordered<typename M::Class>;

inline constexpr std::size_t kUnknownProduct = std::numeric_limits<std::size_t>::max();

template <class Class>
struct SampleClosure {
  /// Sorted by canonical form; the position is the element index.
  std::vector<Class> elements;
  std::map<Class, std::size_t> dictionary;
  /// Products, kUnknownProduct where the budget stopped exploration.
  CayleyTable table;
  bool saturated = false;
  /// Present iff saturated.
  std::optional<FiniteCommSemigroup> semigroup;
};

/// Multiplies pairs of classes until the set is closed or holds `budget`
/// elements. Requires budget >= number of distinct seeds.
template <ClassModel M>
SampleClosure<typename M::Class> sample_closure(const M& model,
                                                const std::vector<typename M::Class>& seeds,
                                                std::size_t budget) {
  using Class = typename M::Class;
  std::vector<Class> found;
  std::map<Class, std::size_t> index;
  for (const auto& s : seeds) {
    if (index.emplace(s, found.size()).second) found.push_back(s);
  }
  if (budget < found.size()) throw InvalidArgument("closure budget below the number of seeds");

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> products;
  bool saturated = true;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Class p = model.mul(found[i], found[j]);
      auto it = index.find(p);
      if (it == index.end()) {
        if (found.size() == budget) {
          saturated = false;
          continue;
        }
        it = index.emplace(p, found.size()).first;
        found.push_back(std::move(p));
      }
      products[{i, j}] = it->second;
    }
  }

  SampleClosure<Class> out;
  out.elements = found;
  std::sort(out.elements.begin(), out.elements.end());
  for (std::size_t k = 0; k < out.elements.size(); ++k) out.dictionary.emplace(out.elements[k], k);
  std::vector<std::size_t> relabel(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) relabel[k] = out.dictionary.at(found[k]);

  const std::size_t m = found.size();
  out.table.assign(m, std::vector<std::size_t>(m, kUnknownProduct));
  for (const auto& [ij, p] : products) {
    const auto a = relabel[ij.first];
    const auto b = relabel[ij.second];
    out.table[a][b] = out.table[b][a] = relabel[p];
  }
  out.saturated = saturated;
  if (saturated) out.semigroup.emplace(out.table);
  return out;
}

struct CrossCheckReport {
  std::size_t elements = 0;
  std::size_t idempotent_count = 0;
  std::size_t checks = 0;
  /// Set when the closure was not saturated; only known products were checked.
  bool partial = false;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Compares the oracle's view of a closure with the model: every table
/// entry, the Clifford property, the idempotent set and each constituent
/// group element by element (through the shared dictionary).
template <ClassModel M>
CrossCheckReport cross_check(const SampleClosure<typename M::Class>& closure, const M& model) {
  CrossCheckReport report;
  report.elements = closure.elements.size();
  report.partial = !closure.saturated;
  auto check = [&](bool ok, auto&& msg) {
    ++report.checks;
    if (!ok) report.mismatches.push_back(msg());
  };
  const auto& elems = closure.elements;
  const std::size_t m = elems.size();

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const std::size_t entry = closure.table[a][b];
      if (entry == kUnknownProduct) continue;
      const auto it = closure.dictionary.find(model.mul(elems[a], elems[b]));
      check(it != closure.dictionary.end() && it->second == entry, [&] {
        return "table[" + std::to_string(a) + "][" + std::to_string(b) + "] = " +
               std::to_string(entry) + " but the model gives " +
               model.render(model.mul(elems[a], elems[b]));
      });
    }
  }
  if (!closure.semigroup) return report;
  const FiniteCommSemigroup& s = *closure.semigroup;

  check(is_clifford(s), [] { return std::string("closure is not a Clifford semigroup"); });
  const auto oracle_idem = idempotents(s);
  report.idempotent_count = oracle_idem.size();
  std::vector<std::size_t> model_idem;
  for (std::size_t a = 0; a < m; ++a) {
    if (model.idempotent_of(elems[a]) == elems[a]) model_idem.push_back(a);
  }
  check(oracle_idem == model_idem, [&] {
    return "oracle finds " + std::to_string(oracle_idem.size()) + " idempotents, model " +
           std::to_string(model_idem.size());
  });

  for (std::size_t e : oracle_idem) {
    ConstituentGroup g = constituent_group(s, e);
    std::vector<std::size_t> model_members;
    for (std::size_t a = 0; a < m; ++a) {
      if (model.idempotent_of(elems[a]) == elems[e]) model_members.push_back(a);
    }
    check(g.elements == model_members, [&] {
      return "constituent group of " + model.render(elems[e]) + " has " +
             std::to_string(g.elements.size()) + " oracle members, " +
             std::to_string(model_members.size()) + " model members";
    });
    for (std::size_t pos = 0; pos < g.elements.size(); ++pos) {
      const std::size_t a = g.elements[pos];
      std::size_t inv_pos = 0;
      while (inv_pos < g.elements.size() && g.group.mul(pos, inv_pos) != g.identity_position) ++inv_pos;
      const auto it = closure.dictionary.find(model.group_inv(elems[a]));
      check(inv_pos < g.elements.size() && it != closure.dictionary.end() &&
                it->second == g.elements[inv_pos],
            [&] { return "inverse of " + model.render(elems[a]) + " disagrees"; });
    }
  }
  return report;
}

}  // namespace tclass
