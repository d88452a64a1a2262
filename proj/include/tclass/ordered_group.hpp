#pragma once

// Value groups of valuation domains, presented as finite lexicographic
// towers C_1 x ... x C_n of archimedean subgroups of the rationals.
//
// Levels are 1-based throughout: component 1 is the most significant, and the
// convex subgroup H_i consists of the elements whose first i coordinates vanish.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tclass/rational.hpp"

namespace tclass {

enum class ComponentKind { Discrete, FullRational, LocalizedIntegers };

class ArchComponent {
 public:
  static ArchComponent discrete();
  static ArchComponent full_rational();
  /// Z[1/S]; `primes` must be a nonempty list of primes (duplicates removed).
  static ArchComponent localized(std::vector<std::uint64_t> primes);

  ComponentKind kind() const { return kind_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  bool has_least_positive() const { return kind_ == ComponentKind::Discrete; }
  bool is_dense() const { return !has_least_positive(); }

  bool contains(const Rational& q) const;

  /// Canonical representative of q modulo this component: the class of q in
  /// Q / C. Members reduce to 0.
  Rational reduce(const Rational& q) const;

  /// "Z", "Q" or "Z[1/2,1/3]".
  std::string describe() const;

  friend bool operator==(const ArchComponent&, const ArchComponent&) = default;

 private:
  ArchComponent(ComponentKind kind, std::vector<std::uint64_t> primes)
      : kind_(kind), primes_(std::move(primes)) {}

  ComponentKind kind_;
  std::vector<std::uint64_t> primes_;
};

inline bool is_member(const ArchComponent& c, const Rational& q) { return c.contains(q); }

class ValueGroup {
 public:
  explicit ValueGroup(std::vector<ArchComponent> components);

  std::size_t rank() const { return components_.size(); }
  /// Component at 1-based level i.
  const ArchComponent& at_level(std::size_t level) const;
  const std::vector<ArchComponent>& components() const { return components_; }

  /// The prefix group C_1 x ... x C_level, i.e. the quotient by H_level.
  ValueGroup truncated(std::size_t level) const;

  std::string describe() const;

  friend bool operator==(const ValueGroup&, const ValueGroup&) = default;

 private:
  std::vector<ArchComponent> components_;
};

using GroupHandle = std::shared_ptr<const ValueGroup>;

GroupHandle make_group(std::vector<ArchComponent> components);
GroupHandle make_group(ValueGroup group);

struct GroupElement {
  std::vector<Rational> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// H_index; index 0 is the whole group, index n the trivial subgroup.
struct ConvexSubgroup {
  std::size_t index = 0;

  friend bool operator==(const ConvexSubgroup&, const ConvexSubgroup&) = default;
};

/// Throws MalformedElement unless `a` has rank(g) coordinates, each a member
/// of its component.
void validate(const ValueGroup& g, const GroupElement& a);

std::strong_ordering compare(const ValueGroup& g, const GroupElement& a,
                             const GroupElement& b);
GroupElement add(const ValueGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const ValueGroup& g, const GroupElement& a);
GroupElement zero(const ValueGroup& g);

/// The chain H_0 ⊇ H_1 ⊇ ... ⊇ H_n.
std::vector<ConvexSubgroup> convex_subgroups(const ValueGroup& g);
bool contains(const ValueGroup& g, ConvexSubgroup h, const GroupElement& a);

/// Whether Γ / H has a least positive element. Requires 1 <= h.index <= n;
/// throws UndefinedQuotient for H_0.
bool quotient_has_least_positive(const ValueGroup& g, ConvexSubgroup h);

/// Every quotient by a proper convex subgroup has a least positive element.
bool is_strongly_discrete(const ValueGroup& g);

}  // namespace tclass
