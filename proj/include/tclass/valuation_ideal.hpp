#pragma once

// Nonzero fractional ideals of a valuation domain V, modelled as upper sets
// (cuts) of its value group Γ.
//
// A cut ⟨i; b; side⟩ denotes {x ∈ Γ : prefix_i(x) ≥ b} (Closed) or
// {x ∈ Γ : prefix_i(x) > b} (Open), compared lexicographically on the first
// i coordinates. Every `Cut` value is canonical; `normalize` is the only way
// to build one from raw data. Canonical form:
//
//   * the boundary is truncated at its first coordinate j that is not a member
//     of C_j; the set is then {prefix_j > b_1..b_j}. For a discrete C_j this
//     is rewritten as Closed at ceil(b_j); for a dense C_j the side is Open.
//     Example over (Z, Q): ⟨2; (1/2, 5); Closed⟩ becomes ⟨1; 1; Closed⟩.
//   * with an all-member boundary, Open over a discrete C_i becomes Closed at
//     b + e_i. Example over Z: Open at 0 becomes Closed at 1.
//   * over a dense C_i, Closed at a non-member is the same set as Open at it;
//     Open is kept. Example over Z[1/2]: Closed at 1/3 becomes Open at 1/3.
//
// Distinct canonical cuts denote distinct sets. Closed therefore only ever
// appears with an all-member boundary, and Open only at a dense level.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tclass/idempotent_form.hpp"
#include "tclass/ordered_group.hpp"

namespace tclass {

enum class Side { Closed, Open };

/// Raw, possibly non-canonical cut data.
struct CutSpec {
  std::size_t level = 0;
  std::vector<Rational> boundary;
  Side side = Side::Closed;
};

class Cut {
 public:
  const ValueGroup& group() const { return *group_; }
  const GroupHandle& group_handle() const { return group_; }
  std::size_t level() const { return level_; }
  const std::vector<Rational>& boundary() const { return boundary_; }
  Side side() const { return side_; }

  bool contains(const GroupElement& x) const;

  /// A principal ideal x·V: full level, Closed.
  bool is_principal() const { return side_ == Side::Closed && level_ == group_->rank(); }

  CutSpec spec() const { return {level_, boundary_, side_}; }
  std::string to_string() const;

  friend bool operator==(const Cut& a, const Cut& b);
  /// Orders by (level, side, boundary). Only meaningful within one group.
  friend std::strong_ordering operator<=>(const Cut& a, const Cut& b);

 private:
  friend Cut normalize(const CutSpec& spec, const GroupHandle& group);

  Cut(GroupHandle group, std::size_t level, std::vector<Rational> boundary, Side side)
      : group_(std::move(group)), level_(level), boundary_(std::move(boundary)), side_(side) {}

  GroupHandle group_;
  std::size_t level_;
  std::vector<Rational> boundary_;
  Side side_;
};

/// Throws MalformedCut for a level outside 1..n or a boundary of the wrong length.
Cut normalize(const CutSpec& spec, const GroupHandle& group);

/// ⟨level; 0; Closed⟩: the overring V_P for P the prime attached to H_level.
/// Level n gives V itself.
Cut ring_cut(const GroupHandle& group, std::size_t level);
Cut ring_cut(const GroupHandle& group);
/// ⟨level; 0; Open⟩ normalized: the prime attached to H_level. Level n is
/// the maximal ideal.
Cut prime_cut(const GroupHandle& group, std::size_t level);
Cut principal(const GroupHandle& group, const GroupElement& value);
Cut translate(const Cut& a, const GroupElement& shift);

/// Upper closure of the sumset {x + y}.
Cut mul(const Cut& a, const Cut& b);
/// The residual (a : b) = {γ : γ + b ⊆ a}.
Cut quotient(const Cut& a, const Cut& b);
Cut inverse(const Cut& a);
bool includes(const Cut& outer, const Cut& inner);

Cut v_closure(const Cut& a);
/// Identity in a valuation domain. A principal cut is re-checked to be
/// divisorial; a failure throws InternalInconsistency.
Cut t_closure(const Cut& a);

/// t-closure computed over the overring T = `overring` (a ring cut) instead of
/// V: the cut is transported to the value group of T, closed there and
/// transported back. Requires `a` to be a T-module (a common ideal).
Cut t_closure_over(const Cut& a, const Cut& overring);

/// Transport between Γ and its prefix group Γ/H_k (k >= a.level()).
Cut project(const Cut& a, const GroupHandle& truncated);
Cut lift(const Cut& a, const GroupHandle& full);

/// (a : a), always the ring cut at a's level.
Cut stabilizer(const Cut& a);
bool is_idempotent(const Cut& a);

struct RegularityWitness {
  /// J = (I (T : I))_t with T = (I : I).
  Cut idempotent;
  /// q with (I²)_t = qI. Present iff the class of I is itself idempotent.
  std::optional<GroupElement> shift;
};

/// Checks I = (I² (I : I²))_t and returns the witness. Throws
/// InternalInconsistency if the identity fails.
RegularityWitness is_regular(const Cut& a);

/// J = (a (T : a))_t, the idempotent attached to the class of a.
Cut idempotent_representative(const Cut& a);
IdempotentForm classify_idempotent(const Cut& a);

/// A cut whose boundary is reduced modulo Γ, i.e. a canonical representative
/// of the ideal class modulo principal ideals.
class CutClass {
 public:
  explicit CutClass(const Cut& any_representative);

  const Cut& representative() const { return rep_; }
  std::string to_string() const { return rep_.to_string(); }

  friend bool operator==(const CutClass&, const CutClass&) = default;
  friend std::strong_ordering operator<=>(const CutClass& a, const CutClass& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  Cut rep_;
};

inline CutClass class_of(const Cut& a) { return CutClass(a); }

/// The two conditions of the membership lemma: (L:L) = (J:J) and
/// (JL(L:L²))_t = (L(L:L²))_t = (L(J:L))_t = J.
bool membership_lemma_conditions(const Cut& l, const Cut& j);

/// Whether the class of L lies in the constituent group of J. Requires J
/// idempotent (NotIdempotent otherwise). Uses the lemma conditions and
/// additionally that the idempotent attached to L is exactly J.
bool group_membership(const Cut& l, const Cut& j);
CutClass group_mul(const CutClass& x, const CutClass& y, const Cut& j);
CutClass group_inv(const CutClass& x, const Cut& j);

/// Idempotent ideals of V up to class: the overrings V_{P_i} for every level
/// and the primes P_i at dense levels.
std::vector<Cut> idempotent_cuts(const GroupHandle& group);

}  // namespace tclass
