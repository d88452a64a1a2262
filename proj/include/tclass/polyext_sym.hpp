#pragma once

// Symbolic model of R = V[X] over a valuation domain V. Only extended
// classes are modelled: t-ideals of the form A[X] or f·B[X] with A, B ideals
// of V, whose class modulo principal ideals is determined by the class of the
// coefficient ideal. The indeterminate never appears in the computation.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "tclass/idempotent_form.hpp"
#include "tclass/valuation_ideal.hpp"

namespace tclass {

class PolyExtModel {
 public:
  explicit PolyExtModel(GroupHandle base);

  const GroupHandle& base() const { return base_; }
  std::size_t dimension() const { return base_->rank(); }

 private:
  GroupHandle base_;
};

/// Class of A[X] (or f·B[X]) given by the class of its coefficient ideal.
struct SymIdealClass {
  CutClass coeff;

  std::string to_string() const { return coeff.to_string() + "[X]"; }

  friend bool operator==(const SymIdealClass&, const SymIdealClass&) = default;
  friend std::strong_ordering operator<=>(const SymIdealClass& a, const SymIdealClass& b) {
    return a.coeff <=> b.coeff;
  }
};

SymIdealClass extended_class(const PolyExtModel& model, const Cut& coeff);
SymIdealClass mul(const PolyExtModel& model, const SymIdealClass& a, const SymIdealClass& b);

/// V_p[X] for p the prime attached to H_level.
struct TLinkedOverring {
  std::size_t prime_level = 0;

  friend bool operator==(const TLinkedOverring&, const TLinkedOverring&) = default;
};

/// The class of p[X] = p V_p[X] for an idempotent prime p at prime_level.
struct IdempotentMaxClass {
  std::size_t prime_level = 0;

  friend bool operator==(const IdempotentMaxClass&, const IdempotentMaxClass&) = default;
};

using PolyIdempotent = std::variant<TLinkedOverring, IdempotentMaxClass>;

std::string describe(const PolyIdempotent& e);
/// The coefficient cut of the idempotent (the ring V_p or the prime p).
Cut coefficient_cut(const PolyExtModel& model, const PolyIdempotent& e);

/// Levels of the idempotent primes of V; p[X] is then t-idempotent.
std::vector<std::size_t> t_idempotent_primes(const PolyExtModel& model);
/// V_p[X] for every nonzero prime p, levels 1..n.
std::vector<TLinkedOverring> enumerate_t_linked_overrings(const PolyExtModel& model);
/// The idempotent of S_t(R) whose group contains the class: classification
/// of the coefficient class lifted through T = (B:B)[X].
PolyIdempotent classify(const PolyExtModel& model, const SymIdealClass& s);

/// The constituent group attached to one idempotent, restricted to extended
/// classes with representable (rational) boundaries.
struct ConstituentGroupInfo {
  PolyIdempotent idempotent;
  /// No nonidentity member among representable extended classes. For an
  /// overring this is Cl(V_p[X]) = 0; for p[X] over a Q component it only
  /// says that every nonidentity member has an irrational boundary.
  bool trivial = true;
  /// Human description of the group on representable classes.
  std::string descriptor;
  /// A few representable members, identity first.
  std::vector<SymIdealClass> sample;
};

struct StDecomposition {
  bool strongly_discrete = false;
  std::vector<ConstituentGroupInfo> groups;
  std::string scope = "over extended classes";
};

StDecomposition decompose(const PolyExtModel& model);

bool group_membership(const PolyExtModel& model, const SymIdealClass& s, const PolyIdempotent& e);
SymIdealClass group_mul(const PolyExtModel& model, const SymIdealClass& a, const SymIdealClass& b,
                        const PolyIdempotent& e);
SymIdealClass group_inv(const PolyExtModel& model, const SymIdealClass& a, const PolyIdempotent& e);

}  // namespace tclass
