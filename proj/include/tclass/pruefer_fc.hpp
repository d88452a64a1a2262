#pragma once

// R = V_1 ∩ ... ∩ V_k for pairwise independent valuation domains. Ideals are
// tuples of cuts, one per component; by independence and approximation every
// tuple of values is realized by a field element, so principality and ideal
// classes are computed componentwise.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tclass/idempotent_form.hpp"
#include "tclass/valuation_ideal.hpp"

namespace tclass {

class PrueferModel {
 public:
  explicit PrueferModel(std::vector<GroupHandle> valuations);

  std::size_t size() const { return valuations_.size(); }
  const GroupHandle& valuation(std::size_t i) const { return valuations_.at(i); }
  const std::vector<GroupHandle>& valuations() const { return valuations_; }

  friend bool operator==(const PrueferModel& a, const PrueferModel& b);

 private:
  std::vector<GroupHandle> valuations_;
};

class IdealTuple {
 public:
  /// Throws DomainMismatch when the cuts do not match the model's valuations.
  IdealTuple(const PrueferModel& model, std::vector<Cut> cuts);

  std::size_t size() const { return cuts_.size(); }
  const Cut& operator[](std::size_t i) const { return cuts_[i]; }
  const std::vector<Cut>& cuts() const { return cuts_; }

  bool is_principal() const;
  std::string to_string() const;

  friend bool operator==(const IdealTuple&, const IdealTuple&) = default;
  friend std::strong_ordering operator<=>(const IdealTuple& a, const IdealTuple& b);

 private:
  std::vector<Cut> cuts_;
};

/// Ideal class of a tuple: the componentwise CutClass.
class TupleClass {
 public:
  explicit TupleClass(const IdealTuple& any_representative);

  const IdealTuple& representative() const { return rep_; }
  std::string to_string() const { return rep_.to_string(); }

  friend bool operator==(const TupleClass&, const TupleClass&) = default;
  friend std::strong_ordering operator<=>(const TupleClass& a, const TupleClass& b) {
    return a.rep_ <=> b.rep_;
  }

 private:
  IdealTuple rep_;
};

IdealTuple mul(const IdealTuple& a, const IdealTuple& b);
IdealTuple quotient(const IdealTuple& a, const IdealTuple& b);
IdealTuple t_closure(const IdealTuple& a);
/// t-closure computed over the overring T (componentwise transfer).
IdealTuple t_closure_over(const PrueferModel& model, const IdealTuple& a,
                          const OverringSpec& overring);
bool is_idempotent(const IdealTuple& a);

OverringSpec stabilizer(const IdealTuple& a);
/// T as a tuple of ring cuts.
IdealTuple ring_of(const PrueferModel& model, const OverringSpec& overring);
void validate(const PrueferModel& model, const OverringSpec& overring);

/// The canonical idempotent tuple denoted by a form: component i is the
/// maximal ideal of T at levels[i] when i is in the MaxIdeals set, T's
/// component ring otherwise.
IdealTuple idempotent_tuple(const PrueferModel& model, const IdempotentForm& form);
IdempotentForm classify_idempotent(const PrueferModel& model, const IdealTuple& a);
/// J = (a (T : a))_t.
IdealTuple idempotent_representative(const PrueferModel& model, const IdealTuple& a);
/// {T} together with every finite intersection of idempotent maximal ideals of T.
std::vector<IdempotentForm> candidate_forms(const PrueferModel& model,
                                            const OverringSpec& overring);
/// Every idempotent class of S(R).
std::vector<IdempotentForm> all_idempotent_forms(const PrueferModel& model);

/// Indices i whose maximal ideal M_i contains a.
std::vector<std::size_t> tmax_containing(const PrueferModel& model, const IdealTuple& a);

/// M_i ∧ M_j: the largest prime inside both. Independent valuations share no
/// nonzero prime, so this is always nullopt (the zero prime). Throws
/// InvalidArgument for i == j or an out-of-range index.
std::optional<std::pair<ConvexSubgroup, ConvexSubgroup>> wedge(const PrueferModel& model,
                                                               std::size_t i, std::size_t j);

/// A finite abelian group given by representatives and a Cayley table.
struct ComputedGroup {
  OverringSpec overring;
  std::vector<IdealTuple> representatives;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  std::size_t order() const { return representatives.size(); }
  std::size_t op(std::size_t a, std::size_t b) const { return table.at(a).at(b); }
  std::size_t inv(std::size_t a) const;
};

/// Cl(T). Each component of T is a valuation ring, so T is semilocal and its
/// class group is trivial; the returned group has the single element T.
ComputedGroup class_group(const PrueferModel& model, const OverringSpec& overring);

/// Certificate that a t-invertible ideal of T is principal: the value tuple x
/// with a = x·T. Throws NotInGroup if a is not invertible over T.
std::vector<GroupElement> principal_certificate(const PrueferModel& model,
                                                const OverringSpec& overring,
                                                const IdealTuple& a);

bool membership_lemma_conditions(const IdealTuple& l, const IdealTuple& j);
/// Requires j idempotent (NotIdempotent otherwise).
bool group_membership(const PrueferModel& model, const IdealTuple& l, const IdealTuple& j);
TupleClass group_mul(const PrueferModel& model, const TupleClass& x, const TupleClass& y,
                     const IdealTuple& j);
TupleClass group_inv(const PrueferModel& model, const TupleClass& x, const IdealTuple& j);

/// ψ(L) = (class of L T_{Q_i})_i over the MaxIdeals components, each living
/// in the value group of T_{Q_i} (the prefix group at levels[i]). Throws
/// NotInGroup unless L lies in G_J.
std::vector<CutClass> psi_localize(const PrueferModel& model, const IdealTuple& l,
                                   const IdempotentForm& form);
/// The local identities (classes of Q_i T_{Q_i}).
std::vector<CutClass> psi_identity(const PrueferModel& model, const IdempotentForm& form);
/// φ(c) = class of (A J)_t for A the representative of element c of Cl(T).
TupleClass phi_embed(const PrueferModel& model, const ComputedGroup& cl, std::size_t element,
                     const IdempotentForm& form);

struct ExactSequenceReport {
  IdempotentForm form;
  std::size_t samples = 0;
  std::size_t class_group_order = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks 0 -> Cl(T) -> G_J -> ∏ G_{Q_i T_{Q_i}} -> 0 on `samples` random
/// members of G_J and random targets: membership of the samples, ψ a
/// homomorphism, φ injective, image(φ) = ker(ψ) and a constructed preimage
/// for every target. For a Ring form the check is G_J ≅ Cl(T).
ExactSequenceReport verify_exact_sequence(const PrueferModel& model, const IdempotentForm& form,
                                          std::size_t samples, std::uint64_t seed);

}  // namespace tclass
