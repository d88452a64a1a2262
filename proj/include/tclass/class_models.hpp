#pragma once

// Adapters exposing each exact model's ideal classes to the semigroup oracle.

#include <string>

#include "tclass/polyext_sym.hpp"
#include "tclass/pruefer_fc.hpp"
#include "tclass/semigroup_oracle.hpp"
#include "tclass/valuation_ideal.hpp"

namespace tclass {

struct ValuationClasses {
  using Class = CutClass;

  GroupHandle group;

  Class mul(const Class& a, const Class& b) const {
    return Class(t_closure(tclass::mul(a.representative(), b.representative())));
  }
  Class idempotent_of(const Class& a) const {
    return Class(idempotent_representative(a.representative()));
  }
  Class group_inv(const Class& a) const {
    return tclass::group_inv(a, idempotent_representative(a.representative()));
  }
  std::string render(const Class& a) const { return a.to_string(); }
};

struct PrueferClasses {
  using Class = TupleClass;

  PrueferModel model;

  Class mul(const Class& a, const Class& b) const {
    return Class(t_closure(tclass::mul(a.representative(), b.representative())));
  }
  Class idempotent_of(const Class& a) const {
    return Class(idempotent_representative(model, a.representative()));
  }
  Class group_inv(const Class& a) const {
    return tclass::group_inv(model, a, idempotent_representative(model, a.representative()));
  }
  std::string render(const Class& a) const { return a.to_string(); }
};

struct PolyExtClasses {
  using Class = SymIdealClass;

  PolyExtModel model;

  Class mul(const Class& a, const Class& b) const { return tclass::mul(model, a, b); }
  Class idempotent_of(const Class& a) const {
    return extended_class(model, coefficient_cut(model, classify(model, a)));
  }
  Class group_inv(const Class& a) const { return tclass::group_inv(model, a, classify(model, a)); }
  std::string render(const Class& a) const { return a.to_string(); }
};

static_assert(ClassModel<ValuationClasses>);
static_assert(ClassModel<PrueferClasses>);
static_assert(ClassModel<PolyExtClasses>);

}  // namespace tclass
