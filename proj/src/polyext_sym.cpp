#include "tclass/polyext_sym.hpp"

#include "tclass/errors.hpp"

namespace tclass {

PolyExtModel::PolyExtModel(GroupHandle base) : base_(std::move(base)) {
  if (!base_) throw InvalidArgument("polynomial extension needs a base value group");
}

SymIdealClass extended_class(const PolyExtModel& model, const Cut& coeff) {
  if (!(coeff.group() == *model.base())) {
    throw DomainMismatch("coefficient cut over " + coeff.group().describe() +
                         ", base is " + model.base()->describe());
  }
  return SymIdealClass{CutClass(coeff)};
}

SymIdealClass mul(const PolyExtModel& model, const SymIdealClass& a, const SymIdealClass& b) {
  // (A[X] B[X])_t = (AB)[X]; t-closure over V is trivial.
  return extended_class(model, t_closure(mul(a.coeff.representative(), b.coeff.representative())));
}

std::string describe(const PolyIdempotent& e) {
  if (const auto* o = std::get_if<TLinkedOverring>(&e)) {
    return "V_p" + std::to_string(o->prime_level) + "[X]";
  }
  return "p" + std::to_string(std::get<IdempotentMaxClass>(e).prime_level) + "[X]";
}

Cut coefficient_cut(const PolyExtModel& model, const PolyIdempotent& e) {
  if (const auto* o = std::get_if<TLinkedOverring>(&e)) return ring_cut(model.base(), o->prime_level);
  const auto level = std::get<IdempotentMaxClass>(e).prime_level;
  if (!model.base()->at_level(level).is_dense()) {
    throw NotIdempotent("prime at level " + std::to_string(level) + " is not idempotent");
  }
  return prime_cut(model.base(), level);
}

std::vector<std::size_t> t_idempotent_primes(const PolyExtModel& model) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= model.dimension(); ++i) {
    if (!quotient_has_least_positive(*model.base(), {i})) out.push_back(i);
  }
  return out;
}

std::vector<TLinkedOverring> enumerate_t_linked_overrings(const PolyExtModel& model) {
  std::vector<TLinkedOverring> out;
  for (std::size_t i = 1; i <= model.dimension(); ++i) out.push_back({i});
  return out;
}

PolyIdempotent classify(const PolyExtModel& model, const SymIdealClass& s) {
  const Cut& b = s.coeff.representative();
  if (!(b.group() == *model.base())) throw DomainMismatch("class does not belong to the model");
  const IdempotentForm form = classify_idempotent(b);
  const std::size_t level = overring_of(form).levels.front();
  if (is_ring_form(form)) return TLinkedOverring{level};
  return IdempotentMaxClass{level};
}

namespace {

std::vector<SymIdealClass> representable_sample(const PolyExtModel& model, std::size_t level) {
  // Open cuts at the given level with last boundary coordinate k/d.
  const auto& g = model.base();
  std::vector<SymIdealClass> out{extended_class(model, prime_cut(g, level))};
  for (long d : {2L, 3L, 5L}) {
    for (long k = 1; k < d; ++k) {
      std::vector<Rational> boundary(level, Rational(0));
      boundary.back() = Rational(k, static_cast<unsigned long>(d));
      boundary.back().canonicalize();
      SymIdealClass c = extended_class(model, normalize({level, boundary, Side::Open}, g));
      bool seen = false;
      for (const auto& x : out) seen = seen || x == c;
      if (!seen) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

StDecomposition decompose(const PolyExtModel& model) {
  StDecomposition d;
  d.strongly_discrete = is_strongly_discrete(*model.base());
  for (const auto& o : enumerate_t_linked_overrings(model)) {
    ConstituentGroupInfo info{o, true, "Cl(" + describe(PolyIdempotent{o}) + ") = Cl(V_p" +
                                           std::to_string(o.prime_level) + ") = 0",
                              {extended_class(model, ring_cut(model.base(), o.prime_level))}};
    d.groups.push_back(std::move(info));
  }
  for (std::size_t level : t_idempotent_primes(model)) {
    const ArchComponent& c = model.base()->at_level(level);
    ConstituentGroupInfo info;
    info.idempotent = IdempotentMaxClass{level};
    info.sample = representable_sample(model, level);
    info.trivial = info.sample.size() == 1;
    info.descriptor = "{I : (I I^-1)_t = p" + std::to_string(level) +
                      "[X]}; on representable extended classes ≅ Q/" + c.describe();
    d.groups.push_back(std::move(info));
  }
  return d;
}

bool group_membership(const PolyExtModel& model, const SymIdealClass& s, const PolyIdempotent& e) {
  return group_membership(s.coeff.representative(), coefficient_cut(model, e));
}

SymIdealClass group_mul(const PolyExtModel& model, const SymIdealClass& a, const SymIdealClass& b,
                        const PolyIdempotent& e) {
  return SymIdealClass{group_mul(a.coeff, b.coeff, coefficient_cut(model, e))};
}

SymIdealClass group_inv(const PolyExtModel& model, const SymIdealClass& a, const PolyIdempotent& e) {
  return SymIdealClass{group_inv(a.coeff, coefficient_cut(model, e))};
}

}  // namespace tclass
