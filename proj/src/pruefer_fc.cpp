#include "tclass/pruefer_fc.hpp"

#include <algorithm>
#include <map>

#include "tclass/errors.hpp"
#include "tclass/sampling.hpp"

namespace tclass {

namespace {

void require_same_shape(const IdealTuple& a, const IdealTuple& b) {
  if (a.size() != b.size()) {
    throw DomainMismatch("ideal tuples of different lengths " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  }
}

template <class Op>
std::vector<Cut> componentwise(const IdealTuple& a, const IdealTuple& b, Op op) {
  require_same_shape(a, b);
  std::vector<Cut> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(op(a[i], b[i]));
  return out;
}

// Builds without a model: shapes already agree with the operands.
IdealTuple from_cuts(std::vector<Cut> cuts) {
  std::vector<GroupHandle> groups;
  for (const auto& c : cuts) groups.push_back(c.group_handle());
  return IdealTuple(PrueferModel(std::move(groups)), std::move(cuts));
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

std::string describe(const IdempotentForm& form) {
  const auto& levels = overring_of(form).levels;
  std::string t = "T[";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    t += (i ? "," : "") + std::to_string(levels[i]);
  }
  t += "]";
  if (is_ring_form(form)) return "Ring(" + t + ")";
  std::string s = "MaxIdeals(" + t + ", {";
  const auto comps = max_ideal_components(form);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    s += (i ? "," : "") + std::to_string(comps[i] + 1);
  }
  return s + "})";
}

PrueferModel::PrueferModel(std::vector<GroupHandle> valuations)
    : valuations_(std::move(valuations)) {
  if (valuations_.empty()) throw InvalidArgument("a Pruefer model needs at least one valuation");
  for (const auto& g : valuations_) {
    if (!g) throw InvalidArgument("null value group");
  }
}

bool operator==(const PrueferModel& a, const PrueferModel& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(*a.valuations_[i] == *b.valuations_[i])) return false;
  }
  return true;
}

IdealTuple::IdealTuple(const PrueferModel& model, std::vector<Cut> cuts) : cuts_(std::move(cuts)) {
  if (cuts_.size() != model.size()) {
    throw DomainMismatch("ideal has " + std::to_string(cuts_.size()) + " components, model has " +
                         std::to_string(model.size()));
  }
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (!(cuts_[i].group() == *model.valuation(i))) {
      throw DomainMismatch("component " + std::to_string(i + 1) + " lives over " +
                           cuts_[i].group().describe() + ", expected " +
                           model.valuation(i)->describe());
    }
  }
}

bool IdealTuple::is_principal() const {
  return std::all_of(cuts_.begin(), cuts_.end(), [](const Cut& c) { return c.is_principal(); });
}

std::string IdealTuple::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < cuts_.size(); ++i) s += (i ? ", " : "") + cuts_[i].to_string();
  return s + "]";
}

std::strong_ordering operator<=>(const IdealTuple& a, const IdealTuple& b) {
  return std::lexicographical_compare_three_way(a.cuts_.begin(), a.cuts_.end(), b.cuts_.begin(),
                                                b.cuts_.end());
}

TupleClass::TupleClass(const IdealTuple& any_representative) : rep_(any_representative) {
  std::vector<Cut> reduced;
  for (const auto& c : any_representative.cuts()) reduced.push_back(CutClass(c).representative());
  rep_ = from_cuts(std::move(reduced));
}

IdealTuple mul(const IdealTuple& a, const IdealTuple& b) {
  return from_cuts(componentwise(a, b, [](const Cut& x, const Cut& y) { return mul(x, y); }));
}

IdealTuple quotient(const IdealTuple& a, const IdealTuple& b) {
  return from_cuts(componentwise(a, b, [](const Cut& x, const Cut& y) { return quotient(x, y); }));
}

IdealTuple t_closure(const IdealTuple& a) {
  std::vector<Cut> out;
  for (const auto& c : a.cuts()) out.push_back(t_closure(c));
  IdealTuple closed = from_cuts(std::move(out));
  if (!(closed == a)) throw InternalInconsistency("t-closure moved " + a.to_string());
  return closed;
}

IdealTuple t_closure_over(const PrueferModel& model, const IdealTuple& a,
                          const OverringSpec& overring) {
  const IdealTuple t = ring_of(model, overring);
  return from_cuts(componentwise(a, t, [](const Cut& x, const Cut& ring) {
    return t_closure_over(x, ring);
  }));
}

bool is_idempotent(const IdealTuple& a) { return t_closure(mul(a, a)) == a; }

OverringSpec stabilizer(const IdealTuple& a) {
  OverringSpec t;
  for (const auto& c : a.cuts()) t.levels.push_back(c.level());
  return t;
}

void validate(const PrueferModel& model, const OverringSpec& overring) {
  if (overring.levels.size() != model.size()) {
    throw DomainMismatch("overring has " + std::to_string(overring.levels.size()) +
                         " levels, model has " + std::to_string(model.size()) + " components");
  }
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto l = overring.levels[i];
    if (l == 0 || l > model.valuation(i)->rank()) {
      throw InvalidArgument("overring level " + std::to_string(l) + " out of range for component " +
                            std::to_string(i + 1));
    }
  }
}

IdealTuple ring_of(const PrueferModel& model, const OverringSpec& overring) {
  validate(model, overring);
  std::vector<Cut> cuts;
  for (std::size_t i = 0; i < model.size(); ++i) {
    cuts.push_back(ring_cut(model.valuation(i), overring.levels[i]));
  }
  return IdealTuple(model, std::move(cuts));
}

IdealTuple idempotent_tuple(const PrueferModel& model, const IdempotentForm& form) {
  const OverringSpec& t = overring_of(form);
  validate(model, t);
  const auto comps = max_ideal_components(form);
  std::vector<Cut> cuts;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (contains(comps, i)) {
      if (!model.valuation(i)->at_level(t.levels[i]).is_dense()) {
        throw NotIdempotent("maximal ideal of component " + std::to_string(i + 1) + " at level " +
                            std::to_string(t.levels[i]) + " is not idempotent");
      }
      cuts.push_back(prime_cut(model.valuation(i), t.levels[i]));
    } else {
      cuts.push_back(ring_cut(model.valuation(i), t.levels[i]));
    }
  }
  return IdealTuple(model, std::move(cuts));
}

IdealTuple idempotent_representative(const PrueferModel& model, const IdealTuple& a) {
  return t_closure(mul(a, quotient(ring_of(model, stabilizer(a)), a)));
}

IdempotentForm classify_idempotent(const PrueferModel& model, const IdealTuple& a) {
  const OverringSpec t = stabilizer(a);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].side() == Side::Open) open.push_back(i);
  }
  IdempotentForm form = open.empty() ? IdempotentForm{RingForm{t}}
                                     : IdempotentForm{MaxIdealsForm{t, open}};
  const IdealTuple constructed = idempotent_representative(model, a);
  if (!(idempotent_tuple(model, form) == constructed)) {
    throw InternalInconsistency("classification of " + a.to_string() + " disagrees with (I(T:I))_t = " +
                                constructed.to_string());
  }
  return form;
}

std::vector<IdempotentForm> candidate_forms(const PrueferModel& model, const OverringSpec& overring) {
  validate(model, overring);
  std::vector<std::size_t> dense;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (model.valuation(i)->at_level(overring.levels[i]).is_dense()) dense.push_back(i);
  }
  std::vector<IdempotentForm> out{RingForm{overring}};
  for (std::size_t mask = 1; mask < (std::size_t{1} << dense.size()); ++mask) {
    std::vector<std::size_t> comps;
    for (std::size_t b = 0; b < dense.size(); ++b) {
      if (mask & (std::size_t{1} << b)) comps.push_back(dense[b]);
    }
    out.push_back(MaxIdealsForm{overring, std::move(comps)});
  }
  return out;
}

std::vector<IdempotentForm> all_idempotent_forms(const PrueferModel& model) {
  constexpr std::size_t kLimit = 4096;
  std::size_t count = 1;
  for (const auto& g : model.valuations()) {
    std::size_t per = 0;
    for (std::size_t l = 1; l <= g->rank(); ++l) per += g->at_level(l).is_dense() ? 2 : 1;
    count *= per;
    if (count > kLimit) throw InvalidArgument("model has more than 4096 idempotent classes");
  }
  std::vector<IdempotentForm> out;
  OverringSpec t{std::vector<std::size_t>(model.size(), 1)};
  while (true) {
    for (auto& f : candidate_forms(model, t)) out.push_back(std::move(f));
    std::size_t i = 0;
    for (; i < model.size(); ++i) {
      if (++t.levels[i] <= model.valuation(i)->rank()) break;
      t.levels[i] = 1;
    }
    if (i == model.size()) break;
  }
  return out;
}

std::vector<std::size_t> tmax_containing(const PrueferModel& model, const IdealTuple& a) {
  if (a.size() != model.size()) throw DomainMismatch("ideal does not belong to the model");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& g = model.valuation(i);
    if (includes(prime_cut(g, g->rank()), a[i])) out.push_back(i);
  }
  return out;
}

std::optional<std::pair<ConvexSubgroup, ConvexSubgroup>> wedge(const PrueferModel& model,
                                                               std::size_t i, std::size_t j) {
  if (i >= model.size() || j >= model.size()) throw InvalidArgument("component index out of range");
  if (i == j) throw InvalidArgument("wedge needs two distinct maximal ideals");
  return std::nullopt;
}

std::size_t ComputedGroup::inv(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b) {
    if (op(a, b) == identity) return b;
  }
  throw InternalInconsistency("element without inverse in computed group");
}

ComputedGroup class_group(const PrueferModel& model, const OverringSpec& overring) {
  ComputedGroup g;
  g.overring = overring;
  g.representatives.push_back(ring_of(model, overring));
  g.table = {{0}};
  g.identity = 0;
  return g;
}

std::vector<GroupElement> principal_certificate(const PrueferModel& model,
                                                const OverringSpec& overring,
                                                const IdealTuple& a) {
  const IdealTuple t = ring_of(model, overring);
  require_same_shape(a, t);
  std::vector<GroupElement> values;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Cut& c = a[i];
    if (!(mul(c, quotient(t[i], c)) == t[i])) {
      throw NotInGroup("component " + std::to_string(i + 1) + " " + c.to_string() +
                       " is not invertible over T");
    }
    GroupElement x = zero(c.group());
    std::copy(c.boundary().begin(), c.boundary().end(), x.coords.begin());
    if (!(translate(t[i], x) == c)) {
      throw InternalInconsistency("invertible component " + c.to_string() + " is not x*T");
    }
    values.push_back(std::move(x));
  }
  return values;
}

bool membership_lemma_conditions(const IdealTuple& l, const IdealTuple& j) {
  require_same_shape(l, j);
  if (!(stabilizer(l) == stabilizer(j))) return false;
  const IdealTuple residual = quotient(l, t_closure(mul(l, l)));
  const IdealTuple lx = t_closure(mul(l, residual));
  return lx == j && t_closure(mul(j, lx)) == j && t_closure(mul(l, quotient(j, l))) == j;
}

bool group_membership(const PrueferModel& model, const IdealTuple& l, const IdealTuple& j) {
  if (!is_idempotent(j)) throw NotIdempotent(j.to_string() + " is not idempotent");
  return membership_lemma_conditions(l, j) && idempotent_representative(model, l) == j;
}

TupleClass group_mul(const PrueferModel& model, const TupleClass& x, const TupleClass& y,
                     const IdealTuple& j) {
  for (const TupleClass* c : {&x, &y}) {
    if (!group_membership(model, c->representative(), j)) {
      throw NotInGroup(c->to_string() + " is not in the group of " + j.to_string());
    }
  }
  return TupleClass(t_closure(mul(x.representative(), y.representative())));
}

TupleClass group_inv(const PrueferModel& model, const TupleClass& x, const IdealTuple& j) {
  if (!group_membership(model, x.representative(), j)) {
    throw NotInGroup(x.to_string() + " is not in the group of " + j.to_string());
  }
  return TupleClass(t_closure(mul(j, quotient(j, x.representative()))));
}

std::vector<CutClass> psi_localize(const PrueferModel& model, const IdealTuple& l,
                                   const IdempotentForm& form) {
  const IdealTuple j = idempotent_tuple(model, form);
  if (!group_membership(model, l, j)) {
    throw NotInGroup(l.to_string() + " is not in the group of " + describe(form));
  }
  const auto& levels = overring_of(form).levels;
  std::vector<CutClass> out;
  for (std::size_t i : max_ideal_components(form)) {
    const GroupHandle local = make_group(model.valuation(i)->truncated(levels[i]));
    out.emplace_back(project(l[i], local));
  }
  return out;
}

std::vector<CutClass> psi_identity(const PrueferModel& model, const IdempotentForm& form) {
  const auto& levels = overring_of(form).levels;
  std::vector<CutClass> out;
  for (std::size_t i : max_ideal_components(form)) {
    const GroupHandle local = make_group(model.valuation(i)->truncated(levels[i]));
    out.emplace_back(prime_cut(local, levels[i]));
  }
  return out;
}

TupleClass phi_embed(const PrueferModel& model, const ComputedGroup& cl, std::size_t element,
                     const IdempotentForm& form) {
  if (!(cl.overring == overring_of(form))) {
    throw DomainMismatch("class group belongs to a different overring");
  }
  if (element >= cl.order()) throw InvalidArgument("class group element out of range");
  return TupleClass(t_closure(mul(cl.representatives[element], idempotent_tuple(model, form))));
}

namespace {

// A random member of G_J: open cuts at the MaxIdeals components, principal
// cuts over T elsewhere.
IdealTuple random_member(Sampler& rng, const PrueferModel& model, const IdempotentForm& form) {
  const auto& levels = overring_of(form).levels;
  const auto comps = max_ideal_components(form);
  std::vector<Cut> cuts;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const Side side = contains(comps, i) ? Side::Open : Side::Closed;
    cuts.push_back(rng.cut_at_level(model.valuation(i), levels[i], side));
  }
  return IdealTuple(model, std::move(cuts));
}

std::string render(const std::vector<CutClass>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

ExactSequenceReport verify_exact_sequence(const PrueferModel& model, const IdempotentForm& form,
                                          std::size_t samples, std::uint64_t seed) {
  ExactSequenceReport report{form, samples, 0, 0, {}};
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
  auto check = [&](bool ok, auto&& msg) {
    ++report.checks;
    if (!ok) fail(msg());
  };

  const IdealTuple j = idempotent_tuple(model, form);
  check(is_idempotent(j), [&] { return "J = " + j.to_string() + " is not idempotent"; });
  check(classify_idempotent(model, j) == form,
        [&] { return "J = " + j.to_string() + " does not classify to " + describe(form); });

  const OverringSpec& t = overring_of(form);
  const ComputedGroup cl = class_group(model, t);
  report.class_group_order = cl.order();
  const auto comps = max_ideal_components(form);
  const auto local_identity = psi_identity(model, form);

  // φ: injective, lands in G_J, and its image lies in ker ψ.
  std::map<TupleClass, std::size_t> image;
  for (std::size_t c = 0; c < cl.order(); ++c) {
    principal_certificate(model, t, cl.representatives[c]);
    const TupleClass img = phi_embed(model, cl, c, form);
    check(image.emplace(img, c).second, [&] { return "phi is not injective at " + img.to_string(); });
    check(group_membership(model, img.representative(), j),
          [&] { return "phi(" + std::to_string(c) + ") = " + img.to_string() + " not in G_J"; });
    if (!comps.empty()) {
      check(psi_localize(model, img.representative(), form) == local_identity,
            [&] { return "psi(phi(" + std::to_string(c) + ")) is not the identity"; });
    }
  }
  check(image.count(TupleClass(j)) == 1, [] { return "phi(identity) is not the class of J"; });

  Sampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const IdealTuple l1 = random_member(rng, model, form);
    const IdealTuple l2 = random_member(rng, model, form);
    const bool m1 = group_membership(model, l1, j);
    const bool m2 = group_membership(model, l2, j);
    check(m1, [&] { return "sample " + l1.to_string() + " fails the membership conditions"; });
    check(m2, [&] { return "sample " + l2.to_string() + " fails the membership conditions"; });
    if (!m1 || !m2) continue;

    if (comps.empty()) {
      // G_J ≅ Cl(T): every member is φ of some class.
      check(image.count(TupleClass(l1)) == 1,
            [&] { return "member " + l1.to_string() + " is outside image(phi)"; });
      continue;
    }

    const auto psi1 = psi_localize(model, l1, form);
    const auto psi2 = psi_localize(model, l2, form);
    const auto psi12 = psi_localize(model, t_closure(mul(l1, l2)), form);
    std::vector<CutClass> expected;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      expected.push_back(group_mul(psi1[k], psi2[k], local_identity[k].representative()));
    }
    check(psi12 == expected, [&] {
      return "psi not multiplicative on " + l1.to_string() + ", " + l2.to_string() + ": " +
             render(psi12) + " vs " + render(expected);
    });

    // ker ψ ⊆ image φ, on L1 and on a constructed kernel element.
    if (psi1 == local_identity) {
      check(image.count(TupleClass(l1)) == 1,
            [&] { return "kernel element " + l1.to_string() + " outside image(phi)"; });
    }
    std::vector<Cut> kernel_cuts;
    for (std::size_t i = 0; i < model.size(); ++i) {
      kernel_cuts.push_back(translate(j[i], rng.element(*model.valuation(i))));
    }
    const IdealTuple kernel_elem(model, std::move(kernel_cuts));
    check(psi_localize(model, kernel_elem, form) == local_identity,
          [&] { return "shifted J " + kernel_elem.to_string() + " not in ker(psi)"; });
    check(image.count(TupleClass(kernel_elem)) == 1,
          [&] { return "kernel element " + kernel_elem.to_string() + " outside image(phi)"; });

    // ψ surjective: lift a random target tuple of local classes.
    std::vector<CutClass> target;
    std::vector<Cut> pre = j.cuts();
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const std::size_t i = comps[k];
      const GroupHandle local = make_group(model.valuation(i)->truncated(t.levels[i]));
      target.emplace_back(rng.cut_at_level(local, t.levels[i], Side::Open));
      pre[i] = lift(target.back().representative(), model.valuation(i));
    }
    const IdealTuple preimage(model, std::move(pre));
    const bool member = group_membership(model, preimage, j);
    check(member, [&] { return "constructed preimage " + preimage.to_string() + " not in G_J"; });
    if (member) {
      check(psi_localize(model, preimage, form) == target,
            [&] { return "psi(" + preimage.to_string() + ") misses target " + render(target); });
    }
  }
  return report;
}

}  // namespace tclass
