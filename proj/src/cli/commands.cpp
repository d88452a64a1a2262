#include "tclass/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "tclass/class_models.hpp"
#include "tclass/errors.hpp"
#include "tclass/sampling.hpp"

namespace tclass {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

// One property suite of `verify`.
class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  template <class Msg>
  void check(bool ok, Msg&& msg) {
    ++checks_;
    if (!ok) fail(msg());
  }

  void fail(std::string msg) {
    ++failures_;
    if (counterexamples_.size() < kMaxCounterexamples) counterexamples_.push_back(std::move(msg));
  }

  // Runs `body`, turning library exceptions into failures.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      ++checks_;
      fail(std::string("exception: ") + e.what());
    }
  }

  void note(std::string key, OrderedJson value) { extra_[std::move(key)] = std::move(value); }

  bool passed() const { return failures_ == 0; }

  OrderedJson to_json() const {
    OrderedJson j{{"name", name_},
                  {"status", passed() ? "pass" : "fail"},
                  {"checks", checks_},
                  {"failures", failures_}};
    for (const auto& [k, v] : extra_.items()) j[k] = v;
    j["counterexamples"] = counterexamples_;
    return j;
  }

 private:
  std::string name_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> counterexamples_;
  OrderedJson extra_ = OrderedJson::object();
};

OrderedJson provenance(const DomainSpec& spec) {
  return OrderedJson{{"tool", "tclass"}, {"version", kToolVersion}, {"model", spec.source}};
}

std::string poly_kind(const PolyIdempotent& e) {
  return std::holds_alternative<TLinkedOverring>(e) ? "overring" : "max_class";
}

std::size_t poly_level(const PolyIdempotent& e) {
  return std::visit([](const auto& x) { return x.prime_level; }, e);
}

// "Ring(R)" / "M[X]" style label for the top level, the plain description otherwise.
std::string poly_label(const PolyExtModel& m, const PolyIdempotent& e) {
  if (poly_level(e) == m.dimension()) {
    return std::holds_alternative<TLinkedOverring>(e) ? "Ring(R)" : "M[X]";
  }
  return describe(e);
}

OrderedJson poly_idempotent_json(const PolyExtModel& m, const PolyIdempotent& e) {
  return OrderedJson{{"kind", poly_kind(e)},
                     {"prime_level", poly_level(e)},
                     {"text", describe(e)},
                     {"label", poly_label(m, e)},
                     {"coefficient", to_json(coefficient_cut(m, e))}};
}

OrderedJson regularity_json(const Cut& a) {
  const RegularityWitness w = is_regular(a);
  return OrderedJson{{"holds", true},
                     {"idempotent", to_json(w.idempotent)},
                     {"shift", w.shift ? to_json(*w.shift) : OrderedJson(nullptr)}};
}

std::string local_group_descriptor(const ArchComponent& c) {
  return c.kind() == ComponentKind::FullRational
             ? "representable classes: trivial (Q/Q); nonidentity members have irrational boundaries"
             : "representable classes ≅ Q/" + c.describe();
}

// ---------------------------------------------------------------- classify

OrderedJson classify_valuation(const Cut& a) {
  const IdempotentForm form = classify_idempotent(a);
  return OrderedJson{{"ideal", to_json(a)},
                     {"class", to_json(CutClass(a).representative())},
                     {"stabilizer", to_json(stabilizer(a))},
                     {"idempotent_form", to_json(form)},
                     {"J", to_json(idempotent_representative(a))},
                     {"regularity", regularity_json(a)}};
}

OrderedJson classify_pruefer(const PrueferModel& m, const IdealTuple& a) {
  const IdempotentForm form = classify_idempotent(m, a);
  OrderedJson reg = OrderedJson::array();
  for (const auto& c : a.cuts()) reg.push_back(regularity_json(c));
  OrderedJson tmax = OrderedJson::array();
  for (auto i : tmax_containing(m, a)) tmax.push_back(i + 1);
  return OrderedJson{{"ideal", to_json(a)},
                     {"class", to_json(TupleClass(a).representative())},
                     {"principal", a.is_principal()},
                     {"stabilizer_levels", stabilizer(a).levels},
                     {"tmax_containing", tmax},
                     {"idempotent_form", to_json(form)},
                     {"J", to_json(idempotent_tuple(m, form))},
                     {"regularity", reg}};
}

OrderedJson classify_poly(const PolyExtModel& m, const Cut& coeff) {
  const SymIdealClass s = extended_class(m, coeff);
  const PolyIdempotent e = classify(m, s);
  return OrderedJson{{"ideal", OrderedJson{{"coeff", to_json(coeff)}}},
                     {"class", OrderedJson{{"coeff", to_json(s.coeff.representative())}}},
                     {"idempotent", poly_idempotent_json(m, e)},
                     {"coefficient_form", to_json(classify_idempotent(coeff))},
                     {"regularity", regularity_json(coeff)},
                     {"scope", "over extended classes"}};
}

// --------------------------------------------------------------- decompose

OrderedJson decompose_valuation(const GroupHandle& g) {
  OrderedJson items = OrderedJson::array();
  for (const Cut& e : idempotent_cuts(g)) {
    const IdempotentForm form = classify_idempotent(e);
    const ArchComponent& c = g->at_level(e.level());
    const bool ring = is_ring_form(form);
    items.push_back(OrderedJson{
        {"idempotent", to_json(e)},
        {"form", to_json(form)},
        {"group",
         OrderedJson{{"trivial", ring || c.kind() == ComponentKind::FullRational},
                     {"descriptor", ring ? "Cl(V_P" + std::to_string(e.level()) + ") = 0"
                                         : local_group_descriptor(c)}}}});
  }
  return OrderedJson{{"idempotent_count", items.size()},
                     {"strongly_discrete", is_strongly_discrete(*g)},
                     {"idempotents", items}};
}

OrderedJson decompose_pruefer(const PrueferModel& m) {
  OrderedJson items = OrderedJson::array();
  for (const auto& form : all_idempotent_forms(m)) {
    const auto& t = overring_of(form);
    OrderedJson group;
    if (is_ring_form(form)) {
      group = OrderedJson{{"trivial", true},
                          {"class_group_order", class_group(m, t).order()},
                          {"descriptor", "G_J ≅ Cl(T) = 0"}};
    } else {
      bool trivial = true;
      std::string factors;
      for (auto i : max_ideal_components(form)) {
        const ArchComponent& c = m.valuation(i)->at_level(t.levels[i]);
        trivial = trivial && c.kind() == ComponentKind::FullRational;
        factors += (factors.empty() ? "" : " x ") + ("Q/" + c.describe());
      }
      group = OrderedJson{{"trivial", trivial},
                          {"class_group_order", class_group(m, t).order()},
                          {"descriptor", "0 -> Cl(T) = 0 -> G_J -> prod G(Q_i T_Q_i) -> 0; "
                                         "representable classes ≅ " + factors}};
    }
    items.push_back(OrderedJson{{"form", to_json(form)},
                                {"J", to_json(idempotent_tuple(m, form))},
                                {"group", group}});
  }
  return OrderedJson{{"idempotent_count", items.size()}, {"idempotents", items}};
}

OrderedJson decompose_poly(const PolyExtModel& m) {
  const StDecomposition d = decompose(m);
  OrderedJson items = OrderedJson::array();
  for (const auto& g : d.groups) {
    OrderedJson sample = OrderedJson::array();
    for (const auto& s : g.sample) sample.push_back(OrderedJson{{"coeff", to_json(s.coeff.representative())}});
    OrderedJson item = poly_idempotent_json(m, g.idempotent);
    item["group"] = OrderedJson{{"trivial", g.trivial}, {"descriptor", g.descriptor}, {"sample", sample}};
    items.push_back(std::move(item));
  }
  std::vector<std::string> linked;
  for (const auto& o : enumerate_t_linked_overrings(m)) linked.push_back(describe(PolyIdempotent{o}));
  return OrderedJson{{"idempotent_count", items.size()},
                     {"strongly_discrete", d.strongly_discrete},
                     {"t_linked_overrings", linked},
                     {"t_idempotent_primes", t_idempotent_primes(m)},
                     {"scope", d.scope},
                     {"idempotents", items}};
}

// ------------------------------------------------------------------ verify

// Candidate idempotents of the class of `a` in a valuation domain.
std::vector<Cut> valuation_candidates(const Cut& a) {
  std::vector<Cut> out{stabilizer(a)};
  if (a.group().at_level(a.level()).is_dense()) out.push_back(prime_cut(a.group_handle(), a.level()));
  return out;
}

void regularity_cut(Suite& s, const Cut& a) {
  s.guarded([&] {
    const Cut square = mul(a, a);
    const Cut e = t_closure(mul(square, quotient(a, square)));
    s.check(e == a, [&] { return "I != (I^2 (I:I^2))_t for " + a.to_string(); });
    const RegularityWitness w = is_regular(a);
    if (w.shift) {
      s.check(translate(a, *w.shift) == square,
              [&] { return "shift witness fails for " + a.to_string(); });
    }
  });
}

void uniqueness_cut(Suite& s, const Cut& a) {
  s.guarded([&] {
    std::size_t hits = 0;
    std::optional<Cut> found;
    for (const Cut& j : valuation_candidates(a)) {
      if (group_membership(a, j)) {
        ++hits;
        found = j;
      }
    }
    s.check(hits == 1, [&] {
      return std::to_string(hits) + " candidate idempotents contain " + a.to_string();
    });
    if (found) {
      s.check(*found == idempotent_representative(a),
              [&] { return "unique J differs from (I(T:I))_t for " + a.to_string(); });
    }
  });
}

void transfer_cut(Suite& s, Sampler& rng, const Cut& i) {
  s.guarded([&] {
    const Cut t = stabilizer(i);
    const auto level = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(t.level())));
    const Cut common = rng.cut_at_level(i.group_handle(), level, rng.coin() ? Side::Open : Side::Closed);
    s.check(t_closure(common) == t_closure_over(common, t),
            [&] { return "t over R and over T differ on " + common.to_string(); });
    const GroupHandle tg = make_group(i.group().truncated(t.level()));
    s.check(is_idempotent(common) == is_idempotent(project(common, tg)),
            [&] { return "t-idempotence over R and T differ on " + common.to_string(); });
  });
}

void exact_sequence_suites(Suite& s, const PrueferModel& m, std::size_t samples, std::uint64_t seed) {
  OrderedJson forms = OrderedJson::array();
  std::size_t k = 0;
  for (const auto& form : all_idempotent_forms(m)) {
    s.guarded([&] {
      const ExactSequenceReport r = verify_exact_sequence(m, form, samples, seed + 7919 * ++k);
      s.check(r.passed(), [&] {
        return describe(form) + ": " + (r.failures.empty() ? "" : r.failures.front());
      });
      forms.push_back(OrderedJson{{"form", describe(form)},
                                  {"checks", r.checks},
                                  {"class_group_order", r.class_group_order},
                                  {"status", r.passed() ? "pass" : "fail"}});
    });
  }
  s.note("forms", forms);
}

template <ClassModel M>
void oracle_suite(Suite& s, const M& model,
                  const std::vector<std::vector<typename M::Class>>& seed_sets, std::size_t budget) {
  OrderedJson runs = OrderedJson::array();
  for (const auto& seeds : seed_sets) {
    s.guarded([&] {
      const auto closure = sample_closure(model, seeds, budget);
      s.check(closure.saturated, [&] {
        return "closure of " + std::to_string(seeds.size()) + " seeds not saturated within budget";
      });
      const CrossCheckReport r = cross_check(closure, model);
      s.check(r.passed(), [&] { return r.mismatches.empty() ? std::string() : r.mismatches.front(); });
      runs.push_back(OrderedJson{{"seeds", seeds.size()},
                                 {"elements", r.elements},
                                 {"idempotents", r.idempotent_count},
                                 {"saturated", closure.saturated},
                                 {"status", r.passed() && closure.saturated ? "pass" : "fail"}});
    });
  }
  s.note("closures", runs);
}

template <ClassModel M>
void table_suite(Suite& s, const M& model, const std::vector<typename M::Class>& seeds,
                 const FiniteCommSemigroup& expected, std::size_t budget) {
  s.guarded([&] {
    const auto closure = sample_closure(model, seeds, budget);
    s.check(closure.semigroup.has_value(), [] { return std::string("closure not saturated"); });
    if (!closure.semigroup) return;
    const auto& got = closure.semigroup->table();
    const auto& want = expected.table();
    if (got.size() != want.size()) {
      s.fail("fixture has " + std::to_string(want.size()) + " elements, closure has " +
             std::to_string(got.size()));
      return;
    }
    for (std::size_t a = 0; a < got.size(); ++a) {
      for (std::size_t b = 0; b < got.size(); ++b) {
        s.check(got[a][b] == want[a][b], [&] {
          return "entry (" + std::to_string(a) + "," + std::to_string(b) + "): fixture " +
                 std::to_string(want[a][b]) + ", model " + std::to_string(got[a][b]) + " (" +
                 model.render(closure.elements[a]) + " * " + model.render(closure.elements[b]) + ")";
        });
      }
    }
  });
}

std::vector<Suite> verify_valuation(const DomainSpec& spec, const GroupHandle& g,
                                    const VerifyOptions& opt) {
  Sampler rng(opt.seed);
  Suite reg("regularity"), uniq("idempotent_uniqueness"), transfer("transfer");
  for (std::size_t k = 0; k < opt.samples; ++k) regularity_cut(reg, rng.cut(g));
  for (std::size_t k = 0; k < opt.samples; ++k) uniqueness_cut(uniq, rng.cut(g));
  for (std::size_t k = 0; k < opt.samples; ++k) transfer_cut(transfer, rng, rng.cut(g));

  Suite exact("exact_sequence");
  exact_sequence_suites(exact, PrueferModel({g}), opt.samples, opt.seed);

  const ValuationClasses model{g};
  std::vector<CutClass> idem, two, three;
  for (const Cut& e : idempotent_cuts(g)) idem.emplace_back(e);
  for (int k = 0; k < 2; ++k) two.emplace_back(rng.oracle_seed_cut(g));
  for (int k = 0; k < 3; ++k) three.emplace_back(rng.oracle_seed_cut(g));
  three.emplace_back(ring_cut(g));
  std::vector<std::vector<CutClass>> sets{idem, two, three};
  std::vector<CutClass> spec_seeds;
  for (const auto& i : spec.seeds) spec_seeds.emplace_back(std::get<Cut>(i));
  if (!spec_seeds.empty()) sets.push_back(spec_seeds);
  Suite oracle("oracle_cross_check");
  oracle_suite(oracle, model, sets, opt.closure_budget);

  std::vector<Suite> out{reg, uniq, transfer, exact, oracle};
  if (opt.table) {
    Suite fixture("table_fixture");
    table_suite(fixture, model, spec_seeds.empty() ? idem : spec_seeds, *opt.table, opt.closure_budget);
    out.push_back(fixture);
  }
  return out;
}

std::vector<Suite> verify_pruefer(const DomainSpec& spec, const PrueferModel& m,
                                  const VerifyOptions& opt) {
  Sampler rng(opt.seed);
  Suite reg("regularity"), uniq("idempotent_uniqueness"), transfer("transfer");
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const IdealTuple a = rng.tuple(m);
    reg.guarded([&] {
      const IdealTuple square = t_closure(mul(a, a));
      reg.check(t_closure(mul(square, quotient(a, square))) == a,
                [&] { return "I != (I^2 (I:I^2))_t for " + a.to_string(); });
    });
  }
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const IdealTuple a = rng.tuple(m);
    uniq.guarded([&] {
      std::size_t hits = 0;
      std::optional<IdealTuple> found;
      for (const auto& form : candidate_forms(m, stabilizer(a))) {
        const IdealTuple j = idempotent_tuple(m, form);
        if (group_membership(m, a, j)) {
          ++hits;
          found = j;
        }
      }
      uniq.check(hits == 1, [&] {
        return std::to_string(hits) + " candidate idempotents contain " + a.to_string();
      });
      if (found) {
        uniq.check(*found == idempotent_representative(m, a),
                   [&] { return "unique J differs from (I(T:I))_t for " + a.to_string(); });
      }
    });
  }
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const IdealTuple i = rng.tuple(m);
    transfer.guarded([&] {
      const OverringSpec t = stabilizer(i);
      std::vector<Cut> cuts;
      for (std::size_t c = 0; c < m.size(); ++c) {
        const auto level = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(t.levels[c])));
        cuts.push_back(rng.cut_at_level(m.valuation(c), level, rng.coin() ? Side::Open : Side::Closed));
      }
      const IdealTuple common(m, std::move(cuts));
      transfer.check(t_closure(common) == t_closure_over(m, common, t),
                     [&] { return "t over R and over T differ on " + common.to_string(); });
    });
  }

  Suite exact("exact_sequence");
  exact_sequence_suites(exact, m, opt.samples, opt.seed);

  const PrueferClasses model{m};
  std::vector<TupleClass> idem, two, three;
  for (const auto& form : candidate_forms(m, stabilizer(ring_of(m, OverringSpec{[&] {
         std::vector<std::size_t> top;
         for (const auto& g : m.valuations()) top.push_back(g->rank());
         return top;
       }()})))) {
    idem.emplace_back(idempotent_tuple(m, form));
  }
  for (int k = 0; k < 2; ++k) two.emplace_back(rng.oracle_seed_tuple(m));
  for (int k = 0; k < 3; ++k) three.emplace_back(rng.oracle_seed_tuple(m));
  std::vector<std::vector<TupleClass>> sets{idem, two, three};
  std::vector<TupleClass> spec_seeds;
  for (const auto& i : spec.seeds) spec_seeds.emplace_back(std::get<IdealTuple>(i));
  if (!spec_seeds.empty()) sets.push_back(spec_seeds);
  Suite oracle("oracle_cross_check");
  oracle_suite(oracle, model, sets, opt.closure_budget);

  std::vector<Suite> out{reg, uniq, transfer, exact, oracle};
  if (opt.table) {
    Suite fixture("table_fixture");
    table_suite(fixture, model, spec_seeds.empty() ? idem : spec_seeds, *opt.table, opt.closure_budget);
    out.push_back(fixture);
  }
  return out;
}

std::vector<Suite> verify_poly(const DomainSpec& spec, const PolyExtModel& m,
                               const VerifyOptions& opt) {
  Sampler rng(opt.seed);
  const GroupHandle& g = m.base();
  Suite reg("regularity"), uniq("idempotent_uniqueness"), transfer("transfer"), lift("classify_lift");
  for (std::size_t k = 0; k < opt.samples; ++k) regularity_cut(reg, rng.cut(g));
  for (std::size_t k = 0; k < opt.samples; ++k) transfer_cut(transfer, rng, rng.cut(g));

  const StDecomposition d = decompose(m);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Cut coeff = rng.cut(g);
    uniq.guarded([&] {
      const SymIdealClass s = extended_class(m, coeff);
      std::size_t hits = 0;
      std::optional<PolyIdempotent> found;
      for (const auto& grp : d.groups) {
        if (group_membership(m, s, grp.idempotent)) {
          ++hits;
          found = grp.idempotent;
        }
      }
      uniq.check(hits == 1, [&] {
        return std::to_string(hits) + " idempotents of the decomposition contain " + s.to_string();
      });
      if (found) {
        uniq.check(*found == classify(m, s),
                   [&] { return "classify disagrees with membership for " + s.to_string(); });
        uniq.check(coefficient_cut(m, *found) == idempotent_representative(coeff),
                   [&] { return "lifted idempotent differs from (I(T:I))_t for " + s.to_string(); });
      }
    });
    lift.guarded([&] {
      const PolyIdempotent e = classify(m, extended_class(m, coeff));
      const IdempotentForm f = classify_idempotent(coeff);
      lift.check(poly_level(e) == overring_of(f).levels.front() &&
                     std::holds_alternative<TLinkedOverring>(e) == is_ring_form(f),
                 [&] { return "classify does not commute with the lift on " + coeff.to_string(); });
    });
  }

  Suite decomp("decomposition");
  decomp.guarded([&] {
    const std::size_t n = m.dimension();
    const auto primes = t_idempotent_primes(m);
    decomp.check(d.groups.size() == n + primes.size(), [&] {
      return "decomposition has " + std::to_string(d.groups.size()) + " idempotents, expected " +
             std::to_string(n + primes.size());
    });
    decomp.check(primes.empty() == d.strongly_discrete,
                 [] { return std::string("strongly discrete detector disagrees with idempotent primes"); });
    if (d.strongly_discrete) {
      for (const auto& grp : d.groups) {
        decomp.check(grp.trivial, [&] { return describe(grp.idempotent) + " group not trivial"; });
      }
    }
    for (std::size_t a = 0; a < d.groups.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        decomp.check(!(d.groups[a].idempotent == d.groups[b].idempotent),
                     [] { return std::string("duplicate idempotent"); });
      }
    }
  });

  Suite exact("exact_sequence");
  exact_sequence_suites(exact, PrueferModel({g}), opt.samples, opt.seed);

  const PolyExtClasses model{m};
  std::vector<SymIdealClass> idem, two, three;
  for (const auto& grp : d.groups) idem.push_back(extended_class(m, coefficient_cut(m, grp.idempotent)));
  for (int k = 0; k < 2; ++k) two.push_back(extended_class(m, rng.oracle_seed_cut(g)));
  for (int k = 0; k < 3; ++k) three.push_back(extended_class(m, rng.oracle_seed_cut(g)));
  std::vector<std::vector<SymIdealClass>> sets{idem, two, three};
  std::vector<SymIdealClass> spec_seeds;
  for (const auto& i : spec.seeds) spec_seeds.push_back(extended_class(m, std::get<PolyIdeal>(i).coeff));
  if (!spec_seeds.empty()) sets.push_back(spec_seeds);
  Suite oracle("oracle_cross_check");
  oracle_suite(oracle, model, sets, opt.closure_budget);

  std::vector<Suite> out{reg, uniq, transfer, lift, decomp, exact, oracle};
  if (opt.table) {
    Suite fixture("table_fixture");
    table_suite(fixture, model, spec_seeds.empty() ? idem : spec_seeds, *opt.table, opt.closure_budget);
    out.push_back(fixture);
  }
  return out;
}

void render_into(std::ostringstream& out, const OrderedJson& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const OrderedJson& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  auto is_flat = [](const OrderedJson& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v) {
      if (x.is_structured()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_flat(v) && !v.empty()) {
        out << pad << k << ":\n";
        render_into(out, v, indent + 1);
      } else if (v.is_array()) {
        out << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << pad << k << ": " << (v.is_object() ? "{}" : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << pad << "-\n";
        render_into(out, v, indent + 1);
      } else {
        out << pad << "- " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

CommandResult cmd_classify(const DomainSpec& spec, const Json& ideal_json) {
  const Ideal ideal = parse_ideal(spec, ideal_json);
  OrderedJson results;
  CommandResult r;
  try {
    if (const auto* c = std::get_if<Cut>(&ideal)) {
      results = classify_valuation(*c);
    } else if (const auto* t = std::get_if<IdealTuple>(&ideal)) {
      results = classify_pruefer(std::get<PrueferModel>(spec.model), *t);
    } else {
      results = classify_poly(std::get<PolyExtModel>(spec.model), std::get<PolyIdeal>(ideal).coeff);
    }
  } catch (const InternalInconsistency& e) {
    results = OrderedJson{{"ideal", to_json(ideal)}, {"error", e.what()}};
    r.exit_code = kExitVerifyFailed;
  }
  r.report = OrderedJson{{"command", OrderedJson{{"name", "classify"}, {"kind", spec.kind()}}},
                         {"provenance", provenance(spec)},
                         {"results", results},
                         {"status", r.exit_code == kExitPass ? "pass" : "fail"}};
  return r;
}

CommandResult cmd_decompose(const DomainSpec& spec) {
  OrderedJson results;
  if (const auto* g = std::get_if<GroupHandle>(&spec.model)) {
    results = decompose_valuation(*g);
  } else if (const auto* m = std::get_if<PrueferModel>(&spec.model)) {
    results = decompose_pruefer(*m);
  } else {
    results = decompose_poly(std::get<PolyExtModel>(spec.model));
  }
  CommandResult r;
  r.report = OrderedJson{{"command", OrderedJson{{"name", "decompose"}, {"kind", spec.kind()}}},
                         {"provenance", provenance(spec)},
                         {"results", results},
                         {"status", "pass"}};
  return r;
}

CommandResult cmd_verify(const DomainSpec& spec, const VerifyOptions& options) {
  std::vector<Suite> suites;
  if (const auto* g = std::get_if<GroupHandle>(&spec.model)) {
    suites = verify_valuation(spec, *g, options);
  } else if (const auto* m = std::get_if<PrueferModel>(&spec.model)) {
    suites = verify_pruefer(spec, *m, options);
  } else {
    suites = verify_poly(spec, std::get<PolyExtModel>(spec.model), options);
  }
  bool ok = true;
  OrderedJson list = OrderedJson::array();
  for (const auto& s : suites) {
    ok = ok && s.passed();
    list.push_back(s.to_json());
  }
  OrderedJson prov = provenance(spec);
  prov["seed"] = options.seed;
  prov["samples"] = options.samples;
  prov["closure_budget"] = options.closure_budget;
  CommandResult r;
  r.exit_code = ok ? kExitPass : kExitVerifyFailed;
  r.report = OrderedJson{{"command", OrderedJson{{"name", "verify"}, {"kind", spec.kind()}}},
                         {"provenance", prov},
                         {"suites", list},
                         {"status", ok ? "pass" : "fail"}};
  return r;
}

std::string render_text(const OrderedJson& report) {
  std::ostringstream out;
  render_into(out, report, 0);
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford t-class semigroup engine", "tclass"};
  app.require_subcommand(1);
  std::string spec_file;
  std::string ideal_arg;
  std::string json_out;
  std::string table_file;
  VerifyOptions vopt;

  auto* classify_cmd = app.add_subcommand("classify", "Classify the idempotent attached to an ideal");
  classify_cmd->add_option("spec", spec_file, "Domain spec (JSON)")->required();
  classify_cmd->add_option("--ideal", ideal_arg, "Ideal literal: inline JSON or a file")->required();
  classify_cmd->add_option("--json", json_out, "Write the JSON report to a file ('-' for stdout)");

  auto* decompose_cmd = app.add_subcommand("decompose", "Enumerate idempotents and constituent groups");
  decompose_cmd->add_option("spec", spec_file, "Domain spec (JSON)")->required();
  decompose_cmd->add_option("--json", json_out, "Write the JSON report to a file ('-' for stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("spec", spec_file, "Domain spec (JSON)")->required();
  verify_cmd->add_option("--samples", vopt.samples, "Random samples per suite");
  verify_cmd->add_option("--seed", vopt.seed, "Random seed");
  verify_cmd->add_option("--budget", vopt.closure_budget, "Closure budget of the oracle check");
  verify_cmd->add_option("--table", table_file, "Expected Cayley table of the seeds' closure");
  verify_cmd->add_option("--json", json_out, "Write the JSON report to a file ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "tclass: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  CommandResult result;
  try {
    const DomainSpec spec = load_domain_spec(spec_file);
    if (*classify_cmd) {
      result = cmd_classify(spec, read_json_argument(ideal_arg));
    } else if (*decompose_cmd) {
      result = cmd_decompose(spec);
    } else {
      if (!table_file.empty()) {
        std::ifstream in(table_file);
        if (!in) throw ParseError(table_file + ": cannot open file");
        vopt.table = FiniteCommSemigroup::read(in);
      }
      result = cmd_verify(spec, vopt);
    }
  } catch (const ParseError& e) {
    err << "tclass: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    // A table fixture that is not a commutative semigroup is a failed check.
    err << "tclass: " << e.what() << "\n";
    return table_file.empty() ? kExitUsage : kExitVerifyFailed;
  } catch (const Error& e) {
    err << "tclass: " << e.what() << "\n";
    return kExitUsage;
  }

  OrderedJson report = result.report;
  std::vector<std::string> echoed(args.begin() + (args.empty() ? 0 : 1), args.end());
  report["command"]["args"] = echoed;
  out << render_text(report);
  if (!json_out.empty()) {
    const std::string text = report.dump(2) + "\n";
    if (json_out == "-") {
      out << text;
    } else {
      std::ofstream f(json_out);
      if (!f) {
        err << "tclass: cannot write " << json_out << "\n";
        return kExitUsage;
      }
      f << text;
    }
  }
  return result.exit_code;
}

}  // namespace tclass
