// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/box_oracle.hpp"
#include "../support/helpers.hpp"
#include "tclass/class_models.hpp"
#include "tclass/commands.hpp"
#include "tclass/sampling.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

constexpr double kDecomposeSeconds = 1.0;       // AC1, AC2
constexpr double kRegularitySeconds = 10.0;     // AC3
constexpr double kOracleSeconds = 30.0;         // AC4
constexpr double kExactSequenceSeconds = 30.0;  // AC6
constexpr int kRegularityCuts = 1000;
constexpr int kOracleInstances = 500;
constexpr int kUniquenessSamples = 500;
constexpr std::size_t kExactSequenceSamples = 200;
constexpr int kTransferInstances = 300;
constexpr std::size_t kSeedSets = 3;
constexpr std::size_t kClosureBudget = 256;
constexpr std::size_t kDeterminismSamples = 50;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds = 0;  // 0: no time limit
  std::function<Outcome()> run;
};

std::string model_path(const std::string& name) { return std::string(TCLASS_MODEL_DIR) + "/" + name; }

std::vector<std::string> model_files() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(TCLASS_MODEL_DIR)) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupHandle> valuation_groups() { return {Z(), Z2(), ZQ(), Zhalf(), ZZthird()}; }

std::vector<PrueferModel> pruefer_models() {
  std::vector<PrueferModel> out;
  for (const char* name : {"pruefer_k1.json", "pruefer_k2.json", "pruefer_k3.json"}) {
    out.push_back(std::get<PrueferModel>(load_domain_spec(model_path(name)).model));
  }
  return out;
}

std::string name_of(const GroupHandle& g) { return to_json(*g).dump(); }

Outcome ac1() {
  Outcome o;
  for (std::size_t n : {1, 2, 3, 5}) {
    const Json spec = {{"kind", "poly_ext"}, {"base", Json(std::vector<std::string>(n, "Z"))}};
    const CommandResult r = cmd_decompose(parse_domain_spec(spec));
    const Json j = Json::parse(r.report.dump());
    const auto& res = j["results"];
    if (res["idempotent_count"] != n) o.fail("n=" + std::to_string(n) + ": count " + res["idempotent_count"].dump());
    if (res["strongly_discrete"] != true) o.fail("n=" + std::to_string(n) + ": not strongly discrete");
    for (const auto& g : res["idempotents"]) {
      if (g["group"]["trivial"] != true) o.fail("n=" + std::to_string(n) + ": nontrivial group at " + g["label"].dump());
    }
  }
  if (o.pass) o.detail = "n in {1,2,3,5}: n trivial groups";
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const char* name : {"poly_q.json", "poly_z2.json"}) {
    const Json j = Json::parse(cmd_decompose(load_domain_spec(model_path(name))).report.dump());
    std::vector<std::string> labels;
    for (const auto& g : j["results"]["idempotents"]) labels.push_back(g["label"]);
    if (labels != std::vector<std::string>{"Ring(R)", "M[X]"}) o.fail(std::string(name) + ": labels " + Json(labels).dump());
  }
  const PolyExtModel m(Zhalf());
  const StDecomposition d = decompose(m);
  if (d.groups.size() != 2) {
    o.fail("Z[1/2]: " + std::to_string(d.groups.size()) + " idempotents");
    return o;
  }
  const auto& g = d.groups[1];
  const auto a = extended_class(m, open(Zhalf(), {"1/3"}));
  const auto b = extended_class(m, open(Zhalf(), {"2/3"}));
  const auto has = [&](const SymIdealClass& x) { return std::find(g.sample.begin(), g.sample.end(), x) != g.sample.end(); };
  if (!has(a) || !has(b)) o.fail("Z[1/2]: Open@1/3 or Open@2/3 missing from the sample of G_{M[X]}");
  const auto j = extended_class(m, coefficient_cut(m, g.idempotent));
  if (group_mul(m, a, b, g.idempotent) != j) o.fail("Z[1/2]: Open@1/3 * Open@2/3 != J");
  if (o.pass) o.detail = "Q and Z[1/2]: {Ring(R), M[X]}; Open@1/3 * Open@2/3 = J";
  return o;
}

Outcome ac3() {
  Outcome o;
  Sampler rng(301);
  std::size_t total = 0;
  for (const auto& g : valuation_groups()) {
    for (int k = 0; k < kRegularityCuts; ++k) {
      const Cut a = rng.cut(g);
      try {
        const RegularityWitness w = is_regular(a);
        if (!is_idempotent(w.idempotent)) o.fail(name_of(g) + ": " + a.to_string() + " has a non-idempotent witness");
        if (w.shift && translate(a, *w.shift) != t_closure(mul(a, a))) o.fail(name_of(g) + ": bad shift for " + a.to_string());
      } catch (const std::exception& e) {
        o.fail(name_of(g) + ": " + a.to_string() + ": " + e.what());
      }
      ++total;
    }
  }
  if (o.pass) o.detail = std::to_string(total) + " cuts regular over 5 groups";
  return o;
}

Outcome ac4() {
  Outcome o;
  std::mt19937_64 rng(401);
  std::size_t points = 0;
  for (const auto& g : {Z(), Z2(), Q(), Zhalf(), ZQ(), ZZthird()}) {
    const box::Oracle oracle(*g);
    for (int k = 0; k < kOracleInstances; ++k) {
      const CutSpec sa = oracle.random_spec(rng), sb = oracle.random_spec(rng);
      const Cut a = normalize(sa, g), b = normalize(sb, g);
      const Cut p = mul(a, b), q = quotient(a, b);
      for (const auto& z : oracle.test_points()) {
        if (oracle.in_product(sa, sb, z) != oracle.in(p.spec(), z))
          o.fail(name_of(g) + ": " + a.to_string() + " * " + b.to_string() + " at " + oracle.render(z));
        if (oracle.in_quotient(sa, sb, z) != oracle.in(q.spec(), z))
          o.fail(name_of(g) + ": " + a.to_string() + " : " + b.to_string() + " at " + oracle.render(z));
        points += 2;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " membership checks over 6 groups, denominators <= 64";
  return o;
}

Outcome ac5() {
  Outcome o;
  Sampler rng(501);
  for (const auto& g : valuation_groups()) {
    const auto idems = idempotent_cuts(g);
    for (int k = 0; k < kUniquenessSamples; ++k) {
      const Cut a = rng.cut(g);
      std::vector<Cut> hits;
      for (const Cut& j : idems) {
        if (group_membership(a, j)) hits.push_back(j);
      }
      const Cut expected = t_closure(mul(a, quotient(stabilizer(a), a)));
      if (hits.size() != 1) o.fail(name_of(g) + ": " + a.to_string() + " in " + std::to_string(hits.size()) + " groups");
      else if (hits.front() != expected) o.fail(name_of(g) + ": " + a.to_string() + ": J mismatch");
    }
  }
  for (const auto& m : pruefer_models()) {
    for (int k = 0; k < kUniquenessSamples; ++k) {
      const IdealTuple a = rng.tuple(m);
      const OverringSpec t = stabilizer(a);
      std::vector<IdealTuple> hits;
      for (const auto& f : candidate_forms(m, t)) {
        const IdealTuple j = idempotent_tuple(m, f);
        if (group_membership(m, a, j)) hits.push_back(j);
      }
      const IdealTuple expected = t_closure(mul(a, quotient(ring_of(m, t), a)));
      if (hits.size() != 1) o.fail(a.to_string() + " in " + std::to_string(hits.size()) + " groups");
      else if (hits.front() != expected) o.fail(a.to_string() + ": J mismatch");
    }
  }
  if (o.pass) o.detail = "500 samples each over 5 groups and 3 Pruefer models";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::size_t forms = 0, checks = 0;
  for (const auto& m : pruefer_models()) {
    for (const auto& f : all_idempotent_forms(m)) {
      const auto r = verify_exact_sequence(m, f, kExactSequenceSamples, 601 + forms);
      if (!r.passed()) o.fail(describe(f) + ": " + r.failures.front());
      checks += r.checks;
      ++forms;
    }
  }
  if (o.pass) o.detail = std::to_string(forms) + " forms over k=1,2,3, " + std::to_string(checks) + " checks";
  return o;
}

Outcome ac7() {
  Outcome o;
  Sampler rng(701);
  for (const auto& g : valuation_groups()) {
    for (int k = 0; k < kTransferInstances; ++k) {
      const Cut t = stabilizer(rng.cut(g));
      const auto level = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(t.level())));
      const Cut common = rng.cut_at_level(g, level, rng.coin() ? Side::Open : Side::Closed);
      if (t_closure_over(common, t) != t_closure(common)) o.fail(name_of(g) + ": " + common.to_string() + " over " + t.to_string());
    }
  }
  for (const auto& m : pruefer_models()) {
    for (int k = 0; k < kTransferInstances; ++k) {
      const OverringSpec t = stabilizer(rng.tuple(m));
      std::vector<Cut> cuts;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const auto level = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(t.levels[i])));
        cuts.push_back(rng.cut_at_level(m.valuation(i), level, rng.coin() ? Side::Open : Side::Closed));
      }
      const IdealTuple common(m, cuts);
      if (t_closure_over(m, common, t) != t_closure(common)) o.fail(common.to_string());
    }
  }
  if (o.pass) o.detail = "300 instances each over 5 groups and 3 Pruefer models";
  return o;
}

template <class M>
void check_closures(Outcome& o, const std::string& name, const M& model,
                    const std::vector<std::vector<typename M::Class>>& seed_sets) {
  for (std::size_t s = 0; s < seed_sets.size(); ++s) {
    const auto closure = sample_closure(model, seed_sets[s], kClosureBudget);
    const std::string where = name + " seed set " + std::to_string(s);
    if (!closure.saturated) {
      o.fail(where + ": not saturated within " + std::to_string(kClosureBudget));
      continue;
    }
    const auto report = cross_check(closure, model);
    if (!report.passed()) o.fail(where + ": " + report.mismatches.front());
  }
}

Outcome ac8() {
  Outcome o;
  Sampler rng(801);
  std::size_t models = 0;
  for (const auto& file : model_files()) {
    const DomainSpec spec = load_domain_spec(file);
    const std::string name = fs::path(file).filename().string();
    ++models;
    if (const auto* g = std::get_if<GroupHandle>(&spec.model)) {
      std::vector<std::vector<CutClass>> sets(kSeedSets);
      for (const Cut& j : idempotent_cuts(*g)) sets[0].emplace_back(j);
      for (std::size_t s = 1; s < kSeedSets; ++s)
        for (std::size_t k = 0; k <= s; ++k) sets[s].emplace_back(rng.oracle_seed_cut(*g));
      check_closures(o, name, ValuationClasses{*g}, sets);
    } else if (const auto* m = std::get_if<PrueferModel>(&spec.model)) {
      std::vector<std::vector<TupleClass>> sets(kSeedSets);
      for (const auto& f : all_idempotent_forms(*m)) sets[0].emplace_back(idempotent_tuple(*m, f));
      for (std::size_t s = 1; s < kSeedSets; ++s)
        for (std::size_t k = 0; k <= s; ++k) sets[s].emplace_back(rng.oracle_seed_tuple(*m));
      check_closures(o, name, PrueferClasses{*m}, sets);
    } else {
      const auto& p = std::get<PolyExtModel>(spec.model);
      std::vector<std::vector<SymIdealClass>> sets(kSeedSets);
      for (const auto& g : decompose(p).groups) sets[0].push_back(extended_class(p, coefficient_cut(p, g.idempotent)));
      for (std::size_t s = 1; s < kSeedSets; ++s)
        for (std::size_t k = 0; k <= s; ++k) sets[s].push_back(extended_class(p, rng.oracle_seed_cut(p.base())));
      check_closures(o, name, PolyExtClasses{p}, sets);
    }
  }
  if (o.pass) o.detail = std::to_string(models) + " models x " + std::to_string(kSeedSets) + " seed sets, budget 256";
  return o;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ac9() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "tclass_acceptance";
  fs::create_directories(dir);
  for (const auto& file : model_files()) {
    std::string dumps[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / "report.json";
      fs::remove(out);
      std::ostringstream text, err;
      const int code = run_cli({"tclass", "verify", file, "--seed", "7", "--samples", std::to_string(kDeterminismSamples),
                                "--json", out.string()},
                               text, err);
      if (code != kExitPass) o.fail(file + ": exit " + std::to_string(code));
      dumps[run] = read_file(out);
    }
    if (dumps[0].empty() || dumps[0] != dumps[1]) o.fail(file + ": reports differ");
  }
  if (o.pass) o.detail = "two verify runs per shipped model, identical JSON";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "strongly discrete poly_ext bases Z^n", kDecomposeSeconds, ac1},
      {"AC2", "poly_ext over Q and Z[1/2]", kDecomposeSeconds, ac2},
      {"AC3", "regularity of 1000 random cuts per group", kRegularitySeconds, ac3},
      {"AC4", "mul and quotient against the box oracle", kOracleSeconds, ac4},
      {"AC5", "unique idempotent J = (I(T:I))_t", 0, ac5},
      {"AC6", "exact sequence for Pruefer models k=1,2,3", kExactSequenceSeconds, ac6},
      {"AC7", "transfer of t-closure to (I:I)", 0, ac7},
      {"AC8", "sampled closures saturate and match the semigroup oracle", 0, ac8},
      {"AC9", "verify is deterministic for a fixed seed", 0, ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) o.fail("time limit exceeded");
    char timing[64];
    if (c.limit_seconds > 0) std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", secs, c.limit_seconds);
    else std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << c.id << (o.pass ? " PASS " : " FAIL ") << c.title << ": " << o.detail << " [" << timing << "]\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
