#include "tclass/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "tclass/errors.hpp"

namespace tclass {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field '") + name + "'");
  return *it;
}

ArchComponent parse_component(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Z") return ArchComponent::discrete();
    if (s == "Q") return ArchComponent::full_rational();
    fail(where, "unknown component '" + s + "' (expected \"Z\", \"Q\" or {\"Zloc\": [...]})");
  }
  const Json& primes = field(j, "Zloc", where);
  if (!primes.is_array()) fail(where + ".Zloc", "expected an array of primes");
  std::vector<std::uint64_t> ps;
  for (const auto& p : primes) {
    if (!p.is_number_unsigned()) fail(where + ".Zloc", "primes must be positive integers");
    ps.push_back(p.get<std::uint64_t>());
  }
  try {
    return ArchComponent::localized(std::move(ps));
  } catch (const InvalidArgument& e) {
    fail(where, e.what());
  }
}

Rational parse_coordinate(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

std::string side_name(Side s) { return s == Side::Closed ? "closed" : "open"; }

}  // namespace

std::string DomainSpec::kind() const {
  if (std::holds_alternative<GroupHandle>(model)) return "valuation";
  if (std::holds_alternative<PrueferModel>(model)) return "pruefer_fc";
  return "poly_ext";
}

GroupHandle parse_value_group(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty array of components");
  std::vector<ArchComponent> comps;
  for (std::size_t i = 0; i < j.size(); ++i) {
    comps.push_back(parse_component(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return make_group(std::move(comps));
}

Cut parse_cut(const Json& j, const GroupHandle& group, const std::string& where) {
  const Json& level = field(j, "level", where);
  if (!level.is_number_unsigned()) fail(where + ".level", "expected a positive integer");
  const Json& boundary = field(j, "boundary", where);
  if (!boundary.is_array()) fail(where + ".boundary", "expected an array");
  const Json& side = field(j, "side", where);
  if (!side.is_string() || (side != "closed" && side != "open")) {
    fail(where + ".side", "expected \"closed\" or \"open\"");
  }
  CutSpec spec;
  spec.level = level.get<std::size_t>();
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    spec.boundary.push_back(
        parse_coordinate(boundary[k], where + ".boundary[" + std::to_string(k) + "]"));
  }
  spec.side = side == "closed" ? Side::Closed : Side::Open;
  try {
    return normalize(spec, group);
  } catch (const MalformedCut& e) {
    fail(where, e.what());
  }
}

DomainSpec parse_domain_spec(const Json& j) {
  const Json& kind = field(j, "kind", "spec");
  if (!kind.is_string()) fail("spec.kind", "expected a string");
  DomainSpec spec{GroupHandle{}, j, {}};
  if (kind == "valuation") {
    spec.model = parse_value_group(field(j, "group", "spec"), "spec.group");
  } else if (kind == "pruefer_fc") {
    const Json& vals = field(j, "valuations", "spec");
    if (!vals.is_array() || vals.empty()) fail("spec.valuations", "expected a nonempty array");
    std::vector<GroupHandle> groups;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      groups.push_back(parse_value_group(vals[i], "spec.valuations[" + std::to_string(i) + "]"));
    }
    spec.model = PrueferModel(std::move(groups));
  } else if (kind == "poly_ext") {
    spec.model = PolyExtModel(parse_value_group(field(j, "base", "spec"), "spec.base"));
  } else {
    fail("spec.kind", "unknown kind '" + kind.get<std::string>() +
                          "' (expected valuation, pruefer_fc or poly_ext)");
  }
  if (const auto it = j.find("seeds"); it != j.end()) {
    if (!it->is_array()) fail("spec.seeds", "expected an array of ideal literals");
    for (std::size_t i = 0; i < it->size(); ++i) {
      spec.seeds.push_back(parse_ideal(spec, (*it)[i], "spec.seeds[" + std::to_string(i) + "]"));
    }
  }
  return spec;
}

DomainSpec load_domain_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parse_domain_spec(j);
}

Ideal parse_ideal(const DomainSpec& spec, const Json& j, const std::string& where) {
  if (const auto* g = std::get_if<GroupHandle>(&spec.model)) return parse_cut(j, *g, where);
  if (const auto* m = std::get_if<PrueferModel>(&spec.model)) {
    const Json& cuts = field(j, "cuts", where);
    if (!cuts.is_array() || cuts.size() != m->size()) {
      fail(where + ".cuts", "expected an array of " + std::to_string(m->size()) + " cut literals");
    }
    std::vector<Cut> out;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      out.push_back(parse_cut(cuts[i], m->valuation(i), where + ".cuts[" + std::to_string(i) + "]"));
    }
    return IdealTuple(*m, std::move(out));
  }
  const auto& p = std::get<PolyExtModel>(spec.model);
  return PolyIdeal{parse_cut(field(j, "coeff", where), p.base(), where + ".coeff")};
}

Json read_json_argument(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\n");
  try {
    if (first != std::string::npos && text_or_path[first] == '{') return Json::parse(text_or_path);
    std::ifstream in(text_or_path);
    if (!in) throw ParseError(text_or_path + ": cannot open file");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("ideal: " + std::string(e.what()));
  }
}

OrderedJson to_json(const ValueGroup& g) {
  OrderedJson out = OrderedJson::array();
  for (const auto& c : g.components()) {
    switch (c.kind()) {
      case ComponentKind::Discrete:
        out.push_back("Z");
        break;
      case ComponentKind::FullRational:
        out.push_back("Q");
        break;
      case ComponentKind::LocalizedIntegers:
        out.push_back(OrderedJson{{"Zloc", c.primes()}});
        break;
    }
  }
  return out;
}

OrderedJson to_json(const Cut& c) {
  OrderedJson boundary = OrderedJson::array();
  for (const auto& q : c.boundary()) boundary.push_back(to_string(q));
  return OrderedJson{{"level", c.level()}, {"boundary", boundary}, {"side", side_name(c.side())}};
}

OrderedJson to_json(const IdealTuple& t) {
  OrderedJson cuts = OrderedJson::array();
  for (const auto& c : t.cuts()) cuts.push_back(to_json(c));
  return OrderedJson{{"cuts", cuts}};
}

OrderedJson to_json(const Ideal& ideal) {
  if (const auto* c = std::get_if<Cut>(&ideal)) return to_json(*c);
  if (const auto* t = std::get_if<IdealTuple>(&ideal)) return to_json(*t);
  return OrderedJson{{"coeff", to_json(std::get<PolyIdeal>(ideal).coeff)}};
}

OrderedJson to_json(const IdempotentForm& form) {
  OrderedJson comps = OrderedJson::array();
  for (auto i : max_ideal_components(form)) comps.push_back(i + 1);
  return OrderedJson{{"kind", is_ring_form(form) ? "Ring" : "MaxIdeals"},
                     {"overring_levels", overring_of(form).levels},
                     {"max_ideal_components", comps},
                     {"text", describe(form)}};
}

OrderedJson to_json(const GroupElement& x) {
  OrderedJson out = OrderedJson::array();
  for (const auto& q : x.coords) out.push_back(to_string(q));
  return out;
}

}  // namespace tclass
