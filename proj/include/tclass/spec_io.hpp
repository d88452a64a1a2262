#pragma once

// JSON formats shared by the command line tool and reports.
//
//   value group   ["Z", "Q", {"Zloc": [2, 3]}]             most significant first
//   domain spec   {"kind": "valuation",  "group": <value group>}
//                 {"kind": "pruefer_fc", "valuations": [<value group>, ...]}
//                 {"kind": "poly_ext",   "base": <value group>}
//                 optional "seeds": [<ideal literal>, ...] for the oracle check
//   cut literal   {"level": i, "boundary": ["p/q", ...], "side": "closed" | "open"}
//   ideal literal valuation: <cut literal>
//                 pruefer_fc: {"cuts": [<cut literal>, ...]}
//                 poly_ext: {"coeff": <cut literal>}

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tclass/polyext_sym.hpp"
#include "tclass/pruefer_fc.hpp"
#include "tclass/valuation_ideal.hpp"

namespace tclass {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

struct PolyIdeal {
  Cut coeff;
};

using Ideal = std::variant<Cut, IdealTuple, PolyIdeal>;
using Model = std::variant<GroupHandle, PrueferModel, PolyExtModel>;

struct DomainSpec {
  Model model;
  /// The spec as read, echoed into reports.
  Json source;
  std::vector<Ideal> seeds;

  std::string kind() const;
};

/// All parse functions throw ParseError naming the offending field.
GroupHandle parse_value_group(const Json& j, const std::string& where = "group");
Cut parse_cut(const Json& j, const GroupHandle& group, const std::string& where = "cut");
DomainSpec parse_domain_spec(const Json& j);
DomainSpec load_domain_spec(const std::filesystem::path& path);
Ideal parse_ideal(const DomainSpec& spec, const Json& j, const std::string& where = "ideal");
/// Accepts inline JSON (starting with '{') or a file path.
Json read_json_argument(const std::string& text_or_path);

OrderedJson to_json(const ValueGroup& g);
OrderedJson to_json(const Cut& c);
OrderedJson to_json(const IdealTuple& t);
OrderedJson to_json(const Ideal& ideal);
OrderedJson to_json(const IdempotentForm& form);
OrderedJson to_json(const GroupElement& x);

}  // namespace tclass
