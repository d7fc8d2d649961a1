#pragma once

// JSON documents for monomial modules:
//
//   {"vars": 2, "components": [{"twist": 0, "gens": ["x0^2", "x0 x1"]}]}
//
// Each entry of "gens" may itself hold several comma-separated generators.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gotzmann/errors.hpp"
#include "gotzmann/monomial.hpp"

namespace gotzmann {

using Json = nlohmann::ordered_json;

inline Json module_to_json(const MonomialModule& mod) {
  Json comps = Json::array();
  for (const auto& c : mod.components()) {
    Json gens = Json::array();
    for (const auto& g : c.ideal.gens()) gens.push_back(format_monomial(g));
    comps.push_back(Json{{"twist", c.twist}, {"gens", gens}});
  }
  return Json{{"vars", mod.vars()}, {"components", comps}};
}

inline MonomialModule module_from_json(const Json& doc) {
  try {
    const auto vars = doc.at("vars").get<std::size_t>();
    if (vars == 0) throw ParseError("module document: vars must be positive");
    std::vector<ModuleComponent> comps;
    for (const auto& c : doc.at("components")) {
      std::vector<Monomial> gens;
      for (const auto& g : c.at("gens")) {
        const auto ideal = parse_ideal(g.get<std::string>(), vars);
        gens.insert(gens.end(), ideal.gens().begin(), ideal.gens().end());
      }
      comps.push_back({c.at("twist").get<int>(), MonomialIdeal(vars, std::move(gens))});
    }
    return MonomialModule(vars, std::move(comps));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("module document: ") + e.what());
  }
}

inline MonomialModule parse_module(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("module document is not valid JSON: ") + e.what());
  }
  return module_from_json(doc);
}

inline MonomialModule load_module(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open module file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_module(buf.str());
}

}  // namespace gotzmann
