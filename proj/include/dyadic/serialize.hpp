#ifndef DYADIC_SERIALIZE_HPP
#define DYADIC_SERIALIZE_HPP

// JSON wire formats. Formulas travel as their rendered text; component and
// world indices are one-based on the wire.
//
//   hypersequent  {"components":[{"ant":[...],"suc":[...]}, ...]}
//   proof         {"conclusion":H, "rule":tag|null,
//                  "principal":{"component":i,"formula":"...","secondary":j|null}|null,
//                  "children":[...]}
//   model         {"worlds":[1,2], "succ":[[2,1]], "valuation":{"1":["g","k"],"2":[]}}
//                 succ pairs are [better, worse]
//   stats         {"max_components":..,"max_component_formulas":..,
//                  "max_branch_length":..,"nodes_expanded":..}

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dyadic/formula.hpp"
#include "dyadic/hypersequent.hpp"
#include "dyadic/proof.hpp"
#include "dyadic/search.hpp"
#include "dyadic/semantics.hpp"
#include "dyadic/syntax.hpp"

namespace dyadic {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::size_t one_based(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) throw SchemaError(where + ": expected a positive index");
  return j.get<std::size_t>() - 1;
}

inline Formula formula_from(const Json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": formula must be a string");
  try {
    return parse(j.get<std::string>(), ParseOptions{.allow_bet = true});
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

inline std::vector<Formula> formulas_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of formulas");
  std::vector<Formula> out;
  for (const auto& e : j) out.push_back(formula_from(e, where));
  return out;
}

inline Json formulas_to(const std::vector<Formula>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(render(f));
  return arr;
}

}  // namespace detail

// ── hypersequents ───────────────────────────────────────────────────────────

inline Json to_json(const Sequent& s) { return Json{{"ant", detail::formulas_to(s.ant)}, {"suc", detail::formulas_to(s.suc)}}; }

inline Json to_json(const Hypersequent& h) {
  Json comps = Json::array();
  for (const auto& c : h.components) comps.push_back(to_json(c));
  return Json{{"components", comps}};
}

/// Lists are read verbatim (duplicates kept) so multiset transcripts survive.
inline Hypersequent hypersequent_from_json(const Json& j) {
  const auto& comps = detail::field(j, "components", "hypersequent");
  if (!comps.is_array()) throw SchemaError("hypersequent: 'components' must be an array");
  Hypersequent h;
  for (const auto& c : comps) {
    h.components.push_back(Sequent{detail::formulas_from(detail::field(c, "ant", "component"), "component.ant"),
                                   detail::formulas_from(detail::field(c, "suc", "component"), "component.suc")});
  }
  return h;
}

// ── proofs ──────────────────────────────────────────────────────────────────

inline Json to_json(const ProofNode& p) {
  Json j;
  j["conclusion"] = to_json(p.conclusion);
  if (p.step) {
    j["rule"] = p.step->rule;
    Json principal;
    principal["component"] = p.step->component + 1;
    principal["formula"] = p.step->formula ? Json(render(*p.step->formula)) : Json(nullptr);
    principal["secondary"] = p.step->secondary ? Json(*p.step->secondary + 1) : Json(nullptr);
    j["principal"] = principal;
  } else {
    j["rule"] = nullptr;
    j["principal"] = nullptr;
  }
  Json children = Json::array();
  for (const auto& c : p.children) children.push_back(to_json(c));
  j["children"] = children;
  return j;
}

inline ProofNode proof_from_json(const Json& j) {
  ProofNode p;
  p.conclusion = hypersequent_from_json(detail::field(j, "conclusion", "proof node"));
  const auto& rule = detail::field(j, "rule", "proof node");
  if (!rule.is_null()) {
    if (!rule.is_string()) throw SchemaError("proof node: 'rule' must be a string or null");
    const auto& pr = detail::field(j, "principal", "proof node");
    ProofStep step;
    step.rule = rule.get<std::string>();
    step.component = detail::one_based(detail::field(pr, "component", "principal"), "principal.component");
    if (pr.contains("formula") && !pr.at("formula").is_null()) step.formula = detail::formula_from(pr.at("formula"), "principal.formula");
    if (pr.contains("secondary") && !pr.at("secondary").is_null()) {
      step.secondary = detail::one_based(pr.at("secondary"), "principal.secondary");
    }
    p.step = std::move(step);
  }
  const auto& children = detail::field(j, "children", "proof node");
  if (!children.is_array()) throw SchemaError("proof node: 'children' must be an array");
  for (const auto& c : children) p.children.push_back(proof_from_json(c));
  return p;
}

// ── models ──────────────────────────────────────────────────────────────────

inline Json to_json(const PreferenceModel& m) {
  Json worlds = Json::array();
  for (auto id : m.ids) worlds.push_back(id);
  Json succ = Json::array();
  for (std::size_t x = 0; x < m.world_count(); ++x)
    for (std::size_t y = 0; y < m.world_count(); ++y)
      if (m.better[x][y]) succ.push_back(Json::array({m.ids[x], m.ids[y]}));
  Json val = Json::object();
  for (std::size_t w = 0; w < m.world_count(); ++w) val[std::to_string(m.ids[w])] = m.valuation[w];
  return Json{{"worlds", worlds}, {"succ", succ}, {"valuation", val}};
}

inline PreferenceModel model_from_json(const Json& j) {
  const auto& worlds = detail::field(j, "worlds", "model");
  if (!worlds.is_array() || worlds.empty()) throw SchemaError("model: 'worlds' must be a nonempty array");
  PreferenceModel m;
  for (const auto& w : worlds) {
    if (!w.is_number_unsigned()) throw SchemaError("model: world ids must be natural numbers");
    m.ids.push_back(w.get<WorldId>());
  }
  const std::size_t n = m.ids.size();
  m.better.assign(n, std::vector<bool>(n, false));
  m.valuation.assign(n, {});
  try {
    validate(m);
    const auto& succ = detail::field(j, "succ", "model");
    if (!succ.is_array()) throw SchemaError("model: 'succ' must be an array");
    for (const auto& pair : succ) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
        throw SchemaError("model: succ entries must be [better, worse] pairs of world ids");
      }
      m.set_better(pair[0].get<WorldId>(), pair[1].get<WorldId>());
    }
    const auto& val = detail::field(j, "valuation", "model");
    if (!val.is_object()) throw SchemaError("model: 'valuation' must be an object");
    for (const auto& [key, atoms] : val.items()) {
      WorldId id = 0;
      try {
        std::size_t used = 0;
        id = std::stoull(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::logic_error&) {
        throw SchemaError("model: valuation key '" + key + "' is not a world id");
      }
      if (!atoms.is_array()) throw SchemaError("model: valuation entries must be arrays of atom names");
      for (const auto& a : atoms) {
        if (!a.is_string()) throw SchemaError("model: atom names must be strings");
        m.set_true(id, a.get<std::string>());
      }
    }
  } catch (const ModelError& e) {
    throw SchemaError(std::string("model: ") + e.what());
  }
  return m;
}

// ── search results ──────────────────────────────────────────────────────────

inline Json to_json(const SearchStats& s) {
  return Json{{"max_components", s.max_components},
              {"max_component_formulas", s.max_component_formulas},
              {"max_branch_length", s.max_branch_length},
              {"nodes_expanded", s.nodes_expanded}};
}

/// Summary without the proof tree, which is emitted separately on request.
inline Json to_json(const Verdict& v) {
  Json j;
  if (v.proven()) {
    j["verdict"] = "proven";
    j["proof_nodes"] = node_count(v.proof().proof);
  } else {
    const auto& r = v.refutation();
    j["verdict"] = "refuted";
    j["falsifying_world"] = r.falsifying_world;
    j["saturated"] = to_json(r.saturated);
    j["model"] = to_json(r.model);
  }
  j["stats"] = to_json(v.stats);
  return j;
}

}  // namespace dyadic

#endif  // DYADIC_SERIALIZE_HPP
