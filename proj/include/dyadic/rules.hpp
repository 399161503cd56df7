#ifndef DYADIC_RULES_HPP
#define DYADIC_RULES_HPP

// The eleven rules of the invertible search calculus. Every rule copies its
// conclusion into each premise and only ever adds formulas to existing
// components or appends new components, so premises contain the conclusion.
//
// A backward application is redundant when its saturation condition already
// holds in the conclusion; the search never applies redundant instances.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic/formula.hpp"
#include "dyadic/hypersequent.hpp"

namespace dyadic {

enum class RuleTag {
  NegL,
  NegR,
  ImplL,
  ImplR,
  ObligRPlus,
  ObligLPlus,
  ObligL2,
  BetPlus,
  BoxRPlus,
  BoxLPlus,
  BoxL2,
};

inline constexpr std::array<RuleTag, 11> kAllRuleTags = {
    RuleTag::NegL,     RuleTag::NegR,    RuleTag::ImplL,    RuleTag::ImplR,    RuleTag::ObligRPlus, RuleTag::ObligLPlus,
    RuleTag::ObligL2,  RuleTag::BetPlus, RuleTag::BoxRPlus, RuleTag::BoxLPlus, RuleTag::BoxL2,
};

inline std::string_view to_string(RuleTag tag) {
  switch (tag) {
    case RuleTag::NegL: return "NegL";
    case RuleTag::NegR: return "NegR";
    case RuleTag::ImplL: return "ImplL";
    case RuleTag::ImplR: return "ImplR";
    case RuleTag::ObligRPlus: return "ObligR+";
    case RuleTag::ObligLPlus: return "ObligL+";
    case RuleTag::ObligL2: return "ObligL2";
    case RuleTag::BetPlus: return "Bet+";
    case RuleTag::BoxRPlus: return "BoxR+";
    case RuleTag::BoxLPlus: return "BoxL+";
    case RuleTag::BoxL2: return "BoxL2";
  }
  return "?";
}

inline std::optional<RuleTag> rule_tag_from_string(std::string_view s) {
  for (auto tag : kAllRuleTags)
    if (to_string(tag) == s) return tag;
  return std::nullopt;
}

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which rule, on which formula of which component. Component indices are
/// zero-based here; serialized forms are one-based.
struct RuleApplication {
  RuleTag tag;
  std::size_t component;
  Formula formula;
  std::optional<std::size_t> secondary;

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct RuleInstance {
  RuleApplication application;
  std::vector<Hypersequent> premises;
};

namespace detail {

struct RuleShape {
  bool on_antecedent;
  Connective connective;
  bool cross_component;
};

inline RuleShape shape_of(RuleTag tag) {
  switch (tag) {
    case RuleTag::NegL: return {true, Connective::Neg, false};
    case RuleTag::NegR: return {false, Connective::Neg, false};
    case RuleTag::ImplL: return {true, Connective::Impl, false};
    case RuleTag::ImplR: return {false, Connective::Impl, false};
    case RuleTag::ObligRPlus: return {false, Connective::Oblig, false};
    case RuleTag::ObligLPlus: return {true, Connective::Oblig, false};
    case RuleTag::ObligL2: return {true, Connective::Oblig, true};
    case RuleTag::BetPlus: return {false, Connective::Bet, false};
    case RuleTag::BoxRPlus: return {false, Connective::Box, false};
    case RuleTag::BoxLPlus: return {true, Connective::Box, false};
    case RuleTag::BoxL2: return {true, Connective::Box, true};
  }
  return {true, Connective::Atom, false};
}

inline void validate(const Hypersequent& h, const RuleApplication& app) {
  const auto shape = shape_of(app.tag);
  const std::string rule(to_string(app.tag));
  if (app.component >= h.size()) throw RuleError(rule + ": principal component out of range");
  if (!app.formula.is(shape.connective)) throw RuleError(rule + ": principal formula has the wrong main connective");
  const auto& comp = h[app.component];
  if (shape.on_antecedent ? !comp.in_ant(app.formula) : !comp.in_suc(app.formula)) {
    throw RuleError(rule + ": principal formula not on the " + (shape.on_antecedent ? "left" : "right") + " of component " +
                    std::to_string(app.component + 1));
  }
  if (shape.cross_component) {
    if (!app.secondary) throw RuleError(rule + ": secondary component required");
    if (*app.secondary >= h.size()) throw RuleError(rule + ": secondary component out of range");
    if (*app.secondary == app.component) throw RuleError(rule + ": secondary component must differ from the principal one");
  } else if (app.secondary) {
    throw RuleError(rule + ": rule takes no secondary component");
  }
}

inline Formula bet_not(const Formula& a) { return Formula::bet(Formula::neg(a)); }

inline bool includes_all(const Sequent& s, const std::vector<Formula>& fs) {
  return std::all_of(fs.begin(), fs.end(), [&](const Formula& f) { return s.in_ant(f); });
}

}  // namespace detail

/// True iff the saturation condition attached to this application holds in h.
inline bool is_redundant(const Hypersequent& h, const RuleApplication& app) {
  detail::validate(h, app);
  const auto& f = app.formula;
  const auto& comp = h[app.component];
  const auto any_component = [&](auto pred) { return std::any_of(h.components.begin(), h.components.end(), pred); };
  switch (app.tag) {
    case RuleTag::NegL: return comp.in_suc(f.child());
    case RuleTag::NegR: return comp.in_ant(f.child());
    case RuleTag::ImplL: return comp.in_suc(f.left()) || comp.in_ant(f.right());
    case RuleTag::ImplR: return comp.in_ant(f.left()) && comp.in_suc(f.right());
    case RuleTag::ObligLPlus:
    case RuleTag::ObligL2: {
      const auto& target = app.tag == RuleTag::ObligLPlus ? comp : h[*app.secondary];
      return target.in_suc(f.antecedent()) || target.in_suc(detail::bet_not(f.antecedent())) || target.in_ant(f.consequent());
    }
    case RuleTag::ObligRPlus: {
      const auto guard = detail::bet_not(f.antecedent());
      return any_component(
          [&](const Sequent& s) { return s.in_ant(f.antecedent()) && s.in_ant(guard) && s.in_suc(f.consequent()); });
    }
    case RuleTag::BetPlus: {
      const auto bodies = bet_drop(comp);
      return any_component([&](const Sequent& s) { return s.in_suc(f.child()) && detail::includes_all(s, bodies); });
    }
    case RuleTag::BoxRPlus: return any_component([&](const Sequent& s) { return s.in_suc(f.child()); });
    case RuleTag::BoxLPlus: return comp.in_ant(f.child());
    case RuleTag::BoxL2: return h[*app.secondary].in_ant(f.child());
  }
  return false;
}

/// Builds the premises of a backward application. Throws RuleError when the
/// application does not match h.
inline RuleInstance instantiate(const Hypersequent& h, const RuleApplication& app) {
  detail::validate(h, app);
  const auto& f = app.formula;
  const std::size_t i = app.component;
  RuleInstance inst{app, {}};
  auto premise = [&](auto edit) {
    Hypersequent p = h;
    edit(p);
    inst.premises.push_back(std::move(p));
  };
  switch (app.tag) {
    case RuleTag::NegL: premise([&](Hypersequent& p) { p[i].insert_suc(f.child()); }); break;
    case RuleTag::NegR: premise([&](Hypersequent& p) { p[i].insert_ant(f.child()); }); break;
    case RuleTag::ImplL:
      premise([&](Hypersequent& p) { p[i].insert_suc(f.left()); });
      premise([&](Hypersequent& p) { p[i].insert_ant(f.right()); });
      break;
    case RuleTag::ImplR:
      premise([&](Hypersequent& p) {
        p[i].insert_ant(f.left());
        p[i].insert_suc(f.right());
      });
      break;
    case RuleTag::ObligLPlus:
    case RuleTag::ObligL2: {
      const std::size_t t = app.tag == RuleTag::ObligLPlus ? i : *app.secondary;
      premise([&](Hypersequent& p) { p[t].insert_suc(f.antecedent()); });
      premise([&](Hypersequent& p) { p[t].insert_suc(detail::bet_not(f.antecedent())); });
      premise([&](Hypersequent& p) { p[t].insert_ant(f.consequent()); });
      break;
    }
    case RuleTag::ObligRPlus:
      premise([&](Hypersequent& p) {
        p.components.push_back(make_sequent({f.antecedent(), detail::bet_not(f.antecedent())}, {f.consequent()}));
      });
      break;
    case RuleTag::BetPlus:
      premise([&](Hypersequent& p) { p.components.push_back(make_sequent(bet_drop(h[i]), {f.child()})); });
      break;
    case RuleTag::BoxRPlus: premise([&](Hypersequent& p) { p.components.push_back(make_sequent({}, {f.child()})); }); break;
    case RuleTag::BoxLPlus: premise([&](Hypersequent& p) { p[i].insert_ant(f.child()); }); break;
    case RuleTag::BoxL2: premise([&](Hypersequent& p) { p[*app.secondary].insert_ant(f.child()); }); break;
  }
  return inst;
}

namespace detail {

// Visits every candidate application in the fixed strategy order:
//   1. NegL, NegR, ImplR, one component at a time;
//   2. BoxL+ and BoxL2, per boxed antecedent formula;
//   3. the component-creating rules BoxR+, ObligR+, Bet+;
//   4. ImplL;
//   5. ObligL+ and ObligL2, per obligation in an antecedent.
// Non-branching rules come first and branching rules last, so a branching
// rule meets a hypersequent whose other rules are saturated and splits are
// not duplicated below each other. Within a phase: leftmost component
// first, formulas in insertion order, L2 targets in index order. The
// visitor returns true to stop.
template <typename Visitor>
bool for_each_candidate(const Hypersequent& h, Visitor&& visit) {
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : h[i].ant)
      if (f.is(Connective::Neg) && visit(RuleApplication{RuleTag::NegL, i, f, {}})) return true;
    for (const auto& f : h[i].suc) {
      if (f.is(Connective::Neg) && visit(RuleApplication{RuleTag::NegR, i, f, {}})) return true;
      if (f.is(Connective::Impl) && visit(RuleApplication{RuleTag::ImplR, i, f, {}})) return true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : h[i].ant) {
      if (!f.is(Connective::Box)) continue;
      if (visit(RuleApplication{RuleTag::BoxLPlus, i, f, {}})) return true;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && visit(RuleApplication{RuleTag::BoxL2, i, f, j})) return true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : h[i].suc) {
      if (f.is(Connective::Box) && visit(RuleApplication{RuleTag::BoxRPlus, i, f, {}})) return true;
      if (f.is(Connective::Oblig) && visit(RuleApplication{RuleTag::ObligRPlus, i, f, {}})) return true;
      if (f.is(Connective::Bet) && visit(RuleApplication{RuleTag::BetPlus, i, f, {}})) return true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& f : h[i].ant)
      if (f.is(Connective::Impl) && visit(RuleApplication{RuleTag::ImplL, i, f, {}})) return true;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : h[i].ant) {
      if (!f.is(Connective::Oblig)) continue;
      if (visit(RuleApplication{RuleTag::ObligLPlus, i, f, {}})) return true;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && visit(RuleApplication{RuleTag::ObligL2, i, f, j})) return true;
    }
  }
  return false;
}

}  // namespace detail

/// The first non-redundant application in strategy order, if any. Never
/// applies to initial hypersequents.
inline std::optional<RuleApplication> first_applicable(const Hypersequent& h) {
  if (is_initial(h)) return std::nullopt;
  std::optional<RuleApplication> found;
  detail::for_each_candidate(h, [&](const RuleApplication& app) {
    if (is_redundant(h, app)) return false;
    found = app;
    return true;
  });
  return found;
}

/// All non-redundant instances in strategy order.
inline std::vector<RuleInstance> applicable_instances(const Hypersequent& h) {
  std::vector<RuleInstance> out;
  if (is_initial(h)) return out;
  detail::for_each_candidate(h, [&](const RuleApplication& app) {
    if (!is_redundant(h, app)) out.push_back(instantiate(h, app));
    return false;
  });
  return out;
}

/// Not initial, and every saturation condition holds for every formula
/// occurrence and component pair.
inline bool is_saturated(const Hypersequent& h) {
  if (is_initial(h)) return false;
  return !detail::for_each_candidate(h, [&](const RuleApplication& app) { return !is_redundant(h, app); });
}

}  // namespace dyadic

#endif  // DYADIC_RULES_HPP
