#ifndef DYADIC_SEARCH_HPP
#define DYADIC_SEARCH_HPP

// Backward proof search. At every node the first non-redundant rule
// application (strategy order of rules.hpp) is taken and premises are
// expanded depth first, left to right. Since every rule is invertible no
// choice is ever revisited: the first saturated leaf yields a countermodel,
// and if none exists the tree is a proof.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dyadic/formula.hpp"
#include "dyadic/hypersequent.hpp"
#include "dyadic/proof.hpp"
#include "dyadic/rules.hpp"
#include "dyadic/semantics.hpp"

namespace dyadic {

struct SearchStats {
  std::size_t max_components = 0;
  std::size_t max_component_formulas = 0;
  std::size_t max_branch_length = 0;
  std::uint64_t nodes_expanded = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct Proven {
  ProofNode proof;
};

struct Refuted {
  Hypersequent saturated;
  PreferenceModel model;
  WorldId falsifying_world;
};

struct Verdict {
  std::variant<Proven, Refuted> outcome;
  SearchStats stats;

  bool proven() const { return std::holds_alternative<Proven>(outcome); }
  const Proven& proof() const { return std::get<Proven>(outcome); }
  const Refuted& refutation() const { return std::get<Refuted>(outcome); }
};

/// Raised when the expansion cap is hit. The calculus terminates on every
/// input, so this only signals an undersized cap or a defect.
class SearchLimitExceeded : public std::runtime_error {
 public:
  SearchLimitExceeded(std::uint64_t cap, SearchStats stats)
      : std::runtime_error("proof search exceeded the step cap of " + std::to_string(cap) + " rule applications"),
        stats_(stats) {}
  const SearchStats& stats() const { return stats_; }

 private:
  SearchStats stats_;
};

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

struct SearchOptions {
  std::uint64_t max_steps = kDefaultMaxSteps;
  bool allow_bet = false;
};

namespace detail {

inline void record(SearchStats& stats, const Hypersequent& h, std::size_t depth) {
  stats.max_components = std::max(stats.max_components, h.size());
  for (const auto& c : h.components) stats.max_component_formulas = std::max(stats.max_component_formulas, c.formula_count());
  stats.max_branch_length = std::max(stats.max_branch_length, depth);
}

inline bool extends(const Sequent& big, const Sequent& small) {
  return std::all_of(small.ant.begin(), small.ant.end(), [&](const Formula& f) { return big.in_ant(f); }) &&
         std::all_of(small.suc.begin(), small.suc.end(), [&](const Formula& f) { return big.in_suc(f); });
}

/// One formula placed on one side of one component.
struct Placement {
  std::size_t component;
  bool antecedent;
  Formula formula;

  bool matches(std::size_t c, bool ant, const Formula& f) const { return component == c && antecedent == ant && formula == f; }
};

/// What each premise of a branching rule adds to the conclusion.
inline std::vector<Placement> branch_additions(const RuleApplication& app) {
  const auto& f = app.formula;
  switch (app.tag) {
    case RuleTag::ImplL: return {{app.component, false, f.left()}, {app.component, true, f.right()}};
    case RuleTag::ObligLPlus:
    case RuleTag::ObligL2: {
      const std::size_t t = app.tag == RuleTag::ObligLPlus ? app.component : *app.secondary;
      return {{t, false, f.antecedent()}, {t, false, Formula::bet(Formula::neg(f.antecedent()))}, {t, true, f.consequent()}};
    }
    default: return {};
  }
}

/// Formulas a single step adds to existing components.
inline std::vector<Placement> step_additions(const RuleApplication& app) {
  const auto& f = app.formula;
  switch (app.tag) {
    case RuleTag::NegL: return {{app.component, false, f.child()}};
    case RuleTag::NegR: return {{app.component, true, f.child()}};
    case RuleTag::ImplR: return {{app.component, true, f.left()}, {app.component, false, f.right()}};
    case RuleTag::BoxLPlus: return {{app.component, true, f.child()}};
    case RuleTag::BoxL2: return {{*app.secondary, true, f.child()}};
    case RuleTag::ImplL:
    case RuleTag::ObligLPlus:
    case RuleTag::ObligL2: return branch_additions(app);
    case RuleTag::ObligRPlus:
    case RuleTag::BetPlus:
    case RuleTag::BoxRPlus: return {};
  }
  return {};
}

inline Hypersequent without(Hypersequent h, const std::vector<Placement>& xs) {
  for (const auto& x : xs) {
    auto& side = x.antecedent ? h[x.component].ant : h[x.component].suc;
    if (auto it = std::find(side.begin(), side.end(), x.formula); it != side.end()) side.erase(it);
  }
  return h;
}

/// Additions of a local one-premise step that are not already in h.
inline std::vector<Placement> fresh_additions(const Hypersequent& h, const RuleApplication& app) {
  std::vector<Placement> out;
  for (auto& x : step_additions(app)) {
    const auto& c = h[x.component];
    if (!(x.antecedent ? c.in_ant(x.formula) : c.in_suc(x.formula))) out.push_back(std::move(x));
  }
  return out;
}

inline bool is_local_linear(RuleTag tag) {
  return tag == RuleTag::NegL || tag == RuleTag::NegR || tag == RuleTag::ImplR || tag == RuleTag::BoxLPlus ||
         tag == RuleTag::BoxL2;
}

/// False if deleting xs from every hypersequent of the closed tree leaves a
/// correct derivation: none of them is principal, re-added by a step or
/// copied by Bet+, and every leaf stays initial without them.
inline bool uses(const ProofNode& node, const std::vector<Placement>& xs) {
  if (!node.step) return !is_initial(without(node.conclusion, xs));
  const auto& step = *node.step;
  const RuleApplication app{*rule_tag_from_string(step.rule), step.component, *step.formula, step.secondary};
  const bool principal_on_ant = shape_of(app.tag).on_antecedent;
  const auto added = step_additions(app);
  for (const auto& x : xs) {
    if (x.matches(app.component, principal_on_ant, app.formula)) return true;
    for (const auto& a : added)
      if (x.matches(a.component, a.antecedent, a.formula)) return true;
    if (app.tag == RuleTag::BetPlus && x.component == app.component && x.antecedent && x.formula.is(Connective::Bet)) return true;
  }
  return std::any_of(node.children.begin(), node.children.end(), [&](const ProofNode& c) { return uses(c, xs); });
}

inline void erase_everywhere(ProofNode& node, const std::vector<Placement>& xs) {
  node.conclusion = without(std::move(node.conclusion), xs);
  for (auto& c : node.children) erase_everywhere(c, xs);
}

enum class Outcome { Closed, Open };

class Searcher {
 public:
  explicit Searcher(const SearchOptions& options) : options_(options) {}

  // Expands node depth first. Closed subtrees are condensed on the way up:
  // when a premise's derivation never needs the formulas that premise
  // added, the formulas are erased from it and it replaces the node. For a
  // branching node the remaining premises are then not expanded, since the
  // conclusion is already proved.
  Outcome expand(ProofNode& node, std::size_t depth) {
    record(stats, node.conclusion, depth);
    if (is_initial(node.conclusion)) return Outcome::Closed;
    const auto app = first_applicable(node.conclusion);
    if (!app) {
      saturated = node.conclusion;
      return Outcome::Open;
    }
    if (stats.nodes_expanded >= options_.max_steps) throw SearchLimitExceeded(options_.max_steps, stats);
    ++stats.nodes_expanded;

    auto inst = instantiate(node.conclusion, *app);
    if (inst.premises.size() == 1) {
      ProofNode child{std::move(inst.premises[0]), std::nullopt, {}};
      if (expand(child, depth + 1) == Outcome::Open) return Outcome::Open;
      if (is_local_linear(app->tag)) {
        if (auto fresh = fresh_additions(node.conclusion, *app); !uses(child, fresh)) {
          erase_everywhere(child, fresh);
          node = std::move(child);
          return Outcome::Closed;
        }
      }
      node.step = to_step(*app);
      node.children.push_back(std::move(child));
      return Outcome::Closed;
    }

    node.step = to_step(*app);
    const auto additions = branch_additions(*app);
    for (std::size_t k = 0; k < inst.premises.size(); ++k) {
      ProofNode child{std::move(inst.premises[k]), std::nullopt, {}};
      if (expand(child, depth + 1) == Outcome::Open) return Outcome::Open;
      if (!uses(child, {additions[k]})) {
        erase_everywhere(child, {additions[k]});
        node = std::move(child);
        return Outcome::Closed;
      }
      node.children.push_back(std::move(child));
    }
    return Outcome::Closed;
  }

  SearchStats stats;
  std::optional<Hypersequent> saturated;

 private:
  SearchOptions options_;
};

}  // namespace detail

inline Verdict decide(const Sequent& root_input, const SearchOptions& options = {}) {
  const Sequent root = make_sequent(root_input.ant, root_input.suc);
  if (!options.allow_bet) {
    auto has_bet = [](const Formula& f) { return contains_bet(f); };
    if (std::any_of(root.ant.begin(), root.ant.end(), has_bet) || std::any_of(root.suc.begin(), root.suc.end(), has_bet)) {
      throw std::invalid_argument("decide: Bet is not allowed in the root sequent");
    }
  }

  detail::Searcher searcher(options);
  ProofNode proof{Hypersequent{{root}}, std::nullopt, {}};
  if (searcher.expand(proof, 0) == detail::Outcome::Closed) return Verdict{Proven{std::move(proof)}, searcher.stats};

  Hypersequent saturated = std::move(*searcher.saturated);
  PreferenceModel model = extract_model(saturated);
  std::size_t world = 0;
  while (world < saturated.size() && !detail::extends(saturated[world], root)) ++world;
  return Verdict{Refuted{std::move(saturated), std::move(model), static_cast<WorldId>(world + 1)}, searcher.stats};
}

inline Verdict decide_formula(const Formula& f, const SearchOptions& options = {}) {
  return decide(make_sequent({}, {f}), options);
}

}  // namespace dyadic

#endif  // DYADIC_SEARCH_HPP
