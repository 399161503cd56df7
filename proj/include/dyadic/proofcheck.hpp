#ifndef DYADIC_PROOFCHECK_HPP
#define DYADIC_PROOFCHECK_HPP

// Independent replay of proof trees against one of two calculi:
//
//   HEPlus      the invertible search calculus. Components are sets, their
//               order is significant, and each step must reproduce exactly
//               the premises instantiate() builds.
//   HEWithCut   the cut-free calculus extended with cut: additive LK rules,
//               explicit internal weakening/contraction (WL WR CL CR),
//               external weakening/contraction (ew ec), s5', BoxR BoxL,
//               ObligR ObligL, Bet and Cut. Components and hypersequents
//               are multisets.
//
// Leaves must be initial: some component has an atom on both sides.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic/formula.hpp"
#include "dyadic/hypersequent.hpp"
#include "dyadic/proof.hpp"
#include "dyadic/rules.hpp"

namespace dyadic {

enum class CheckedCalculus { HEPlus, HEWithCut };

inline std::string_view to_string(CheckedCalculus c) { return c == CheckedCalculus::HEPlus ? "HE+" : "HE+cut"; }

struct CheckReport {
  bool ok = true;
  std::string path;  // "root", "root.0.2", ...
  std::string rule;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// I(H): the disjunction over components of [](/\Gamma_i -> \/Pi_i).
inline Formula interp(const Hypersequent& h) {
  std::vector<Formula> disjuncts;
  for (const auto& c : h.components) disjuncts.push_back(Formula::box(as_formula(c)));
  return disj_all(disjuncts);
}

namespace detail {

// ── multiset helpers ────────────────────────────────────────────────────────

inline std::vector<Formula> sorted(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end());
  return fs;
}

inline bool same_multiset(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  return a.size() == b.size() && sorted(a) == sorted(b);
}

inline bool same_set(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  auto sa = sorted(a);
  auto sb = sorted(b);
  sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
  sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
  return sa == sb;
}

inline Sequent canonical(const Sequent& s) { return Sequent{sorted(s.ant), sorted(s.suc)}; }

inline bool sequent_less(const Sequent& a, const Sequent& b) {
  if (a.ant != b.ant) return std::lexicographical_compare(a.ant.begin(), a.ant.end(), b.ant.begin(), b.ant.end());
  return std::lexicographical_compare(a.suc.begin(), a.suc.end(), b.suc.begin(), b.suc.end());
}

inline std::vector<Sequent> canonical(const std::vector<Sequent>& cs) {
  std::vector<Sequent> out;
  for (const auto& c : cs) out.push_back(canonical(c));
  std::sort(out.begin(), out.end(), sequent_less);
  return out;
}

inline bool same_hypersequent_multiset(const std::vector<Sequent>& a, const std::vector<Sequent>& b) {
  return a.size() == b.size() && canonical(a) == canonical(b);
}

inline bool same_hypersequent_ordered_sets(const Hypersequent& a, const Hypersequent& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_set(a[i].ant, b[i].ant) || !same_set(a[i].suc, b[i].suc)) return false;
  }
  return true;
}

inline bool remove_one(std::vector<Formula>& fs, const Formula& f) {
  auto it = std::find(fs.begin(), fs.end(), f);
  if (it == fs.end()) return false;
  fs.erase(it);
  return true;
}

inline std::vector<Formula> concat(std::vector<Formula> a, const std::vector<Formula>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<Sequent> without(const std::vector<Sequent>& cs, std::size_t i) {
  std::vector<Sequent> out;
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (k != i) out.push_back(cs[k]);
  return out;
}

inline std::vector<Sequent> with(std::vector<Sequent> cs, Sequent s) {
  cs.push_back(std::move(s));
  return cs;
}

/// Gamma^[] , Gamma^O: the formulas that survive context-discarding rules.
inline std::vector<Formula> global_part(const Sequent& s) { return concat(boxed_part(s), oblig_part(s)); }

struct Failure {
  std::string message;
};

// ── HE+ step ────────────────────────────────────────────────────────────────

inline std::optional<Failure> check_plus_step(const ProofNode& node) {
  const auto& step = *node.step;
  const auto tag = rule_tag_from_string(step.rule);
  if (!tag) return Failure{"unknown rule for HE+"};
  if (!step.formula) return Failure{"missing principal formula"};
  std::optional<RuleInstance> built;
  try {
    built = instantiate(node.conclusion, RuleApplication{*tag, step.component, *step.formula, step.secondary});
  } catch (const RuleError& e) {
    return Failure{e.what()};
  }
  const auto& inst = *built;
  if (inst.premises.size() != node.children.size()) {
    return Failure{"expected " + std::to_string(inst.premises.size()) + " premises, found " + std::to_string(node.children.size())};
  }
  for (std::size_t k = 0; k < inst.premises.size(); ++k) {
    if (!same_hypersequent_ordered_sets(inst.premises[k], node.children[k].conclusion)) {
      return Failure{"premise " + std::to_string(k) + " does not match the rule instance"};
    }
  }
  return std::nullopt;
}

// ── HE with cut step ────────────────────────────────────────────────────────

inline std::optional<Failure> check_cut(const ProofNode& node) {
  const auto& step = *node.step;
  const auto& concl = node.conclusion.components;
  if (node.children.size() != 2) return Failure{"Cut needs exactly two premises"};
  const Formula& a = *step.formula;
  const Sequent& target = concl[step.component];
  const auto rest = without(concl, step.component);
  const auto& left = node.children[0].conclusion.components;
  const auto& right = node.children[1].conclusion.components;
  for (std::size_t x = 0; x < left.size(); ++x) {
    Sequent lc = left[x];
    if (!remove_one(lc.ant, a)) continue;
    for (std::size_t y = 0; y < right.size(); ++y) {
      Sequent rc = right[y];
      if (!remove_one(rc.suc, a)) continue;
      if (!same_multiset(concat(lc.ant, rc.ant), target.ant) || !same_multiset(concat(lc.suc, rc.suc), target.suc)) continue;
      auto contexts = without(left, x);
      for (auto& s : without(right, y)) contexts.push_back(s);
      if (same_hypersequent_multiset(contexts, rest)) return std::nullopt;
    }
  }
  return Failure{"no split of the conclusion matches the cut premises"};
}

inline std::optional<Failure> check_cut_calculus_step(const ProofNode& node) {
  const auto& step = *node.step;
  const auto& concl = node.conclusion.components;
  const std::string& r = step.rule;
  if (step.component >= concl.size()) return Failure{"principal component out of range"};
  const Sequent& c = concl[step.component];
  const auto rest = without(concl, step.component);

  const bool structural_external = r == "ew" || r == "ec" || r == "s5'";
  if (!structural_external && !step.formula) return Failure{"missing principal formula"};
  if (r == "Cut") return check_cut(node);

  std::vector<std::vector<Sequent>> expected;
  auto need = [&](bool cond, const char* what) -> std::optional<Failure> {
    if (!cond) return Failure{what};
    return std::nullopt;
  };

  // Principal formula removed from its side of c.
  auto minus_ant = [&]() {
    Sequent s = c;
    return remove_one(s.ant, *step.formula) ? std::optional<Sequent>(s) : std::nullopt;
  };
  auto minus_suc = [&]() {
    Sequent s = c;
    return remove_one(s.suc, *step.formula) ? std::optional<Sequent>(s) : std::nullopt;
  };
  auto has_main = [&](Connective k) { return step.formula && step.formula->is(k); };

  if (r == "NegL" || r == "NegR" || r == "ImplL" || r == "ImplR") {
    const bool left_side = r == "NegL" || r == "ImplL";
    const Connective k = (r == "NegL" || r == "NegR") ? Connective::Neg : Connective::Impl;
    if (auto f = need(has_main(k), "principal formula has the wrong main connective")) return f;
    auto base = left_side ? minus_ant() : minus_suc();
    if (!base) return Failure{"principal formula not found on the expected side"};
    const Formula& p = *step.formula;
    if (r == "NegL") {
      Sequent s = *base;
      s.suc.push_back(p.child());
      expected.push_back(with(rest, s));
    } else if (r == "NegR") {
      Sequent s = *base;
      s.ant.push_back(p.child());
      expected.push_back(with(rest, s));
    } else if (r == "ImplL") {
      Sequent s1 = *base;
      s1.suc.push_back(p.left());
      Sequent s2 = *base;
      s2.ant.push_back(p.right());
      expected.push_back(with(rest, s1));
      expected.push_back(with(rest, s2));
    } else {
      Sequent s = *base;
      s.ant.push_back(p.left());
      s.suc.push_back(p.right());
      expected.push_back(with(rest, s));
    }
  } else if (r == "WL" || r == "WR") {
    auto base = r == "WL" ? minus_ant() : minus_suc();
    if (!base) return Failure{"weakened formula not found"};
    expected.push_back(with(rest, *base));
  } else if (r == "CL" || r == "CR") {
    Sequent s = c;
    auto& side = r == "CL" ? s.ant : s.suc;
    if (std::find(side.begin(), side.end(), *step.formula) == side.end()) return Failure{"contracted formula not found"};
    side.push_back(*step.formula);
    expected.push_back(with(rest, s));
  } else if (r == "ew") {
    expected.push_back(rest);
  } else if (r == "ec") {
    expected.push_back(with(concl, c));
  } else if (r == "s5'") {
    if (!step.secondary || *step.secondary >= concl.size() || *step.secondary == step.component) {
      return Failure{"s5' needs a secondary component distinct from the principal one"};
    }
    if (!c.suc.empty()) return Failure{"s5' principal component must have an empty succedent"};
    const Sequent& other = concl[*step.secondary];
    std::vector<Sequent> ctx;
    for (std::size_t k = 0; k < concl.size(); ++k)
      if (k != step.component && k != *step.secondary) ctx.push_back(concl[k]);
    expected.push_back(with(ctx, Sequent{concat(global_part(c), other.ant), other.suc}));
  } else if (r == "BoxR") {
    if (auto f = need(has_main(Connective::Box), "principal formula is not boxed")) return f;
    if (!minus_suc()) return Failure{"principal formula not in the succedent"};
    expected.push_back(with(rest, Sequent{global_part(c), {step.formula->child()}}));
  } else if (r == "BoxL") {
    if (auto f = need(has_main(Connective::Box), "principal formula is not boxed")) return f;
    if (!c.in_ant(*step.formula)) return Failure{"principal formula not in the antecedent"};
    Sequent s = c;
    s.ant.push_back(step.formula->child());
    expected.push_back(with(rest, s));
  } else if (r == "ObligR") {
    if (auto f = need(has_main(Connective::Oblig), "principal formula is not an obligation")) return f;
    if (!minus_suc()) return Failure{"principal formula not in the succedent"};
    const Formula& p = *step.formula;
    auto ant = global_part(c);
    ant.push_back(p.antecedent());
    ant.push_back(bet_not(p.antecedent()));
    expected.push_back(with(rest, Sequent{ant, {p.consequent()}}));
  } else if (r == "ObligL") {
    if (auto f = need(has_main(Connective::Oblig), "principal formula is not an obligation")) return f;
    if (!c.in_ant(*step.formula)) return Failure{"principal formula not in the antecedent"};
    const Formula& p = *step.formula;
    Sequent s1 = c, s2 = c, s3 = c;
    s1.suc.push_back(p.antecedent());
    s2.suc.push_back(bet_not(p.antecedent()));
    s3.ant.push_back(p.consequent());
    expected = {with(rest, s1), with(rest, s2), with(rest, s3)};
  } else if (r == "Bet") {
    if (auto f = need(has_main(Connective::Bet), "principal formula is not a Bet formula")) return f;
    if (!minus_suc()) return Failure{"principal formula not in the succedent"};
    expected.push_back(with(rest, Sequent{concat(global_part(c), bet_drop(c)), {step.formula->child()}}));
  } else {
    return Failure{"unknown rule for HE+cut"};
  }

  if (expected.size() != node.children.size()) {
    return Failure{"expected " + std::to_string(expected.size()) + " premises, found " + std::to_string(node.children.size())};
  }
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (!same_hypersequent_multiset(expected[k], node.children[k].conclusion.components)) {
      return Failure{"premise " + std::to_string(k) + " does not match the rule instance"};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Replays every step of the tree, pre-order, left to right, and reports the
/// first node that is neither an initial leaf nor a correct rule instance.
inline CheckReport check(const ProofNode& proof, CheckedCalculus calculus) {
  struct Frame {
    const ProofNode* node;
    std::string path;
  };
  std::vector<Frame> stack{{&proof, "root"}};
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    const ProofNode& node = *frame.node;
    if (node.conclusion.components.empty()) return {false, frame.path, "", "empty hypersequent"};
    if (!node.step) {
      if (!node.children.empty()) return {false, frame.path, "", "node without a rule has premises"};
      if (!is_initial(node.conclusion)) return {false, frame.path, "", "leaf is not an initial hypersequent"};
      continue;
    }
    auto failure = calculus == CheckedCalculus::HEPlus ? detail::check_plus_step(node) : detail::check_cut_calculus_step(node);
    if (failure) return {false, frame.path, node.step->rule, failure->message};
    for (std::size_t k = node.children.size(); k-- > 0;) {
      stack.push_back({&node.children[k], frame.path + "." + std::to_string(k)});
    }
  }
  return {};
}

}  // namespace dyadic

#endif  // DYADIC_PROOFCHECK_HPP
