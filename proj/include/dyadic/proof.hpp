#ifndef DYADIC_PROOF_HPP
#define DYADIC_PROOF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dyadic/formula.hpp"
#include "dyadic/hypersequent.hpp"
#include "dyadic/rules.hpp"

namespace dyadic {

/// The rule applied at an internal node. `rule` is the serialized tag; which
/// tags are legal depends on the calculus the tree is checked against.
/// Component indices are zero-based.
struct ProofStep {
  std::string rule;
  std::size_t component = 0;
  std::optional<Formula> formula;
  std::optional<std::size_t> secondary;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

/// Leaves carry no step and must be initial hypersequents.
struct ProofNode {
  Hypersequent conclusion;
  std::optional<ProofStep> step;
  std::vector<ProofNode> children;

  friend bool operator==(const ProofNode&, const ProofNode&) = default;
};

inline ProofStep to_step(const RuleApplication& app) {
  return ProofStep{std::string(to_string(app.tag)), app.component, app.formula, app.secondary};
}

inline std::size_t node_count(const ProofNode& p) {
  std::size_t n = 1;
  for (const auto& c : p.children) n += node_count(c);
  return n;
}

}  // namespace dyadic

#endif  // DYADIC_PROOF_HPP
