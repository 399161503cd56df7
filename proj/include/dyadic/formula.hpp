#ifndef DYADIC_FORMULA_HPP
#define DYADIC_FORMULA_HPP

// Formulas of the dyadic deontic language: atoms, negation, implication,
// the universal modality [], dyadic obligation O(B/A), and the meta-level
// betterness modality Bet used only inside the calculus.
//
// A Formula is an immutable handle to a shared tree node. Copies are cheap
// and structural equality is literal tree equality.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dyadic {

enum class Connective : std::uint8_t { Atom, Neg, Impl, Box, Oblig, Bet };

class Formula;

namespace detail {
struct FormulaNode;
}

class Formula {
 public:
  static Formula atom(std::string name);
  static Formula neg(Formula child);
  static Formula impl(Formula left, Formula right);
  static Formula box(Formula child);
  /// O(consequent / antecedent): "consequent is obligatory given antecedent".
  static Formula oblig(Formula consequent, Formula antecedent);
  static Formula bet(Formula child);

  Connective kind() const;
  bool is(Connective c) const { return kind() == c; }

  /// Atom name; empty for compound formulas.
  const std::string& name() const;

  /// Operand of a unary connective (Neg, Box, Bet).
  const Formula& child() const;
  /// Operands of Impl.
  const Formula& left() const;
  const Formula& right() const;
  /// Operands of Oblig.
  const Formula& consequent() const;
  const Formula& antecedent() const;

  std::size_t hash() const;
  /// Symbol count: one per atom and per connective occurrence.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  static Formula make(Connective kind, std::string name, std::vector<Formula> children);

  std::shared_ptr<const detail::FormulaNode> node_;
};

namespace detail {

struct FormulaNode {
  Connective kind;
  std::string name;
  std::vector<Formula> children;
  std::size_t hash;
  std::size_t size;
};

inline std::size_t mix_hash(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace detail

inline Formula Formula::make(Connective kind, std::string name, std::vector<Formula> children) {
  std::size_t h = detail::mix_hash(0, static_cast<std::size_t>(kind));
  std::size_t sz = 1;
  if (kind == Connective::Atom) h = detail::mix_hash(h, std::hash<std::string>{}(name));
  for (const auto& c : children) {
    h = detail::mix_hash(h, c.hash());
    sz += c.size();
  }
  return Formula(std::make_shared<const detail::FormulaNode>(
      detail::FormulaNode{kind, std::move(name), std::move(children), h, sz}));
}

inline Formula Formula::atom(std::string name) { return make(Connective::Atom, std::move(name), {}); }
inline Formula Formula::neg(Formula child) { return make(Connective::Neg, {}, {std::move(child)}); }
inline Formula Formula::impl(Formula left, Formula right) {
  return make(Connective::Impl, {}, {std::move(left), std::move(right)});
}
inline Formula Formula::box(Formula child) { return make(Connective::Box, {}, {std::move(child)}); }
inline Formula Formula::oblig(Formula consequent, Formula antecedent) {
  return make(Connective::Oblig, {}, {std::move(consequent), std::move(antecedent)});
}
inline Formula Formula::bet(Formula child) { return make(Connective::Bet, {}, {std::move(child)}); }

inline Connective Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::child() const { return node_->children.at(0); }
inline const Formula& Formula::left() const { return node_->children.at(0); }
inline const Formula& Formula::right() const { return node_->children.at(1); }
inline const Formula& Formula::consequent() const { return node_->children.at(0); }
inline const Formula& Formula::antecedent() const { return node_->children.at(1); }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::size() const { return node_->size; }

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size || x.name != y.name) return false;
  return x.children == y.children;
}

// Total order: by connective, then atom name, then operands left to right.
inline std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.name.compare(y.name); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (auto c = x.children[i] <=> y.children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// ── constants and derived connectives ──────────────────────────────────────

/// Atom reserved for the encodings of true and false.
inline const std::string& reserved_atom_name() {
  static const std::string name = "p0";
  return name;
}

/// true := p0 -> p0
inline Formula top() {
  auto p = Formula::atom(reserved_atom_name());
  return Formula::impl(p, p);
}

/// A & B := ~(A -> ~B)
inline Formula conj(Formula a, Formula b) { return Formula::neg(Formula::impl(std::move(a), Formula::neg(std::move(b)))); }

/// A | B := ~A -> B
inline Formula disj(Formula a, Formula b) { return Formula::impl(Formula::neg(std::move(a)), std::move(b)); }

/// A <-> B := (A -> B) & (B -> A)
inline Formula iff(const Formula& a, const Formula& b) { return conj(Formula::impl(a, b), Formula::impl(b, a)); }

/// <>A := ~[]~A
inline Formula diamond(Formula a) { return Formula::neg(Formula::box(Formula::neg(std::move(a)))); }

/// false := p0 & ~p0. Kept syntactically distinct from ~true so that a
/// succedent holding both false and Bet ~true does not make a world better
/// than itself in an extracted countermodel.
inline Formula bottom() {
  auto p = Formula::atom(reserved_atom_name());
  return conj(p, Formula::neg(p));
}

/// Big conjunction; the empty conjunction is true.
inline Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = conj(fs[i], acc);
  return acc;
}

/// Big disjunction; the empty disjunction is false.
inline Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = disj(fs[i], acc);
  return acc;
}

// ── measures ────────────────────────────────────────────────────────────────

/// Cut-rank complexity: atoms 0, unary +1, implication +1, obligation +3.
inline std::size_t complexity(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: return 0;
    case Connective::Neg:
    case Connective::Box:
    case Connective::Bet: return complexity(f.child()) + 1;
    case Connective::Impl: return complexity(f.left()) + complexity(f.right()) + 1;
    case Connective::Oblig: return complexity(f.consequent()) + complexity(f.antecedent()) + 3;
  }
  return 0;
}

inline bool contains_bet(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: return false;
    case Connective::Bet: return true;
    case Connective::Neg:
    case Connective::Box: return contains_bet(f.child());
    case Connective::Impl:
    case Connective::Oblig: return contains_bet(f.left()) || contains_bet(f.right());
  }
  return false;
}

namespace detail {
inline void push_unique(std::vector<Formula>& out, const Formula& f) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
}

inline void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case Connective::Atom: break;
    case Connective::Neg:
    case Connective::Box:
    case Connective::Bet: collect_subformulas(f.child(), out); break;
    case Connective::Impl:
    case Connective::Oblig:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      break;
  }
  push_unique(out, f);
}
}  // namespace detail

/// Distinct subformulas in post-order (operands before the formula itself).
inline std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  detail::collect_subformulas(f, out);
  return out;
}

/// Subformulas of f together with Bet ~C for every obligation O(D/C) in f.
inline std::vector<Formula> sub_plus(const Formula& f) {
  auto out = subformulas(f);
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (out[i].is(Connective::Oblig)) detail::push_unique(out, Formula::bet(Formula::neg(out[i].antecedent())));
  }
  return out;
}

/// Distinct atom names in first-occurrence order.
inline std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> names;
  for (const auto& s : subformulas(f)) {
    if (s.is(Connective::Atom) && std::find(names.begin(), names.end(), s.name()) == names.end()) {
      names.push_back(s.name());
    }
  }
  return names;
}

}  // namespace dyadic

namespace std {
template <>
struct hash<dyadic::Formula> {
  std::size_t operator()(const dyadic::Formula& f) const noexcept { return f.hash(); }
};
}  // namespace std

#endif  // DYADIC_FORMULA_HPP
