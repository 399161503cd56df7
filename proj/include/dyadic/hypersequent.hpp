#ifndef DYADIC_HYPERSEQUENT_HPP
#define DYADIC_HYPERSEQUENT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "dyadic/formula.hpp"
#include "dyadic/syntax.hpp"

namespace dyadic {

/// A component Gamma => Delta. The search calculus treats both sides as sets
/// kept in first-insertion order; insert() refuses duplicates. The replay
/// checker for the calculus with cut reads the same vectors as multisets.
struct Sequent {
  std::vector<Formula> ant;
  std::vector<Formula> suc;

  bool in_ant(const Formula& f) const { return std::find(ant.begin(), ant.end(), f) != ant.end(); }
  bool in_suc(const Formula& f) const { return std::find(suc.begin(), suc.end(), f) != suc.end(); }

  /// Returns true if f was not already present.
  bool insert_ant(const Formula& f) {
    if (in_ant(f)) return false;
    ant.push_back(f);
    return true;
  }
  bool insert_suc(const Formula& f) {
    if (in_suc(f)) return false;
    suc.push_back(f);
    return true;
  }

  std::size_t formula_count() const { return ant.size() + suc.size(); }

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Builds a sequent with set semantics from arbitrary lists.
inline Sequent make_sequent(const std::vector<Formula>& ant, const std::vector<Formula>& suc) {
  Sequent s;
  for (const auto& f : ant) s.insert_ant(f);
  for (const auto& f : suc) s.insert_suc(f);
  return s;
}

/// Components are addressed by position; rules only ever append.
struct Hypersequent {
  std::vector<Sequent> components;

  std::size_t size() const { return components.size(); }
  const Sequent& operator[](std::size_t i) const { return components[i]; }
  Sequent& operator[](std::size_t i) { return components[i]; }

  friend bool operator==(const Hypersequent&, const Hypersequent&) = default;
};

// ── projections ─────────────────────────────────────────────────────────────

/// []-prefixed antecedent formulas, prefix kept.
inline std::vector<Formula> boxed_part(const Sequent& s) {
  std::vector<Formula> out;
  for (const auto& f : s.ant)
    if (f.is(Connective::Box)) out.push_back(f);
  return out;
}

/// Obligation formulas of the antecedent.
inline std::vector<Formula> oblig_part(const Sequent& s) {
  std::vector<Formula> out;
  for (const auto& f : s.ant)
    if (f.is(Connective::Oblig)) out.push_back(f);
  return out;
}

/// Bodies of the Bet-prefixed antecedent formulas, prefix stripped.
inline std::vector<Formula> bet_drop(const Sequent& s) {
  std::vector<Formula> out;
  for (const auto& f : s.ant)
    if (f.is(Connective::Bet)) out.push_back(f.child());
  return out;
}

/// Some component shares an atom between its two sides.
inline bool is_initial(const Sequent& s) {
  return std::any_of(s.ant.begin(), s.ant.end(), [&](const Formula& f) { return f.is(Connective::Atom) && s.in_suc(f); });
}

inline bool is_initial(const Hypersequent& h) {
  return std::any_of(h.components.begin(), h.components.end(), [](const Sequent& s) { return is_initial(s); });
}

/// /\Gamma -> \/Delta, with the empty conjunction true and the empty disjunction false.
inline Formula as_formula(const Sequent& s) { return Formula::impl(conj_all(s.ant), disj_all(s.suc)); }

// ── text ────────────────────────────────────────────────────────────────────

inline std::string render_list(const std::vector<Formula>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += render(fs[i]);
  }
  return out;
}

inline std::string render(const Sequent& s) {
  std::string out = render_list(s.ant);
  out += out.empty() ? "=>" : " =>";
  if (!s.suc.empty()) out += " " + render_list(s.suc);
  return out;
}

inline std::string render(const Hypersequent& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += " | ";
    out += render(h[i]);
  }
  return out;
}

}  // namespace dyadic

#endif  // DYADIC_HYPERSEQUENT_HPP
