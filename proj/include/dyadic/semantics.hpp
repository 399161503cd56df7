#ifndef DYADIC_SEMANTICS_HPP
#define DYADIC_SEMANTICS_HPP

// Preference models (W, >, V) with no conditions on the betterness relation,
// truth evaluation, countermodel extraction from saturated hypersequents, and
// an exhaustive small-model refuter used as an independent oracle.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyadic/formula.hpp"
#include "dyadic/hypersequent.hpp"
#include "dyadic/rules.hpp"

namespace dyadic {

using WorldId = std::uint64_t;

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Worlds are stored densely; `ids` carries the external label of each.
/// better[x][y] means world x is better than world y.
struct PreferenceModel {
  std::vector<WorldId> ids;
  std::vector<std::vector<bool>> better;
  std::vector<std::vector<std::string>> valuation;

  static PreferenceModel with_worlds(std::size_t n) {
    PreferenceModel m;
    for (std::size_t i = 0; i < n; ++i) m.ids.push_back(i + 1);
    m.better.assign(n, std::vector<bool>(n, false));
    m.valuation.assign(n, {});
    return m;
  }

  std::size_t world_count() const { return ids.size(); }

  std::size_t index_of(WorldId id) const {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw ModelError("unknown world id " + std::to_string(id));
    return static_cast<std::size_t>(it - ids.begin());
  }

  void set_better(WorldId x, WorldId y) { better[index_of(x)][index_of(y)] = true; }

  void set_true(WorldId w, const std::string& atom) {
    auto& v = valuation[index_of(w)];
    if (std::find(v.begin(), v.end(), atom) == v.end()) {
      v.push_back(atom);
      std::sort(v.begin(), v.end());
    }
  }

  bool holds_atom(std::size_t index, const std::string& atom) const {
    const auto& v = valuation[index];
    return std::binary_search(v.begin(), v.end(), atom);
  }

  friend bool operator==(const PreferenceModel&, const PreferenceModel&) = default;
};

/// Throws ModelError unless the model is well formed.
inline void validate(const PreferenceModel& m) {
  const std::size_t n = m.world_count();
  if (n == 0) throw ModelError("a preference model needs at least one world");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.ids[i] == m.ids[j]) throw ModelError("duplicate world id " + std::to_string(m.ids[i]));
  if (m.better.size() != n || m.valuation.size() != n) throw ModelError("relation or valuation size mismatch");
  for (const auto& row : m.better)
    if (row.size() != n) throw ModelError("betterness relation is not square");
}

// ── evaluation ──────────────────────────────────────────────────────────────

/// Set of worlds (by dense index) where the formula is true.
using Extension = std::vector<bool>;

namespace detail {

inline Extension uniform(std::size_t n, bool value) { return Extension(n, value); }

inline Extension best_of(const PreferenceModel& m, const Extension& ext) {
  const std::size_t n = m.world_count();
  Extension out(n, false);
  for (std::size_t y = 0; y < n; ++y) {
    if (!ext[y]) continue;
    bool dominated = false;
    for (std::size_t z = 0; z < n && !dominated; ++z) dominated = m.better[z][y] && ext[z];
    out[y] = !dominated;
  }
  return out;
}

}  // namespace detail

inline Extension extension(const PreferenceModel& m, const Formula& f) {
  const std::size_t n = m.world_count();
  switch (f.kind()) {
    case Connective::Atom: {
      Extension out(n);
      for (std::size_t x = 0; x < n; ++x) out[x] = m.holds_atom(x, f.name());
      return out;
    }
    case Connective::Neg: {
      auto out = extension(m, f.child());
      out.flip();
      return out;
    }
    case Connective::Impl: {
      auto a = extension(m, f.left());
      auto b = extension(m, f.right());
      for (std::size_t x = 0; x < n; ++x) a[x] = !a[x] || b[x];
      return a;
    }
    case Connective::Box: {
      const auto a = extension(m, f.child());
      return detail::uniform(n, std::all_of(a.begin(), a.end(), [](bool v) { return v; }));
    }
    case Connective::Bet: {
      const auto a = extension(m, f.child());
      Extension out(n, true);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (m.better[y][x] && !a[y]) out[x] = false;
      return out;
    }
    case Connective::Oblig: {
      const auto best = detail::best_of(m, extension(m, f.antecedent()));
      const auto b = extension(m, f.consequent());
      bool all = true;
      for (std::size_t y = 0; y < n; ++y) all = all && (!best[y] || b[y]);
      return detail::uniform(n, all);
    }
  }
  return Extension(n, false);
}

inline bool eval(const PreferenceModel& m, WorldId w, const Formula& f) { return extension(m, f)[m.index_of(w)]; }

/// Worlds satisfying f with no strictly better world satisfying f.
inline std::vector<WorldId> best(const PreferenceModel& m, const Formula& f) {
  const auto b = detail::best_of(m, extension(m, f));
  std::vector<WorldId> out;
  for (std::size_t y = 0; y < m.world_count(); ++y)
    if (b[y]) out.push_back(m.ids[y]);
  return out;
}

inline bool is_valid_in(const PreferenceModel& m, const Formula& f) {
  const auto e = extension(m, f);
  return std::all_of(e.begin(), e.end(), [](bool v) { return v; });
}

// ── countermodels ───────────────────────────────────────────────────────────

/// Reads a model off a saturated hypersequent: one world per component
/// (component k becomes world k+1), atoms of the antecedent are true there,
/// and j is better than i when the Bet-bodies of i's antecedent all sit in
/// j's antecedent and some Bet C in i's succedent has C in j's succedent.
inline PreferenceModel extract_model(const Hypersequent& h) {
  if (!is_saturated(h)) throw ModelError("extract_model: hypersequent is not saturated");
  const std::size_t n = h.size();
  auto m = PreferenceModel::with_worlds(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : h[i].ant)
      if (f.is(Connective::Atom)) m.set_true(i + 1, f.name());
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto bodies = bet_drop(h[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const bool inherits = std::all_of(bodies.begin(), bodies.end(), [&](const Formula& b) { return h[j].in_ant(b); });
      if (!inherits) continue;
      const bool witnessed = std::any_of(h[i].suc.begin(), h[i].suc.end(),
                                         [&](const Formula& f) { return f.is(Connective::Bet) && h[j].in_suc(f.child()); });
      if (witnessed) m.better[j][i] = true;
    }
  }
  return m;
}

/// Every Bet-free antecedent formula of component i is true at world i and
/// every Bet-free succedent formula is false there.
inline bool truth_lemma_check(const Hypersequent& h, const PreferenceModel& m) {
  if (m.world_count() != h.size()) return false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (const auto& f : h[i].ant)
      if (!contains_bet(f) && !extension(m, f)[i]) return false;
    for (const auto& f : h[i].suc)
      if (!contains_bet(f) && extension(m, f)[i]) return false;
  }
  return true;
}

// ── brute-force refutation oracle ───────────────────────────────────────────

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RefuteBounds {
  std::size_t max_worlds = 3;
  std::size_t atom_budget = 3;
  std::uint64_t model_budget = 20'000'000;
};

namespace detail {

// Evaluator over worlds packed into a bitmask; deliberately separate from
// extension() so the oracle does not share code with the checker it audits.
class MaskEvaluator {
 public:
  MaskEvaluator(std::size_t worlds, const std::vector<std::string>& atoms) : n_(worlds), atoms_(atoms) {
    all_ = n_ == 32 ? 0xffffffffu : ((1u << n_) - 1);
  }

  void load(std::uint32_t relation_bits, std::uint64_t valuation_bits) {
    better_than_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (relation_bits >> (x * n_ + y) & 1u) better_than_[y] |= 1u << x;  // x > y
    atom_mask_.assign(atoms_.size(), 0);
    for (std::size_t a = 0; a < atoms_.size(); ++a)
      for (std::size_t w = 0; w < n_; ++w)
        if (valuation_bits >> (a * n_ + w) & 1u) atom_mask_[a] |= 1u << w;
  }

  std::uint32_t eval(const Formula& f) const {
    switch (f.kind()) {
      case Connective::Atom: {
        auto it = std::find(atoms_.begin(), atoms_.end(), f.name());
        return atom_mask_[static_cast<std::size_t>(it - atoms_.begin())];
      }
      case Connective::Neg: return ~eval(f.child()) & all_;
      case Connective::Impl: return (~eval(f.left()) | eval(f.right())) & all_;
      case Connective::Box: return eval(f.child()) == all_ ? all_ : 0u;
      case Connective::Bet: {
        const auto a = eval(f.child());
        std::uint32_t out = 0;
        for (std::size_t x = 0; x < n_; ++x)
          if ((better_than_[x] & ~a) == 0) out |= 1u << x;
        return out;
      }
      case Connective::Oblig: {
        const auto a = eval(f.antecedent());
        const auto b = eval(f.consequent());
        std::uint32_t best = 0;
        for (std::size_t y = 0; y < n_; ++y)
          if ((a >> y & 1u) && (better_than_[y] & a) == 0) best |= 1u << y;
        return (best & ~b) == 0 ? all_ : 0u;
      }
    }
    return 0;
  }

  std::uint32_t all() const { return all_; }

 private:
  std::size_t n_;
  std::vector<std::string> atoms_;
  std::uint32_t all_;
  std::vector<std::uint32_t> better_than_;
  std::vector<std::uint32_t> atom_mask_;
};

}  // namespace detail

/// Exhaustively searches all models with up to max_worlds worlds over the
/// atoms of f, in order of world count, then relation, then valuation, and
/// returns the first in which f fails at some world.
inline std::optional<PreferenceModel> bounded_refute(const Formula& f, const RefuteBounds& bounds = {}) {
  if (bounds.max_worlds == 0) throw std::invalid_argument("bounded_refute: max_worlds must be at least 1");
  const auto atoms = atoms_of(f);
  if (atoms.size() > bounds.atom_budget) {
    throw BudgetExceeded("bounded_refute: formula has " + std::to_string(atoms.size()) + " atoms, budget is " +
                         std::to_string(bounds.atom_budget));
  }
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= bounds.max_worlds; ++n) {
    const std::size_t bits = n * n + n * atoms.size();
    if (bits >= 63 || n > 5) throw BudgetExceeded("bounded_refute: model space too large");
    total += std::uint64_t{1} << bits;
  }
  if (total > bounds.model_budget) {
    throw BudgetExceeded("bounded_refute: " + std::to_string(total) + " models exceed the budget of " +
                         std::to_string(bounds.model_budget));
  }
  for (std::size_t n = 1; n <= bounds.max_worlds; ++n) {
    detail::MaskEvaluator ev(n, atoms);
    const std::uint32_t relations = 1u << (n * n);
    const std::uint64_t valuations = std::uint64_t{1} << (n * atoms.size());
    for (std::uint32_t r = 0; r < relations; ++r) {
      for (std::uint64_t v = 0; v < valuations; ++v) {
        ev.load(r, v);
        if (ev.eval(f) == ev.all()) continue;
        auto m = PreferenceModel::with_worlds(n);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (r >> (x * n + y) & 1u) m.better[x][y] = true;
        for (std::size_t a = 0; a < atoms.size(); ++a)
          for (std::size_t w = 0; w < n; ++w)
            if (v >> (a * n + w) & 1u) m.set_true(w + 1, atoms[a]);
        return m;
      }
    }
  }
  return std::nullopt;
}

}  // namespace dyadic

#endif  // DYADIC_SEMANTICS_HPP
