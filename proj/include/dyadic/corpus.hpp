#ifndef DYADIC_CORPUS_HPP
#define DYADIC_CORPUS_HPP

// Corpus files: blank-line separated records of `key: value` lines.
//
//   # comment
//   name: cok
//   input: O(q -> r/p) -> (O(q/p) -> O(r/p))
//   expect: proven
//   notes: conditional K
//
// `input` is a formula, or a sequent when it contains `|-`.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic/hypersequent.hpp"
#include "dyadic/syntax.hpp"

namespace dyadic {

enum class Expectation { Proven, Refuted };

struct CorpusEntry {
  std::string name;
  std::string input;
  Expectation expected = Expectation::Proven;
  std::string notes;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}
}  // namespace detail

inline std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& origin = "corpus") {
  std::vector<CorpusEntry> entries;
  CorpusEntry current;
  bool open = false;
  bool has_input = false;
  bool has_expect = false;
  std::size_t line_no = 0;
  std::size_t record_line = 0;

  auto where = [&](std::size_t line) { return origin + ":" + std::to_string(line) + ": "; };
  auto flush = [&]() {
    if (!open) return;
    if (current.name.empty()) throw CorpusError(where(record_line) + "record without a name");
    if (!has_input) throw CorpusError(where(record_line) + "record '" + current.name + "' has no input");
    if (!has_expect) throw CorpusError(where(record_line) + "record '" + current.name + "' has no expect");
    for (const auto& e : entries)
      if (e.name == current.name) throw CorpusError(where(record_line) + "duplicate name '" + current.name + "'");
    entries.push_back(current);
    current = {};
    open = has_input = has_expect = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = detail::trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (t.front() == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw CorpusError(where(line_no) + "expected 'key: value'");
    const std::string key = detail::trim(std::string_view(t).substr(0, colon));
    const std::string value = detail::trim(std::string_view(t).substr(colon + 1));
    if (!open) {
      open = true;
      record_line = line_no;
    }
    if (key == "name") {
      current.name = value;
    } else if (key == "input") {
      current.input = value;
      has_input = true;
    } else if (key == "expect") {
      if (value == "proven") current.expected = Expectation::Proven;
      else if (value == "refuted") current.expected = Expectation::Refuted;
      else throw CorpusError(where(line_no) + "expect must be 'proven' or 'refuted'");
      has_expect = true;
    } else if (key == "notes") {
      current.notes = value;
    } else {
      throw CorpusError(where(line_no) + "unknown key '" + key + "'");
    }
  }
  flush();
  return entries;
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file " + path);
  return parse_corpus(in, path);
}

/// Parses an input string as a root sequent: a formula A becomes => A.
inline Sequent parse_root(std::string_view input, ParseOptions opts = {}) {
  if (input.find("|-") != std::string_view::npos) {
    auto st = parse_sequent(input, opts);
    return make_sequent(st.antecedent, st.succedent);
  }
  return make_sequent({}, {parse(input, opts)});
}

}  // namespace dyadic

#endif  // DYADIC_CORPUS_HPP
