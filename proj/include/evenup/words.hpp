#pragma once

// Words over the alphabet [k] = {1,...,k} and the eight "parity-up"
// word classes. A class constrains every letter of one parity to be
// followed by a strictly larger (strict) or not smaller (weak) letter;
// cyclic classes apply the constraint across the wrap w_n -> w_1 as well.
//
// This header also provides the exhaustive brute-force counter that
// serves as the ground-truth oracle for the closed-form engines.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "evenup/errors.hpp"
#include "evenup/numeric.hpp"

namespace evenup {

enum class Strictness : std::uint8_t { strict, weak };
enum class Parity : std::uint8_t { even_up, odd_up };
enum class Topology : std::uint8_t { linear, cyclic };

struct WordClass {
  Strictness strictness = Strictness::strict;
  Parity parity = Parity::even_up;
  Topology topology = Topology::linear;

  friend bool operator==(const WordClass&, const WordClass&) = default;
};

inline constexpr std::array<WordClass, 8> all_word_classes() {
  std::array<WordClass, 8> out{};
  int i = 0;
  for (auto s : {Strictness::strict, Strictness::weak})
    for (auto p : {Parity::even_up, Parity::odd_up})
      for (auto t : {Topology::linear, Topology::cyclic})
        out[i++] = WordClass{s, p, t};
  return out;
}

// Canonical hyphenated names, e.g. "cyclic-weakly-even-up".
inline std::string class_name(WordClass c) {
  std::string name;
  if (c.topology == Topology::cyclic) name += "cyclic-";
  if (c.strictness == Strictness::weak) name += "weakly-";
  name += c.parity == Parity::even_up ? "even-up" : "odd-up";
  return name;
}

inline bool parse_word_class(const std::string& name, WordClass& out) {
  for (WordClass c : all_word_classes()) {
    if (class_name(c) == name) {
      out = c;
      return true;
    }
  }
  return false;
}

struct Word {
  std::vector<int> letters;
  int k = 1;

  bool valid() const {
    if (k < 1) return false;
    for (int l : letters)
      if (l < 1 || l > k) return false;
    return true;
  }
};

// True iff letter a is constrained by the class's parity.
inline bool constrained(int a, Parity p) {
  return (a % 2 == 0) == (p == Parity::even_up);
}

// The adjacency rule: may letter b immediately follow letter a?
inline bool step_allowed(int a, int b, Strictness s, Parity p) {
  if (!constrained(a, p)) return true;
  return s == Strictness::strict ? b > a : b >= a;
}

// Membership predicate. The wrap condition of cyclic classes applies
// only for n >= 2: every length-0 and length-1 word belongs to every
// class that its adjacent pairs allow (for n <= 1 there are none).
inline bool satisfies(const std::vector<int>& letters, WordClass c) {
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!step_allowed(letters[i], letters[i + 1], c.strictness, c.parity))
      return false;
  if (c.topology == Topology::cyclic && n >= 2)
    return step_allowed(letters[n - 1], letters[0], c.strictness, c.parity);
  return true;
}

inline bool satisfies(const Word& w, WordClass c) {
  return satisfies(w.letters, c);
}

inline Int default_enumeration_budget() { return Int(100000000); }

inline void check_enumeration_budget(int k, int n, const Int& budget) {
  Int total = ipow(Int(k), static_cast<unsigned long>(n));
  if (total > budget)
    throw budget_error("enumeration of " + to_string(total) + " words over [" +
                       std::to_string(k) + "]^" + std::to_string(n) +
                       " exceeds budget " + to_string(budget));
}

// Visits every word of [k]^n in lexicographic order.
template <typename Visitor>
void for_each_word(int k, int n, Visitor&& visit) {
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  if (n == 0) {
    visit(w);
    return;
  }
  for (;;) {
    visit(w);
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == k) {
      w[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
}

inline Int count_brute_force(WordClass c, int k, int n,
                             const Int& budget = default_enumeration_budget()) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  check_enumeration_budget(k, n, budget);
  std::uint64_t count = 0;
  for_each_word(k, n, [&](const std::vector<int>& w) {
    if (satisfies(w, c)) ++count;
  });
  return Int(static_cast<unsigned long>(count));
}

inline std::vector<Word> enumerate_words(
    WordClass c, int k, int n,
    const Int& budget = default_enumeration_budget()) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  check_enumeration_budget(k, n, budget);
  std::vector<Word> out;
  for_each_word(k, n, [&](const std::vector<int>& w) {
    if (satisfies(w, c)) out.push_back(Word{w, k});
  });
  return out;
}

// One table row: exact counts for a fixed class and alphabet size,
// indexed by word length starting at 0.
struct CountTable {
  WordClass cls;
  int k = 1;
  std::vector<Int> counts;
};

}  // namespace evenup
