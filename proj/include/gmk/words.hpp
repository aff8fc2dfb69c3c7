#pragma once
// Free group words over a finite ranked alphabet: free reduction, inversion,
// concatenation, powers, cyclic reduction, parsing and formatting.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmk {

// One signed generator occurrence.  `index` addresses a generator of the
// ambient alphabet (0-based); `sign` is +1 or -1.
struct GenSymbol {
  int index = 0;
  int sign = +1;

  GenSymbol() = default;
  GenSymbol(int idx, int sg) : index(idx), sign(sg) {}
  GenSymbol inverse() const { return GenSymbol(index, -sign); }
  bool operator==(const GenSymbol&) const = default;
};

// A freely reduced word.  Every producing operation in this library returns
// reduced words; `is_reduced` lets tests assert the invariant.
struct Word {
  std::vector<GenSymbol> syms;

  Word() = default;
  explicit Word(std::vector<GenSymbol> s) : syms(std::move(s)) {}

  std::size_t length() const { return syms.size(); }
  bool empty() const { return syms.empty(); }
  bool operator==(const Word&) const = default;
};

// Push a symbol onto a reduction stack, cancelling against the top.
void push_reduced(std::vector<GenSymbol>& stack, GenSymbol s);

// Freely reduce an arbitrary symbol sequence (single left-to-right pass).
Word reduce(const std::vector<GenSymbol>& raw);

bool is_reduced(const Word& w);

// Largest generator index used, plus one (0 for the empty word).
int min_rank(const Word& w);

// Throw std::out_of_range if any symbol index is outside [0, rank).
void check_rank(const Word& w, int rank);

Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word word_power(const Word& w, int p);  // p may be negative

// Single-letter and literal-sequence constructors.
Word letter(int index, int sign = +1);
Word word_from(std::initializer_list<GenSymbol> syms);

// Write w = conjugator . core . conjugator^{-1} with core cyclically reduced.
struct CyclicDecomposition {
  Word core;
  Word conjugator;
};
CyclicDecomposition cyclically_reduce(const Word& w);

// Textual syntax: whitespace-separated letters, inverse suffix ^-1, integer
// power suffix ^n (n may be negative).  Names index the alphabet.
std::string format_word(const Word& w, const std::vector<std::string>& names);
Word parse_word(const std::string& text, const std::vector<std::string>& names);

}  // namespace gmk
