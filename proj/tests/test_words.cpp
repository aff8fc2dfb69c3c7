#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gmk/words.hpp"

using namespace gmk;

namespace {

Word random_reduced(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, rank - 1), sg(0, 1);
  Word w;
  int L = len(rng);
  for (int i = 0; i < L; ++i) push_reduced(w.syms, GenSymbol(gen(rng), sg(rng) ? 1 : -1));
  return w;
}

}  // namespace

TEST_CASE("free reduction") {
  Word w = reduce({GenSymbol(0, 1), GenSymbol(0, -1), GenSymbol(1, 1)});
  CHECK(w == letter(1));
  CHECK(is_reduced(w));
  CHECK(reduce({GenSymbol(2, 1), GenSymbol(1, 1), GenSymbol(1, -1), GenSymbol(2, -1)}).empty());
  // Cascading cancellation through the stack.
  Word v = reduce({GenSymbol(0, 1), GenSymbol(1, 1), GenSymbol(1, -1), GenSymbol(0, -1),
                   GenSymbol(3, 1)});
  CHECK(v == letter(3));
}

TEST_CASE("inversion, concatenation, powers") {
  Word ab = concat(letter(0), letter(1));
  CHECK(invert(ab) == concat(letter(1, -1), letter(0, -1)));
  CHECK(concat(ab, invert(ab)).empty());
  CHECK(word_power(ab, 3).length() == 6);
  CHECK(word_power(ab, -2) == concat(invert(ab), invert(ab)));
  CHECK(word_power(ab, 0).empty());
  // Powers of a word with internal cancellation at the seam.
  Word aba = word_from({GenSymbol(0, 1), GenSymbol(1, 1), GenSymbol(0, -1)});
  CHECK(word_power(aba, 3) ==
        word_from({GenSymbol(0, 1), GenSymbol(1, 1), GenSymbol(1, 1), GenSymbol(1, 1),
                   GenSymbol(0, -1)}));
}

TEST_CASE("rank bookkeeping") {
  Word w = word_from({GenSymbol(4, -1), GenSymbol(2, 1)});
  CHECK(min_rank(w) == 5);
  CHECK(min_rank(Word()) == 0);
  CHECK_NOTHROW(check_rank(w, 5));
  CHECK_THROWS_AS(check_rank(w, 4), std::out_of_range);
}

TEST_CASE("cyclic reduction") {
  // a b c b^-1 a^-1: conjugator a b, core c.
  Word w = word_from({GenSymbol(0, 1), GenSymbol(1, 1), GenSymbol(2, 1), GenSymbol(1, -1),
                      GenSymbol(0, -1)});
  CyclicDecomposition d = cyclically_reduce(w);
  CHECK(d.core == letter(2));
  CHECK(d.conjugator == concat(letter(0), letter(1)));
  CHECK(concat(concat(d.conjugator, d.core), invert(d.conjugator)) == w);
  // Already cyclically reduced words decompose trivially.
  Word v = concat(letter(0), letter(1));
  CyclicDecomposition e = cyclically_reduce(v);
  CHECK(e.core == v);
  CHECK(e.conjugator.empty());
  CHECK(cyclically_reduce(Word()).core.empty());
}

TEST_CASE("formatting and parsing") {
  std::vector<std::string> names{"A1", "A2", "B1"};
  Word w = reduce({GenSymbol(0, 1), GenSymbol(0, 1), GenSymbol(1, -1), GenSymbol(2, 1)});
  CHECK(format_word(w, names) == "A1^2 A2^-1 B1");
  CHECK(format_word(Word(), names) == "1");
  CHECK(parse_word("A1^2 A2^-1 B1", names) == w);
  CHECK(parse_word("A1 A1^-1", names).empty());
  CHECK(parse_word("B1^-3", names) == word_power(letter(2), -3));
  CHECK_THROWS(parse_word("C7", names));
}

TEST_CASE("random round trips") {
  std::mt19937 rng(7);
  std::vector<std::string> names{"x", "y", "z", "w"};
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_reduced(rng, 4, 30);
    CHECK(is_reduced(w));
    CHECK(concat(w, invert(w)).empty());
    CHECK(parse_word(format_word(w, names), names) == w);
    Word v = random_reduced(rng, 4, 30);
    // Concatenation length can only drop by full cancellation.
    CHECK(concat(w, v).length() <= w.length() + v.length());
    CHECK(invert(invert(w)) == w);
  }
}
