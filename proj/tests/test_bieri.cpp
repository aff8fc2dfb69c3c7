#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gmk/bieri.hpp"

using namespace gmk;

namespace {

Word random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, rank - 1), sg(0, 1);
  Word w;
  int L = len(rng);
  for (int i = 0; i < L; ++i) push_reduced(w.syms, GenSymbol(gen(rng), sg(rng) ? 1 : -1));
  return w;
}

}  // namespace

TEST_CASE("doubled-group presentation") {
  Presentation p = bieri_presentation(1, 1);
  CHECK(p.generators == std::vector<std::string>{"A1", "B1", "s", "t"});
  REQUIRE(p.relators.size() == 4);
  CHECK(format_word(p.relators[0], p.generators) == "s A1 s^-1 A1^-1");
  CHECK(format_word(p.relators[1], p.generators) == "s B1 s^-1 B1^-1 A1^-1");
  CHECK(bieri_presentation(2, 2).generators.size() == 6);
  CHECK(bieri_presentation(2, 2).relators.size() == 8);
}

TEST_CASE("normal forms") {
  DoubledGroup G = make_doubled_group(1, 1);
  std::vector<std::string> names = G.names();
  // s A1 s^-1 collapses to the kernel element psi(A1) = A1.
  BieriNormalForm nf = normal_form(
      G, parse_word("s A1 s^-1", names));
  CHECK(nf.u.empty());
  CHECK(format_word(nf.g, names) == "A1");
  BieriNormalForm nf2 = normal_form(G, parse_word("t B1 t^-1", names));
  CHECK(nf2.u.empty());
  CHECK(format_word(nf2.g, names) == "A1 B1");
  CHECK(normal_form(G, Word()) == BieriNormalForm{});
  CHECK(!is_trivial(G, parse_word("s t^-1", names)));

  for (const Word& r : bieri_presentation(1, 1).relators) CHECK(is_trivial(G, r));
  for (const Word& r : bieri_presentation(2, 2).relators)
    CHECK(is_trivial(make_doubled_group(2, 2), r));

  // Round trip: a reduced stable-letter word followed by a kernel word is
  // already in normal form.
  std::mt19937 rng(23);
  DoubledGroup G22 = make_doubled_group(2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Word u;
    std::uniform_int_distribution<int> len(0, 8), pick(0, 1), sg(0, 1);
    int L = len(rng);
    for (int i = 0; i < L; ++i)
      push_reduced(u.syms, GenSymbol(pick(rng) ? G22.s_index() : G22.t_index(),
                                     sg(rng) ? 1 : -1));
    Word g = random_word(rng, G22.psi.rank, 10);
    BieriNormalForm nf3 = normal_form(G22, concat(u, g));
    CHECK(nf3.u == u);
    CHECK(nf3.g == g);
  }

  // Insertion of a defining relator never changes the normal form.
  Presentation bp = bieri_presentation(2, 2);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_word(rng, G22.psi.rank + 2, 16);
    std::uniform_int_distribution<std::size_t> cut(0, w.length()), rel(0, bp.relators.size() - 1);
    std::size_t pos = cut(rng);
    Word prefix(std::vector<GenSymbol>(w.syms.begin(), w.syms.begin() + pos));
    Word suffix(std::vector<GenSymbol>(w.syms.begin() + pos, w.syms.end()));
    Word spliced = concat(concat(prefix, bp.relators[rel(rng)]), suffix);
    CHECK(normal_form(G22, spliced) == normal_form(G22, w));
  }
}

TEST_CASE("commutator certificates") {
  DoubledGroup G = make_doubled_group(1, 1);
  Certificate c1 = certificate_word(G, 1, 1, 1);
  CHECK(is_trivial(G, c1.word));
  CHECK(c1.written_length == 10);
  CHECK(c1.filling_exponent == 3);

  DoubledGroup G22 = make_doubled_group(2, 2);
  Certificate c3 = certificate_word(G22, 3, 1, 1);
  CHECK(is_trivial(G22, c3.word));
  CHECK(c3.written_length == 30);
  CHECK(c3.word.length() == 26);  // two stable-letter cancellations at the seams
  CHECK_THROWS(certificate_word(G22, 3, 1, 0));
}

TEST_CASE("lower-bound quantities") {
  LowerBound lb = lower_bound_quantity(2, 2, 3, 1, 1);
  CHECK(lb.abelian == 117);
  CHECK(lb.exact >= lb.abelian);
  CHECK(lower_bound_quantity(1, 1, 4, 1, 1).abelian == 80);  // 4 * 4 * (4+1)
  LowerBound zero = lower_bound_quantity(2, 2, 0, 1, 1);
  CHECK(zero.exact == 0);
  CHECK(zero.abelian == 0);
}

TEST_CASE("combing length audit") {
  CombingAudit a0 = combing_length_audit(make_doubled_group(1, 1), 0);
  CHECK(a0.ball_size == 1);
  CHECK(a0.violations == 0);
  CombingAudit a = combing_length_audit(make_doubled_group(1, 1), 5);
  CHECK(a.violations == 0);
  CHECK(a.ball_size > 100);
  CHECK(a.max_ratio <= 1.0);
  CombingAudit b = combing_length_audit(make_doubled_group(2, 1), 4);
  CHECK(b.violations == 0);
  CHECK_THROWS(combing_length_audit(make_doubled_group(1, 1), 8));  // state guard
}

TEST_CASE("substitution homomorphism") {
  DoubledGroup G = make_doubled_group(1, 1);
  std::vector<std::string> names = G.names();
  MuImage s_img = mu_embedding(G, letter(G.s_index()));
  CHECK(s_img.h.u == letter(G.s_index()));  // the single stable slot
  CHECK(s_img.h.g.empty());
  CHECK(s_img.f == letter(0));  // u

  MuImage st = mu_embedding(G, parse_word("s t^-1", names));
  CHECK(st.h.u.empty());
  CHECK(st.h.g.empty());
  CHECK(st.f == concat(letter(0), letter(1, -1)));  // u v^-1

  for (const Word& r : bieri_presentation(1, 1).relators) {
    MuImage img = mu_embedding(G, r);
    CHECK(img.h.u.empty());
    CHECK(img.h.g.empty());
    CHECK(img.f.empty());
  }
}
