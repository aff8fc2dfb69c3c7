#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gmk/family.hpp"

using namespace gmk;

namespace {

Word random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(0, rank - 1), sg(0, 1);
  Word w;
  int L = len(rng);
  for (int i = 0; i < L; ++i) push_reduced(w.syms, GenSymbol(gen(rng), sg(rng) ? 1 : -1));
  return w;
}

// Sign-flip substitution on the first m letters; defined on words using only
// that subalphabet.
Word flip_a(const Word& w) {
  Word out;
  for (const GenSymbol& s : w.syms) out.syms.emplace_back(s.index, -s.sign);
  return out;
}

}  // namespace

TEST_CASE("presentations") {
  Presentation p10 = presentation(1, 0);
  CHECK(p10.generators == std::vector<std::string>{"a1", "a2"});
  REQUIRE(p10.relators.size() == 1);
  CHECK(format_word(p10.relators[0], p10.generators) == "a1 a2 a1^-1 a2^-1");

  Presentation p22 = presentation(2, 2);
  CHECK(p22.generators.size() == 5);
  REQUIRE(p22.relators.size() == 4);
  CHECK(format_word(p22.relators[0], p22.generators) == "a1 a2 a1^-1 a2^-1");
  CHECK(format_word(p22.relators[1], p22.generators) == "a2 a3 a2^-1 a3^-1");
  CHECK(format_word(p22.relators[2], p22.generators) == "a4^-1 a1 a4 a3^-1");
  CHECK(format_word(p22.relators[3], p22.generators) == "a5^-1 a2 a5 a4^-1");
  for (const Word& r : p22.relators) CHECK(r.length() == 4);

  CHECK(presentation(3, 1).relators.size() == 4);
  CHECK_THROWS(presentation(0, 0));
  CHECK_THROWS(presentation(2, 3));
}

TEST_CASE("defining automorphism image tables") {
  Endomorphism phi = make_phi(2, 2);
  std::vector<std::string> names = free_kernel_names(2, 2);
  CHECK(names == std::vector<std::string>{"A1", "A2", "B1", "B2"});
  CHECK(format_word(phi.images[0], names) == "A1");
  CHECK(format_word(phi.images[1], names) == "A1 A2 A1^-1");
  CHECK(format_word(phi.images[2], names) == "A1 A2 B1");
  CHECK(format_word(phi.images[3], names) == "A1 A2 B1 B2 A1^-1");

  Endomorphism phi11 = make_phi(1, 1);
  std::vector<std::string> n11 = free_kernel_names(1, 1);
  CHECK(format_word(phi11.images[0], n11) == "A1");
  CHECK(format_word(phi11.images[1], n11) == "A1 B1");

  Endomorphism phi32 = make_phi(3, 2);
  std::vector<std::string> n32 = free_kernel_names(3, 2);
  CHECK(format_word(phi32.images[b_index(3, 2)], n32) == "A1 A2 A3 B1 B2 A1^-1");

  // Applying to an inverse letter inverts the image.
  CHECK(format_word(apply(phi, letter(b_index(2, 2), -1)), names) ==
        "A1 B2^-1 B1^-1 A2^-1 A1^-1");
  CHECK(apply(phi, Word()).empty());
}

TEST_CASE("iteration") {
  Endomorphism phi = make_phi(2, 2);
  std::vector<std::string> names = free_kernel_names(2, 2);
  Word it2 = iterate(phi, letter(b_index(2, 2)), 2);
  CHECK(format_word(it2, names) == "A1^2 A2^2 B1 A1 A2 B1 B2 A1^-2");
  CHECK(it2.length() == 11);

  Endomorphism phi33 = make_phi(3, 3);
  std::vector<std::string> n33 = free_kernel_names(3, 3);
  CHECK(format_word(iterate(phi33, letter(a_index(3)), 5), n33) ==
        "A1^5 A2^5 A3 A2^-5 A1^-5");
  CHECK(format_word(iterate(phi, letter(b_index(2, 1)), 4), names) == "A1^4 A2^4 B1");
  CHECK(iterate(phi, letter(0), 0) == letter(0));

  // Negative exponents walk the declared inverse.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(rng, 4, 12);
    CHECK(iterate(phi, w, -3) == iterate(inverse_of(phi), w, 3));
    CHECK(iterate(phi, iterate(phi, w, -2), 2) == w);
  }
}

TEST_CASE("declared inverses are two-sided") {
  for (int m = 1; m <= 6; ++m)
    for (int k = 1; k <= m; ++k) {
      Endomorphism phi = make_phi(m, k);
      REQUIRE(phi.has_inverse());
      for (int g = 0; g < phi.rank; ++g) {
        CHECK(apply(phi, apply_inverse(phi, letter(g))) == letter(g));
        CHECK(apply_inverse(phi, apply(phi, letter(g))) == letter(g));
      }
    }
}

TEST_CASE("restriction to smaller stable ranks") {
  for (int m = 1; m <= 5; ++m) {
    Endomorphism full = make_phi(m, m);
    for (int k = 1; k <= m; ++k) {
      Endomorphism part = make_phi(m, k);
      for (int g = 0; g < part.rank; ++g) {
        CHECK(part.images[g] == full.images[g]);
        CHECK((*part.inverse_images)[g] == (*full.inverse_images)[g]);
      }
    }
  }
}

TEST_CASE("homomorphism property") {
  Endomorphism phi = make_phi(3, 2);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_word(rng, phi.rank, 15), v = random_word(rng, phi.rank, 15);
    CHECK(apply(phi, concat(u, v)) == concat(apply(phi, u), apply(phi, v)));
  }
}

TEST_CASE("composition") {
  Endomorphism phi = make_phi(1, 1);
  Endomorphism sq = compose(phi, phi);
  CHECK(format_word(sq.images[b_index(1, 1)], free_kernel_names(1, 1)) == "A1^2 B1");
  CHECK(same_images(compose(identity_endomorphism(2), phi), phi));
  // Composing with the declared inverse gives the identity table.
  Endomorphism round = compose(phi, inverse_of(phi));
  CHECK(same_images(round, identity_endomorphism(2)));
  // The composed endomorphism carries a working inverse.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(rng, 2, 10);
    CHECK(apply_inverse(sq, apply(sq, w)) == w);
  }
}

TEST_CASE("sign-flip conjugation inverts the restriction to the A-subalphabet") {
  std::mt19937 rng(17);
  for (int m = 1; m <= 4; ++m) {
    Endomorphism phi = make_phi(m, m);
    for (int trial = 0; trial < 50; ++trial) {
      Word w = random_word(rng, m, 12);  // A-letters only
      CHECK(flip_a(apply(phi, flip_a(w))) == apply_inverse(phi, w));
    }
  }
}
