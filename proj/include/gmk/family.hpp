#pragma once
// The group family G_{m,k}: labeled-oriented-graph presentations, the
// monodromy automorphism of the free kernel together with its inverse, and
// generic endomorphism plumbing (apply / iterate / compose).
//
// Free-kernel alphabet convention (fixed project-wide): generators are
// A_1..A_m followed by B_1..B_k; A_i has index i-1 and B_j has index m+j-1.

#include <optional>
#include <string>
#include <vector>

#include "gmk/words.hpp"

namespace gmk {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// presentation(m, k): generators a_1..a_{m+k+1}; m commutator relators
// [a_i, a_{i+1}] and k conjugation relators a_{m+j+1}^-1 a_j a_{m+j+1} a_{m+j}^-1.
Presentation presentation(int m, int k);

struct Endomorphism {
  int rank = 0;
  std::vector<Word> images;
  // Present only when a two-sided inverse is declared (e.g. the monodromy).
  std::optional<std::vector<Word>> inverse_images;

  bool has_inverse() const { return inverse_images.has_value(); }
};

Endomorphism identity_endomorphism(int rank);

// The monodromy automorphism of F_{m+k} (with its declared inverse).
Endomorphism make_phi(int m, int k);

// Swap images and declared inverse images; requires has_inverse().
Endomorphism inverse_of(const Endomorphism& e);

// Substitute each letter of w by its image (inverted for negative letters),
// reducing on the fly.
Word apply(const Endomorphism& e, const Word& w);
Word apply_inverse(const Endomorphism& e, const Word& w);

// n-fold application; negative n iterates the declared inverse.
Word iterate(const Endomorphism& e, const Word& w, long n);

// compose(f, g): x -> f(g(x)).  Declared inverses compose when both present.
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// True when f and g have identical image tables.
bool same_images(const Endomorphism& f, const Endomorphism& g);

// Generator indices for the fixed A/B convention.
inline int a_index(int i) { return i - 1; }           // A_i, 1-based
inline int b_index(int m, int j) { return m + j - 1; }  // B_j, 1-based

// Display names.
std::vector<std::string> free_kernel_names(int m, int k);     // A1..Am B1..Bk
std::vector<std::string> group_generator_names(int count);    // a1..a{count}

}  // namespace gmk
