#pragma once
// The doubled group F(A) ⋊ F(s,t) where both stable letters act by the same
// automorphism: presentation, semidirect normal forms, word problem, combing
// length audit, quadratic-commutator certificate words, lower-bound
// quantities, and the substitution homomorphism into (F(A) ⋊ <τ>) × F(u,v).
//
// Alphabet for doubled-group words: the free-kernel generators keep their
// indices 0..rank-1; s has index rank and t has index rank+1.

#include <cstdint>
#include <string>
#include <vector>

#include "gmk/family.hpp"
#include "gmk/matrix.hpp"

namespace gmk {

struct DoubledGroup {
  int m = 0, k = 0;
  Endomorphism psi;  // must carry a declared inverse

  int s_index() const { return psi.rank; }
  int t_index() const { return psi.rank + 1; }
  std::vector<std::string> names() const;  // A1..Am B1..Bk s t
};

DoubledGroup make_doubled_group(int m, int k);

// Generators A.., B.., s, t; relators s x s^-1 psi(x)^-1 and t x t^-1 psi(x)^-1.
Presentation bieri_presentation(int m, int k);

// gamma = u . g with u in F(s,t) and g in F(A): the semidirect splitting.
struct BieriNormalForm {
  Word u;  // letters s, t only
  Word g;  // free-kernel letters only
  bool operator==(const BieriNormalForm&) const = default;
};

BieriNormalForm normal_form(const DoubledGroup& G, const Word& w);

// Extend a normal form by one letter (the scan step of normal_form).
void normal_form_push(const DoubledGroup& G, BieriNormalForm& nf, GenSymbol letter);

bool is_trivial(const DoubledGroup& G, const Word& w);

struct Certificate {
  Word word;                      // the commutator, freely reduced
  std::uint64_t written_length;   // 4n + 4*ell*n + 2*p*n, before free reduction
  int filling_exponent;           // k + 2: the certified lower-bound degree
};
// [ (s t^-1)^n , t^{ell n} B_k^{p n} t^{-ell n} ]
Certificate certificate_word(const DoubledGroup& G, int n, int ell, int p);

struct LowerBound {
  Int exact;    // n * |psi^{ell n}(B_k^{p n})|
  Int abelian;  // n * p n * |column of the matrix power at B_k|_1
};
LowerBound lower_bound_quantity(int m, int k, int n, int ell, int p);

struct CombingAudit {
  int radius = 0;
  std::uint64_t ball_size = 0;
  std::uint64_t violations = 0;
  double max_ratio = 0.0;  // max over the ball of (|u|+|g|) / (n P(n) + n)
};
// Exhaustive BFS of the ball; checks |u|+|g| <= n P(n) + n at distance n,
// with P(n) the two-sided generator growth bound.
CombingAudit combing_length_audit(const DoubledGroup& G, int radius);

struct MuImage {
  BieriNormalForm h;  // over A and the single stable letter τ (index rank)
  Word f;             // over u (index 0), v (index 1)
};
// x_i -> x_i, s -> τu, t -> τv.
MuImage mu_embedding(const DoubledGroup& G, const Word& w);

}  // namespace gmk
