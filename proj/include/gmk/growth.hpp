#pragma once
// Exact growth tables for iterated endomorphisms, closed-form length oracles,
// independent recurrence-based word oracles, the recursive upper-bound
// functions g(k,n) / g(k,i,n), and empirical log-log degree estimation.

#include <cstdint>
#include <vector>

#include "gmk/family.hpp"
#include "gmk/words.hpp"

namespace gmk {

struct GrowthTable {
  int n_max = 0;
  // lengths[g][n] = word length of the n-th iterate applied to generator g.
  std::vector<std::vector<std::uint64_t>> lengths;
  // gr[n] = max over generators of lengths[.][n].
  std::vector<std::uint64_t> gr;
};

// Exact table via iteration (use inverse_of(e) for the inverse direction).
GrowthTable growth_table(const Endomorphism& e, int n_max);

// Closed-form lengths.  All are valid for the forward direction; A_i and B_1
// also hold for the inverse direction.  B_2 has no inverse closed form here.
std::uint64_t closed_form_length_A(int i, int n);             // 2(i-1)n + 1
std::uint64_t closed_form_length_B1(int m, int n);            // mn + 1
std::uint64_t closed_form_length_B2(int m, int n);            // m n(n+1)/2 + 2n + 1

// Closed-form words (independent of the substitution engine):
Word closed_form_word_A(int i, int n);          // A_1^n..A_{i-1}^n A_i Ā_{i-1}^n..Ā_1^n
Word closed_form_word_B1(int m, int n);         // A_1^n..A_m^n B_1
Word closed_form_word_A_prefix(int j, int n);   // image of A_1..A_j:
                                                // A_1^{n+1}..A_{j-1}^{n+1} A_j Ā_{j-1}^n..Ā_1^n

// Independent oracle for the n-th forward iterate of B_j (2 <= j <= m),
// computed from the two-term recurrence in terms of iterates of B_{j-1},
// never calling the generic substitution engine on B_j itself.
Word recurrence_iterate_B(int m, int j, int n);

// Inverse-direction word families:
Word word_T(int m, int k, int i);  // B_k A_{k-1}^i ... A_1^i  (T_{1,i} = B_1)
Word word_S(int m, int i);         // Ā_1^i ... Ā_m^i

// Recursive upper bounds: g(k, n) >= length of the n-th forward iterate of
// B_k, and g(k, i, n) >= length of the n-th inverse iterate of T_{k,i}.
std::uint64_t upper_bound_g(int m, int k, int n);
std::uint64_t upper_bound_g_inv(int m, int k, int i, int n);

// Least-squares slope of log(values[n]) against log(n) over the top half of
// the sample range (values[t] is the sample at n = t + 1), rounded to two
// decimal digits.  Requires >= 8 positive samples.
double estimate_degree(const std::vector<std::uint64_t>& values);

}  // namespace gmk
