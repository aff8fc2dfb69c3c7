#pragma once
// Exact integer linear algebra: dense arbitrary-precision matrices, powers,
// fraction-free rank, unipotent Jordan profiles, norms, and the
// abelianization of an endomorphism.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "gmk/family.hpp"

namespace gmk {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix identity_matrix(int n);
IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix sub(const IntMatrix& x, const IntMatrix& y);
IntMatrix power(const IntMatrix& m, int n);

// Exact rank over the rationals (fraction-free Gaussian elimination).
int rank(const IntMatrix& m);

struct JordanProfile {
  std::vector<int> sizes;  // descending; eigenvalue 1 throughout
  bool operator==(const JordanProfile&) const = default;
};

// Block sizes recovered from the rank sequence of powers of (M - I).
// Throws if M is not unipotent.
JordanProfile unipotent_jordan_profile(const IntMatrix& m);

struct MatrixNorms {
  Int sup;      // max |entry|
  Int linf_op;  // max absolute row sum
};
MatrixNorms norms(const IntMatrix& m);

Int column_l1(const IntMatrix& m, int j);

// Column convention: column j is the exponent-sum vector of the image of
// generator j.
IntMatrix abelianization_matrix(const Endomorphism& e);

Int binomial(int n, int k);

}  // namespace gmk
