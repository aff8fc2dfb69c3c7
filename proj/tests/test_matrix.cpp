#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gmk/matrix.hpp"

using namespace gmk;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("arithmetic and powers") {
  IntMatrix I = identity_matrix(3);
  IntMatrix J = from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(mul(I, J) == J);
  CHECK(power(J, 0) == I);
  CHECK(power(J, 1) == J);
  CHECK(power(J, 3) == mul(J, mul(J, J)));
  // Jordan block powers carry binomial coefficients: (J^n)_{0,2} = C(n,2).
  CHECK(power(J, 7).at(0, 2) == binomial(7, 2));
  CHECK(sub(J, I).at(0, 1) == 1);
}

TEST_CASE("rank") {
  CHECK(rank(identity_matrix(4)) == 4);
  CHECK(rank(IntMatrix(3, 3)) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(from_rows({{2, 0, 1}, {0, 3, 0}, {4, 0, 2}})) == 2);
  IntMatrix M = abelianization_matrix(make_phi(2, 2));
  IntMatrix N = sub(M, identity_matrix(4));
  CHECK(rank(N) == 2);
  CHECK(rank(mul(N, N)) == 1);
}

TEST_CASE("unipotent block profiles") {
  CHECK(unipotent_jordan_profile(identity_matrix(3)).sizes == std::vector<int>{1, 1, 1});
  CHECK(unipotent_jordan_profile(abelianization_matrix(make_phi(2, 2))).sizes ==
        std::vector<int>{3, 1});
  CHECK(unipotent_jordan_profile(abelianization_matrix(make_phi(4, 3))).sizes ==
        std::vector<int>{4, 1, 1, 1});
  CHECK_THROWS(unipotent_jordan_profile(from_rows({{2, 0}, {0, 1}})));  // eigenvalue 2
}

TEST_CASE("norms and column sums") {
  IntMatrix M = abelianization_matrix(make_phi(2, 2));
  MatrixNorms nm = norms(M);
  CHECK(nm.sup == 1);
  CHECK(nm.linf_op == 3);
  CHECK(norms(IntMatrix(2, 2)).sup == 0);
  CHECK(norms(IntMatrix(2, 2)).linf_op == 0);
  CHECK(column_l1(identity_matrix(5), 3) == 1);
  // 2x2 shear: n-th power column sum is n+1.
  IntMatrix M11 = abelianization_matrix(make_phi(1, 1));
  CHECK(M11 == from_rows({{1, 1}, {0, 1}}));
  for (int n = 0; n <= 12; ++n) CHECK(column_l1(power(M11, n), 1) == n + 1);
}

TEST_CASE("abelianization of the defining automorphism") {
  CHECK(abelianization_matrix(identity_endomorphism(3)) == identity_matrix(3));
  IntMatrix M = abelianization_matrix(make_phi(2, 2));
  // Columns are images: A-block identity, B-columns collect exponent sums.
  CHECK(M == from_rows({{1, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
  // Signs count: a generator conjugated away contributes zero.
  Endomorphism e = identity_endomorphism(2);
  e.images[1] = parse_word("x y x^-1", {"x", "y"});
  CHECK(abelianization_matrix(e) == identity_matrix(2));
}

TEST_CASE("matrix powers of the abelianized automorphism") {
  IntMatrix P = power(abelianization_matrix(make_phi(2, 2)), 3);
  // Stable-part block is Toeplitz in c_{i,3} = C(i+2, i).
  CHECK(P.at(2, 3) == 3);   // c_{1,3}
  CHECK(P.at(1, 3) == 6);   // c_{2,3} at the (A2, B2) slot
  CHECK(norms(P).sup == 6);
  CHECK(column_l1(P, 3) == 13);
  IntMatrix Q = power(abelianization_matrix(make_phi(3, 2)), 4);
  CHECK(Q.at(0, 3) == 4);
  CHECK(Q.at(0, 4) == 6);   // truncated row: c_{2,4} - c_{1,4}
  CHECK(Q.at(2, 4) == 10);  // full row: c_{2,4} = C(5,2)
}

TEST_CASE("binomials") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(40, 20) == Int("137846528820"));
}
