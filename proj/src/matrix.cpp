#include "gmk/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmk {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch in mul");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      if (x.at(i, l) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, l) * y.at(l, j);
    }
  return r;
}

IntMatrix sub(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("dimension mismatch in sub");
  IntMatrix r(x.rows, x.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

IntMatrix power(const IntMatrix& m, int n) {
  if (m.rows != m.cols) throw std::invalid_argument("power of non-square matrix");
  if (n < 0) throw std::invalid_argument("negative matrix power");
  IntMatrix r = identity_matrix(m.rows);
  for (int i = 0; i < n; ++i) r = mul(r, m);
  return r;
}

int rank(const IntMatrix& m) {
  // Bareiss fraction-free elimination; entries stay integral throughout.
  IntMatrix w = m;
  int r = 0;
  Int prev = 1;
  for (int col = 0; col < w.cols && r < w.rows; ++col) {
    int pivot = -1;
    for (int i = r; i < w.rows; ++i)
      if (w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(pivot, j), w.at(r, j));
    for (int i = r + 1; i < w.rows; ++i) {
      for (int j = col + 1; j < w.cols; ++j)
        w.at(i, j) = (w.at(r, col) * w.at(i, j) - w.at(i, col) * w.at(r, j)) / prev;
      w.at(i, col) = 0;
    }
    prev = w.at(r, col);
    ++r;
  }
  return r;
}

JordanProfile unipotent_jordan_profile(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("non-square matrix");
  const int dim = m.rows;
  IntMatrix n = sub(m, identity_matrix(dim));
  if (!(power(n, dim) == IntMatrix(dim, dim))) throw std::invalid_argument("matrix is not unipotent");
  // r[j] = rank(N^j); blocks of size >= j number r[j-1] - r[j].
  std::vector<int> r{dim};
  IntMatrix p = identity_matrix(dim);
  for (int j = 1; j <= dim && r.back() > 0; ++j) {
    p = mul(p, n);
    r.push_back(rank(p));
  }
  while (r.back() != 0) r.push_back(0);
  JordanProfile prof;
  for (int j = 1; j + 1 <= static_cast<int>(r.size()); ++j) {
    int at_least_j = r[j - 1] - r[j];
    int at_least_j1 = (j + 1 < static_cast<int>(r.size())) ? r[j] - r[j + 1] : 0;
    for (int c = 0; c < at_least_j - at_least_j1; ++c) prof.sizes.push_back(j);
  }
  std::sort(prof.sizes.rbegin(), prof.sizes.rend());
  return prof;
}

MatrixNorms norms(const IntMatrix& m) {
  MatrixNorms out{0, 0};
  for (int i = 0; i < m.rows; ++i) {
    Int row_sum = 0;
    for (int j = 0; j < m.cols; ++j) {
      Int v = abs(m.at(i, j));
      row_sum += v;
      if (v > out.sup) out.sup = v;
    }
    if (row_sum > out.linf_op) out.linf_op = row_sum;
  }
  return out;
}

Int column_l1(const IntMatrix& m, int j) {
  if (j < 0 || j >= m.cols) throw std::out_of_range("column index");
  Int s = 0;
  for (int i = 0; i < m.rows; ++i) s += abs(m.at(i, j));
  return s;
}

IntMatrix abelianization_matrix(const Endomorphism& e) {
  IntMatrix m(e.rank, e.rank);
  for (int j = 0; j < e.rank; ++j)
    for (const GenSymbol& s : e.images[j].syms) m.at(s.index, j) += s.sign;
  return m;
}

Int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace gmk
