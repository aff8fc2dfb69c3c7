#include "gmk/growth.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace gmk {

GrowthTable growth_table(const Endomorphism& e, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  GrowthTable t;
  t.n_max = n_max;
  t.lengths.assign(e.rank, {});
  t.gr.assign(n_max + 1, 0);
  for (int g = 0; g < e.rank; ++g) {
    Word cur = letter(g);
    t.lengths[g].reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) cur = apply(e, cur);
      t.lengths[g].push_back(cur.length());
      t.gr[n] = std::max(t.gr[n], static_cast<std::uint64_t>(cur.length()));
    }
  }
  return t;
}

std::uint64_t closed_form_length_A(int i, int n) {
  if (i < 1 || n < 0) throw std::invalid_argument("closed_form_length_A bounds");
  return 2ull * (i - 1) * n + 1;
}

std::uint64_t closed_form_length_B1(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("closed_form_length_B1 bounds");
  return static_cast<std::uint64_t>(m) * n + 1;
}

std::uint64_t closed_form_length_B2(int m, int n) {
  if (m < 2 || n < 0) throw std::invalid_argument("closed_form_length_B2 bounds");
  // m n(n+1)/2 + 2n + 1; n(n+1)/2 keeps the value integral for odd m.
  return static_cast<std::uint64_t>(m) * (static_cast<std::uint64_t>(n) * (n + 1) / 2) +
         2ull * n + 1;
}

namespace {

void append_power(std::vector<GenSymbol>& raw, int index, int sign, int count) {
  for (int r = 0; r < count; ++r) raw.emplace_back(index, sign);
}

}  // namespace

Word closed_form_word_A(int i, int n) {
  std::vector<GenSymbol> raw;
  for (int l = 1; l < i; ++l) append_power(raw, a_index(l), +1, n);
  raw.emplace_back(a_index(i), 1);
  for (int l = i - 1; l >= 1; --l) append_power(raw, a_index(l), -1, n);
  return reduce(raw);
}

Word closed_form_word_B1(int m, int n) {
  std::vector<GenSymbol> raw;
  for (int l = 1; l <= m; ++l) append_power(raw, a_index(l), +1, n);
  raw.emplace_back(b_index(m, 1), 1);
  return reduce(raw);
}

Word closed_form_word_A_prefix(int j, int n) {
  if (j == 0) return Word();
  std::vector<GenSymbol> raw;
  for (int l = 1; l < j; ++l) append_power(raw, a_index(l), +1, n + 1);
  raw.emplace_back(a_index(j), 1);
  for (int l = j - 1; l >= 1; --l) append_power(raw, a_index(l), -1, n);
  return reduce(raw);
}

Word recurrence_iterate_B(int m, int j, int n) {
  if (m < 2 || j < 2 || j > m || n < 0) throw std::invalid_argument("recurrence_iterate_B bounds");
  // iter[l][r] = r-th forward iterate of B_l, built without the generic engine.
  std::map<std::pair<int, int>, Word> memo;
  // phi^n(B_l) = phi^n(B_{l-1}) . phi^{n-1}(A_1..A_{l-2}) . phi^{n-1}(B_l)
  //              . [phi^{n-1}(A_1..A_{l-1})]^{-1}      for l >= 2, n >= 1.
  auto rec = [&](auto&& self, int l, int r) -> Word {
    if (l == 1) return closed_form_word_B1(m, r);
    if (r == 0) return letter(b_index(m, l));
    auto key = std::make_pair(l, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Word w = self(self, l - 1, r);
    w = concat(w, closed_form_word_A_prefix(l - 2, r - 1));
    w = concat(w, self(self, l, r - 1));
    w = concat(w, invert(closed_form_word_A_prefix(l - 1, r - 1)));
    memo.emplace(key, w);
    return w;
  };
  return rec(rec, j, n);
}

Word word_T(int m, int k, int i) {
  if (k < 1 || k > m || i < 0) throw std::invalid_argument("word_T bounds");
  if (k == 1) return letter(b_index(m, 1));
  std::vector<GenSymbol> raw;
  raw.emplace_back(b_index(m, k), 1);
  for (int l = k - 1; l >= 1; --l) append_power(raw, a_index(l), +1, i);
  return reduce(raw);
}

Word word_S(int m, int i) {
  std::vector<GenSymbol> raw;
  for (int l = 1; l <= m; ++l) append_power(raw, a_index(l), -1, i);
  return reduce(raw);
}

std::uint64_t upper_bound_g(int m, int k, int n) {
  if (k < 1 || k > m || n < 0) throw std::invalid_argument("upper_bound_g bounds");
  if (n == 0) return 1;
  if (k == 1) return closed_form_length_B1(m, n);
  if (k == 2) return closed_form_length_B2(m, n);
  std::map<std::pair<int, int>, std::uint64_t> memo;
  auto rec = [&](auto&& self, int l, int r) -> std::uint64_t {
    if (r == 0) return 1;
    if (l == 1) return closed_form_length_B1(m, r);
    if (l == 2) return closed_form_length_B2(m, r);
    auto key = std::make_pair(l, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // g(l, r) = g(l-1, r) + g(l, r-1) + (4(l-1)-6) r - (2(l-1)-5)
    std::uint64_t v = self(self, l - 1, r) + self(self, l, r - 1) +
                      static_cast<std::uint64_t>((4 * (l - 1) - 6) * r - (2 * (l - 1) - 5));
    memo.emplace(key, v);
    return v;
  };
  return rec(rec, k, n);
}

std::uint64_t upper_bound_g_inv(int m, int k, int i, int n) {
  if (k < 1 || k > m || i < 0 || n < 0) throw std::invalid_argument("upper_bound_g_inv bounds");
  std::map<std::tuple<int, int, int>, std::uint64_t> memo;
  auto rec = [&](auto&& self, int l, int ii, int r) -> std::uint64_t {
    if (l == 1) return closed_form_length_B1(m, r);
    if (r == 0) return static_cast<std::uint64_t>(l - 1) * ii + 1;
    auto key = std::make_tuple(l, ii, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // g(l, i, r) = g(l-1, 1, r-1) + g(l, i+1, r-1)
    std::uint64_t v = self(self, l - 1, 1, r - 1) + self(self, l, ii + 1, r - 1);
    memo.emplace(key, v);
    return v;
  };
  return rec(rec, k, i, n);
}

double estimate_degree(const std::vector<std::uint64_t>& values) {
  if (values.size() < 8) throw std::invalid_argument("need at least 8 samples");
  std::size_t lo = values.size() / 2;  // top half: n in (N/2, N]
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t cnt = 0;
  for (std::size_t t = lo; t < values.size(); ++t) {
    if (values[t] == 0) throw std::invalid_argument("samples must be positive");
    double x = std::log(static_cast<double>(t + 1));
    double y = std::log(static_cast<double>(values[t]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  double n = static_cast<double>(cnt);
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return std::round(slope * 100.0) / 100.0;
}

}  // namespace gmk
