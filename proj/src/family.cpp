#include "gmk/family.hpp"

#include <stdexcept>

namespace gmk {

namespace {

void check_params(int m, int k) {
  if (m < 1 || k < 0 || k > m) throw std::invalid_argument("require 1 <= m and 0 <= k <= m");
}

// A_1^e A_2^e ... A_j^e as raw symbols appended to out (e is +1 or -1;
// for e = -1 the descending product Ā_j ... Ā_1 is produced by `reversed`).
void append_a_run(std::vector<GenSymbol>& out, int from, int to, int sign, bool reversed) {
  if (!reversed) {
    for (int i = from; i <= to; ++i) out.emplace_back(a_index(i), sign);
  } else {
    for (int i = to; i >= from; --i) out.emplace_back(a_index(i), sign);
  }
}

}  // namespace

Presentation presentation(int m, int k) {
  check_params(m, k);
  Presentation p;
  p.generators = group_generator_names(m + k + 1);
  auto g = [](int i) { return i - 1; };  // a_i -> index
  for (int i = 1; i <= m; ++i) {
    // [a_i, a_{i+1}] spelled a_i a_{i+1} a_i^-1 a_{i+1}^-1.
    p.relators.push_back(reduce({GenSymbol(g(i), 1), GenSymbol(g(i + 1), 1),
                                 GenSymbol(g(i), -1), GenSymbol(g(i + 1), -1)}));
  }
  for (int j = 1; j <= k; ++j) {
    // a_{m+j+1}^-1 a_j a_{m+j+1} a_{m+j}^-1.
    p.relators.push_back(reduce({GenSymbol(g(m + j + 1), -1), GenSymbol(g(j), 1),
                                 GenSymbol(g(m + j + 1), 1), GenSymbol(g(m + j), -1)}));
  }
  return p;
}

Endomorphism identity_endomorphism(int rank) {
  Endomorphism e;
  e.rank = rank;
  for (int i = 0; i < rank; ++i) e.images.push_back(letter(i));
  e.inverse_images = e.images;
  return e;
}

Endomorphism make_phi(int m, int k) {
  check_params(m, k);
  if (k < 1) throw std::invalid_argument("monodromy needs k >= 1");
  const int rank = m + k;
  Endomorphism e;
  e.rank = rank;
  e.images.resize(rank);
  std::vector<Word> inv(rank);

  for (int i = 1; i <= m; ++i) {
    // A_i -> A_1 .. A_{i-1} (A_i) Ā_{i-1} .. Ā_1
    std::vector<GenSymbol> raw;
    append_a_run(raw, 1, i - 1, +1, false);
    raw.emplace_back(a_index(i), 1);
    append_a_run(raw, 1, i - 1, -1, true);
    e.images[a_index(i)] = reduce(raw);

    // Inverse: A_i -> Ā_1 .. Ā_{i-1} (A_i) A_{i-1} .. A_1
    raw.clear();
    append_a_run(raw, 1, i - 1, -1, false);
    raw.emplace_back(a_index(i), 1);
    append_a_run(raw, 1, i - 1, +1, true);
    inv[a_index(i)] = reduce(raw);
  }
  for (int j = 1; j <= k; ++j) {
    // B_j -> A_1 .. A_m (B_1 .. B_j) Ā_{j-1} .. Ā_1
    std::vector<GenSymbol> raw;
    append_a_run(raw, 1, m, +1, false);
    for (int l = 1; l <= j; ++l) raw.emplace_back(b_index(m, l), 1);
    append_a_run(raw, 1, j - 1, -1, true);
    e.images[b_index(m, j)] = reduce(raw);

    raw.clear();
    if (j == 1) {
      // B_1 -> Ā_1 .. Ā_m B_1
      append_a_run(raw, 1, m, -1, false);
      raw.emplace_back(b_index(m, 1), 1);
    } else {
      // B_j -> Ā_1 .. Ā_{j-2} (B̄_{j-1} B_j) A_{j-1} .. A_1
      append_a_run(raw, 1, j - 2, -1, false);
      raw.emplace_back(b_index(m, j - 1), -1);
      raw.emplace_back(b_index(m, j), 1);
      append_a_run(raw, 1, j - 1, +1, true);
    }
    inv[b_index(m, j)] = reduce(raw);
  }
  e.inverse_images = std::move(inv);
  return e;
}

Endomorphism inverse_of(const Endomorphism& e) {
  if (!e.has_inverse()) throw std::invalid_argument("endomorphism has no declared inverse");
  Endomorphism r;
  r.rank = e.rank;
  r.images = *e.inverse_images;
  r.inverse_images = e.images;
  return r;
}

namespace {

Word apply_table(const std::vector<Word>& images, int rank, const Word& w) {
  check_rank(w, rank);
  std::vector<GenSymbol> stack;
  for (const GenSymbol& s : w.syms) {
    const Word& img = images[s.index];
    if (s.sign > 0) {
      for (const GenSymbol& t : img.syms) push_reduced(stack, t);
    } else {
      for (auto it = img.syms.rbegin(); it != img.syms.rend(); ++it)
        push_reduced(stack, it->inverse());
    }
  }
  return Word(std::move(stack));
}

}  // namespace

Word apply(const Endomorphism& e, const Word& w) { return apply_table(e.images, e.rank, w); }

Word apply_inverse(const Endomorphism& e, const Word& w) {
  if (!e.has_inverse()) throw std::invalid_argument("endomorphism has no declared inverse");
  return apply_table(*e.inverse_images, e.rank, w);
}

Word iterate(const Endomorphism& e, const Word& w, long n) {
  Word cur = w;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) cur = apply(e, cur);
  } else {
    for (long i = 0; i < -n; ++i) cur = apply_inverse(e, cur);
  }
  return cur;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank != g.rank) throw std::invalid_argument("rank mismatch in compose");
  Endomorphism r;
  r.rank = f.rank;
  for (int i = 0; i < g.rank; ++i) r.images.push_back(apply(f, g.images[i]));
  if (f.has_inverse() && g.has_inverse()) {
    std::vector<Word> inv;
    for (int i = 0; i < g.rank; ++i)
      inv.push_back(apply_table(*g.inverse_images, g.rank, (*f.inverse_images)[i]));
    r.inverse_images = std::move(inv);
  }
  return r;
}

bool same_images(const Endomorphism& f, const Endomorphism& g) {
  return f.rank == g.rank && f.images == g.images;
}

std::vector<std::string> free_kernel_names(int m, int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("A" + std::to_string(i));
  for (int j = 1; j <= k; ++j) names.push_back("B" + std::to_string(j));
  return names;
}

std::vector<std::string> group_generator_names(int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

}  // namespace gmk
