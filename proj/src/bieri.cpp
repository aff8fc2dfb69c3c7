#include "gmk/bieri.hpp"

#include <map>
#include <stdexcept>

#include "gmk/growth.hpp"

namespace gmk {

std::vector<std::string> DoubledGroup::names() const {
  std::vector<std::string> n = free_kernel_names(m, k);
  n.push_back("s");
  n.push_back("t");
  return n;
}

DoubledGroup make_doubled_group(int m, int k) {
  DoubledGroup g;
  g.m = m;
  g.k = k;
  g.psi = make_phi(m, k);
  return g;
}

Presentation bieri_presentation(int m, int k) {
  DoubledGroup g = make_doubled_group(m, k);
  Presentation p;
  p.generators = g.names();
  for (int stable : {g.s_index(), g.t_index()}) {
    for (int x = 0; x < g.psi.rank; ++x) {
      Word r = letter(stable);
      r = concat(r, letter(x));
      r = concat(r, letter(stable, -1));
      r = concat(r, invert(g.psi.images[x]));
      p.relators.push_back(r);
    }
  }
  return p;
}

void normal_form_push(const DoubledGroup& G, BieriNormalForm& nf, GenSymbol letter_sym) {
  const int rank = G.psi.rank;
  if (letter_sym.index < rank) {
    push_reduced(nf.g.syms, letter_sym);
  } else if (letter_sym.index == G.s_index() || letter_sym.index == G.t_index()) {
    push_reduced(nf.u.syms, letter_sym);
    // u g x = (u x) (x^-1 g x) and x^{±1} conjugates the kernel by psi^{∓1}.
    nf.g = letter_sym.sign > 0 ? apply_inverse(G.psi, nf.g) : apply(G.psi, nf.g);
  } else {
    throw std::out_of_range("letter outside the doubled-group alphabet");
  }
}

BieriNormalForm normal_form(const DoubledGroup& G, const Word& w) {
  BieriNormalForm nf;
  for (const GenSymbol& s : w.syms) normal_form_push(G, nf, s);
  return nf;
}

bool is_trivial(const DoubledGroup& G, const Word& w) {
  BieriNormalForm nf = normal_form(G, w);
  return nf.u.empty() && nf.g.empty();
}

Certificate certificate_word(const DoubledGroup& G, int n, int ell, int p) {
  if (n < 1 || ell < 1 || p < 1) throw std::invalid_argument("certificate_word needs n, ell, p >= 1");
  Word st = concat(letter(G.s_index()), letter(G.t_index(), -1));
  Word x = word_power(st, n);
  Word y = word_power(letter(G.t_index()), ell * n);
  y = concat(y, word_power(letter(b_index(G.m, G.k)), p * n));
  y = concat(y, word_power(letter(G.t_index()), -ell * n));
  Word comm = concat(concat(x, y), concat(invert(x), invert(y)));
  Certificate c;
  c.word = comm;
  c.written_length = 4ull * n + 4ull * ell * n + 2ull * p * n;
  c.filling_exponent = G.k + 2;
  return c;
}

LowerBound lower_bound_quantity(int m, int k, int n, int ell, int p) {
  if (n < 0 || ell < 1 || p < 1) throw std::invalid_argument("lower_bound_quantity bounds");
  LowerBound lb{0, 0};
  if (n == 0) return lb;
  Endomorphism phi = make_phi(m, k);
  Word image = iterate(phi, letter(b_index(m, k)), static_cast<long>(ell) * n);
  // |w^q| = 2|conjugator| + q |core|
  CyclicDecomposition d = cyclically_reduce(image);
  Int q = static_cast<long long>(p) * n;
  lb.exact = Int(n) * (2 * Int(d.conjugator.length()) + q * Int(d.core.length()));
  IntMatrix M = power(abelianization_matrix(phi), ell * n);
  lb.abelian = Int(n) * q * column_l1(M, b_index(m, k));
  return lb;
}

namespace {

std::string nf_key(const BieriNormalForm& nf) {
  std::string key;
  key.reserve(2 * (nf.u.length() + nf.g.length()) + 1);
  for (const GenSymbol& s : nf.u.syms) {
    key.push_back(static_cast<char>('a' + s.index));
    key.push_back(s.sign > 0 ? '+' : '-');
  }
  key.push_back('|');
  for (const GenSymbol& s : nf.g.syms) {
    key.push_back(static_cast<char>('a' + s.index));
    key.push_back(s.sign > 0 ? '+' : '-');
  }
  return key;
}

}  // namespace

CombingAudit combing_length_audit(const DoubledGroup& G, int radius) {
  if (radius < 0) throw std::invalid_argument("negative radius");
  const int alphabet = G.psi.rank + 2;
  double states = 1;
  for (int i = 0; i < radius; ++i) states *= 2.0 * alphabet;
  if (states > 1e7) throw std::invalid_argument("radius guard exceeded");

  // P(n) = max over generators of max(|psi^n(a)|, |psi^-n(a)|).
  GrowthTable fwd = growth_table(G.psi, radius);
  GrowthTable bwd = growth_table(inverse_of(G.psi), radius);
  auto P = [&](int n) {
    std::uint64_t p = 0;
    for (int g = 0; g < G.psi.rank; ++g)
      p = std::max({p, fwd.lengths[g][n], bwd.lengths[g][n]});
    return p;
  };

  CombingAudit audit;
  audit.radius = radius;
  std::map<std::string, char> seen;
  std::vector<BieriNormalForm> frontier{BieriNormalForm{}};
  seen.emplace(nf_key(frontier[0]), 1);
  audit.ball_size = 1;
  for (int n = 1; n <= radius; ++n) {
    std::vector<BieriNormalForm> next;
    const double bound = static_cast<double>(n) * static_cast<double>(P(n)) + n;
    for (const BieriNormalForm& nf : frontier) {
      for (int g = 0; g < alphabet; ++g) {
        for (int sign : {+1, -1}) {
          BieriNormalForm cand = nf;
          normal_form_push(G, cand, GenSymbol(g, sign));
          auto [it, fresh] = seen.try_emplace(nf_key(cand), 1);
          if (!fresh) continue;
          ++audit.ball_size;
          double len = static_cast<double>(cand.u.length() + cand.g.length());
          double ratio = len / bound;
          if (ratio > audit.max_ratio) audit.max_ratio = ratio;
          if (len > bound) ++audit.violations;
          next.push_back(std::move(cand));
        }
      }
    }
    frontier = std::move(next);
  }
  return audit;
}

MuImage mu_embedding(const DoubledGroup& G, const Word& w) {
  MuImage img;
  // H-part: a one-stable-letter doubled group over the same kernel with τ
  // acting as psi; reuse the scan with τ in the s slot.
  DoubledGroup h = G;
  const int tau = h.s_index();
  for (const GenSymbol& s : w.syms) {
    if (s.index < G.psi.rank) {
      normal_form_push(h, img.h, s);
    } else if (s.index == G.s_index()) {
      normal_form_push(h, img.h, GenSymbol(tau, s.sign));
      push_reduced(img.f.syms, GenSymbol(0, s.sign));  // u
    } else if (s.index == G.t_index()) {
      normal_form_push(h, img.h, GenSymbol(tau, s.sign));
      push_reduced(img.f.syms, GenSymbol(1, s.sign));  // v
    } else {
      throw std::out_of_range("letter outside the doubled-group alphabet");
    }
  }
  return img;
}

}  // namespace gmk
