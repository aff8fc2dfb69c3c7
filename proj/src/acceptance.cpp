#include "gmk/acceptance.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gmk/bieri.hpp"
#include "gmk/complex.hpp"
#include "gmk/family.hpp"
#include "gmk/fixtures.hpp"
#include "gmk/growth.hpp"
#include "gmk/matrix.hpp"
#include "gmk/permrep.hpp"
#include "gmk/walls.hpp"
#include "gmk/words.hpp"

namespace gmk::acceptance {

namespace {

// Accumulates expectations; remembers the first failing message.
struct Checker {
  bool pass = true;
  std::uint64_t checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& msg) {
    ++checks;
    if (!cond && pass) {
      pass = false;
      first_failure = msg;
    }
  }
};

std::string with_counts(const Checker& c, const std::string& summary) {
  std::ostringstream os;
  if (!c.pass) {
    os << "failed: " << c.first_failure;
  } else {
    os << c.checks << " checks; " << summary;
  }
  return os.str();
}

// c_{d,n} = C(n+d-1, d), the entries of the unipotent matrix powers.
Int power_coeff(int d, int n) { return binomial(n + d - 1, d); }

// ---------------------------------------------------------------------------

CriterionResult c01_closed_forms() {
  Checker c;
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= m; ++k) {
      Endomorphism phi = make_phi(m, k);
      GrowthTable fwd = growth_table(phi, 12);
      GrowthTable bwd = growth_table(inverse_of(phi), 12);
      for (int n = 0; n <= 12; ++n) {
        for (int i = 1; i <= m; ++i) {
          c.expect(fwd.lengths[a_index(i)][n] == closed_form_length_A(i, n),
                   "forward A length m=" + std::to_string(m));
          c.expect(bwd.lengths[a_index(i)][n] == closed_form_length_A(i, n),
                   "inverse A length m=" + std::to_string(m));
        }
        c.expect(fwd.lengths[b_index(m, 1)][n] == closed_form_length_B1(m, n),
                 "forward B1 length m=" + std::to_string(m));
        c.expect(bwd.lengths[b_index(m, 1)][n] == closed_form_length_B1(m, n),
                 "inverse B1 length m=" + std::to_string(m));
        if (k >= 2)
          c.expect(fwd.lengths[b_index(m, 2)][n] == closed_form_length_B2(m, n),
                   "forward B2 length m=" + std::to_string(m));
      }
      // Exact words, not just lengths, on a smaller range.
      for (int n = 0; n <= 8; ++n) {
        for (int i = 1; i <= m; ++i)
          c.expect(iterate(phi, letter(a_index(i)), n) == closed_form_word_A(i, n),
                   "A word m=" + std::to_string(m) + " i=" + std::to_string(i));
        c.expect(iterate(phi, letter(b_index(m, 1)), n) == closed_form_word_B1(m, n),
                 "B1 word m=" + std::to_string(m));
        for (int j = 1; j <= m; ++j) {
          Word prefix;
          for (int i = 1; i <= j; ++i) prefix = concat(prefix, letter(a_index(i)));
          c.expect(iterate(phi, prefix, n + 1) == closed_form_word_A_prefix(j, n + 1),
                   "A-prefix word m=" + std::to_string(m) + " j=" + std::to_string(j));
        }
      }
    }
  }
  return {"01-growth-closed-forms", c.pass, with_counts(c, "m<=4, n<=12 lengths, n<=8 words")};
}

CriterionResult c02_recurrence_oracles() {
  Checker c;
  // Independent two-term recurrence vs the substitution engine.
  for (int m = 2; m <= 4; ++m)
    for (int k = 2; k <= m; ++k) {
      Endomorphism phi = make_phi(m, k);
      for (int j = 2; j <= k; ++j)
        for (int n = 0; n <= 10; ++n)
          c.expect(iterate(phi, letter(b_index(m, j)), n) == recurrence_iterate_B(m, j, n),
                   "recurrence mismatch m=" + std::to_string(m) + " j=" + std::to_string(j) +
                       " n=" + std::to_string(n));
    }
  // One-step inverse identities on the T / S word families.
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= m; ++k) {
      Endomorphism phi = make_phi(m, k);
      for (int i = 0; i <= 4; ++i) {
        if (k >= 2)
          c.expect(apply_inverse(phi, word_T(m, k, i)) ==
                       concat(invert(word_T(m, k - 1, 1)), word_T(m, k, i + 1)),
                   "T-step m=" + std::to_string(m) + " k=" + std::to_string(k) +
                       " i=" + std::to_string(i));
        c.expect(apply_inverse(phi, concat(word_S(m, i), word_T(m, 1, 1))) ==
                     concat(word_S(m, i + 1), word_T(m, 1, 1)),
                 "S-step m=" + std::to_string(m) + " i=" + std::to_string(i));
      }
      for (int n = 0; n <= 8; ++n)
        c.expect(iterate(phi, letter(b_index(m, 1)), -n) ==
                     concat(word_S(m, n), word_T(m, 1, 1)),
                 "inverse B1 word m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  return {"02-recurrence-oracles", c.pass, with_counts(c, "j<=k<=m<=4, n<=10 + T/S identities")};
}

CriterionResult c03_growth_upper_bounds() {
  Checker c;
  for (int m = 1; m <= 4; ++m)
    for (int k = 1; k <= m; ++k) {
      Endomorphism phi = make_phi(m, k);
      GrowthTable fwd = growth_table(phi, 12);
      GrowthTable bwd = growth_table(inverse_of(phi), 12);
      for (int n = 0; n <= 12; ++n)
        for (int j = 1; j <= k; ++j) {
          c.expect(fwd.lengths[b_index(m, j)][n] <= upper_bound_g(m, j, n),
                   "forward bound m=" + std::to_string(m) + " j=" + std::to_string(j));
          c.expect(bwd.lengths[b_index(m, j)][n] <= upper_bound_g_inv(m, j, 0, n),
                   "inverse bound m=" + std::to_string(m) + " j=" + std::to_string(j));
        }
      // The bounds are exact for the bottom ranks, where closed forms exist.
      for (int n = 0; n <= 12; ++n) {
        c.expect(upper_bound_g(m, 1, n) == closed_form_length_B1(m, n), "g(1,n) base");
        if (k >= 2) c.expect(upper_bound_g(m, 2, n) == closed_form_length_B2(m, n), "g(2,n) base");
      }
    }
  // First-difference identity of the inverse-direction bound.
  for (int m = 2; m <= 4; ++m)
    for (int k = 2; k <= m; ++k)
      for (int i = 0; i <= 5; ++i)
        for (int n = 0; n <= 12; ++n)
          c.expect(upper_bound_g_inv(m, k, i, n + 1) - upper_bound_g_inv(m, k, i, n) ==
                       upper_bound_g_inv(m, k - 1, 1, n) + static_cast<std::uint64_t>(k - 1),
                   "difference identity m=" + std::to_string(m) + " k=" + std::to_string(k));
  return {"03-growth-upper-bounds", c.pass, with_counts(c, "m<=4, n<=12 + difference identity")};
}

CriterionResult c04_degree_estimates() {
  Checker c;
  std::ostringstream slopes;
  const int pairs[4][2] = {{2, 2}, {3, 2}, {3, 3}, {4, 4}};
  for (const auto& pr : pairs) {
    int m = pr[0], k = pr[1];
    Endomorphism phi = make_phi(m, k);
    GrowthTable fwd = growth_table(phi, 16);
    GrowthTable bwd = growth_table(inverse_of(phi), 16);
    GrowthTable cmp = growth_table(compose(phi, phi), 16);
    auto slope = [](const GrowthTable& t) {
      return estimate_degree(std::vector<std::uint64_t>(t.gr.begin() + 1, t.gr.end()));
    };
    double sf = slope(fwd), sb = slope(bwd), sc = slope(cmp);
    auto near = [](double a, double b) { return a - b <= 0.5 && b - a <= 0.5; };
    c.expect(near(sf, k), "forward slope off for m=" + std::to_string(m));
    c.expect(near(sb, k), "inverse slope off for m=" + std::to_string(m));
    c.expect(near(sc, sf), "composed slope off for m=" + std::to_string(m));
    slopes << " (" << m << "," << k << "):" << sf << "/" << sb;
  }
  // Composition is exactly the doubled iteration count.
  for (const auto& pr : {std::pair{2, 2}, std::pair{3, 2}}) {
    Endomorphism phi = make_phi(pr.first, pr.second);
    GrowthTable full = growth_table(phi, 32);
    GrowthTable half = growth_table(compose(phi, phi), 16);
    for (int g = 0; g < phi.rank; ++g)
      for (int n = 0; n <= 16; ++n)
        c.expect(half.lengths[g][n] == full.lengths[g][2 * n], "composition length mismatch");
  }
  return {"04-growth-degree-estimates", c.pass, with_counts(c, "slopes" + slopes.str())};
}

CriterionResult c05_abelianization() {
  Checker c;
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; k <= m; ++k) {
      Endomorphism phi = make_phi(m, k);
      IntMatrix M = abelianization_matrix(phi);
      const int dim = m + k;
      // Block structure: identity on A, zero below it, unitriangular all-ones
      // on B, and the mixed block has a 1 exactly where the A-row index is >=
      // the B-column index.
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          Int want;
          if (j < m)
            want = (i == j) ? 1 : 0;
          else if (i >= m)
            want = (i - m <= j - m) ? 1 : 0;
          else
            want = (i + 1 >= j - m + 1) ? 1 : 0;
          c.expect(M.at(i, j) == want, "matrix entry m=" + std::to_string(m) +
                                           " k=" + std::to_string(k));
        }
      IntMatrix N = sub(M, identity_matrix(dim));
      c.expect(rank(N) == k, "rank(M-I) m=" + std::to_string(m) + " k=" + std::to_string(k));
      c.expect(rank(mul(N, N)) == k - 1, "rank((M-I)^2)");
      std::vector<int> sizes{k + 1};
      sizes.insert(sizes.end(), m - 1, 1);
      c.expect(unipotent_jordan_profile(M).sizes == sizes, "block profile");
      // Entry law for powers.
      for (int n = 1; n <= 20; ++n) {
        IntMatrix P = power(M, n);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) {
            Int want;
            if (j < m)
              want = (i == j) ? 1 : 0;
            else if (i >= m) {
              int l = i - m + 1, jj = j - m + 1;
              want = (jj >= l) ? power_coeff(jj - l, n) : 0;
            } else {
              int ii = i + 1, jj = j - m + 1;
              want = power_coeff(jj, n) - (ii < jj ? power_coeff(jj - ii, n) : Int(0));
            }
            c.expect(P.at(i, j) == want, "power entry n=" + std::to_string(n));
          }
        c.expect(column_l1(P, b_index(m, k)) == Int(m) * power_coeff(k, n) + 1,
                 "last-column 1-norm");
        MatrixNorms nm = norms(P);
        c.expect(nm.sup == power_coeff(k, n), "sup norm");
        c.expect(nm.sup <= nm.linf_op && nm.linf_op <= Int(dim) * nm.sup, "norm sandwich");
      }
      // Abelianized length never exceeds word length.
      int n_max = m <= 4 ? 10 : 8;
      GrowthTable fwd = growth_table(phi, n_max);
      for (int n = 0; n <= n_max; ++n) {
        IntMatrix P = power(M, n);
        for (int g = 0; g < dim; ++g)
          c.expect(column_l1(P, g) <= Int(fwd.lengths[g][n]), "abelianized length bound");
      }
    }
  // Frozen small instances.
  {
    IntMatrix P = power(abelianization_matrix(make_phi(2, 2)), 3);
    c.expect(P.at(0, 3) == 3 && P.at(1, 3) == 6 && P.at(2, 3) == 3 && P.at(3, 3) == 1,
             "4x4 cube last column");
    c.expect(column_l1(P, 3) == 13, "4x4 cube last-column 1-norm");
    IntMatrix Q = power(abelianization_matrix(make_phi(3, 2)), 4);
    c.expect(Q.at(0, 3) == 4 && Q.at(0, 4) == 6, "5x5 fourth power first mixed row");
    c.expect(Q.at(1, 3) == 4 && Q.at(1, 4) == 10 && Q.at(2, 3) == 4 && Q.at(2, 4) == 10,
             "5x5 fourth power lower mixed rows");
  }
  return {"05-abelianization", c.pass, with_counts(c, "m,k<=5, powers n<=20")};
}

CriterionResult c06_permrep() {
  Checker c;
  std::ostringstream sizes;
  for (int m = 1; m <= 6; ++m) {
    CoordinateAction act = build_action(m);
    ActionReport rep = verify_action(act, presentation(m, m));
    c.expect(rep.ok(), "action checks failed at m=" + std::to_string(m) +
                           (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    sizes << " m=" << m << ":" << act.num_points;
  }
  // Frozen sample: the first generator sends point 00010 to 00110 at m=2.
  CoordinateAction a2 = build_action(2);
  c.expect(point_label(a2, a2.tables[0][8]) == "00110" && point_label(a2, 8) == "00010",
           "frozen m=2 sample move");
  return {"06-permrep", c.pass, with_counts(c, "points" + sizes.str())};
}

CriterionResult c07_cover_embedding() {
  Checker c;
  for (int m : {1, 2, 4}) {
    Presentation pres = presentation(m, m);
    SquareComplex base = presentation_complex(pres);
    Cover cover = cover_from_action(pres, build_action(m));
    const std::uint64_t deg = 1ull << (2 * m + 1);
    c.expect(cover.complex.num_vertices == static_cast<int>(deg), "cover vertex count");
    c.expect(cover.complex.edges.size() == deg * (2 * m + 1), "cover edge count");
    c.expect(cover.complex.squares.size() == deg * (2 * m), "cover square count");
    CoveringReport rep = verify_covering(cover.complex, base, cover.to_base);
    c.expect(rep.ok() && rep.degree == static_cast<int>(deg),
             "covering verification m=" + std::to_string(m) +
                 (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    c.expect(check_npc(base).ok(), "base curvature m=" + std::to_string(m));
    c.expect(check_npc(cover.complex).ok(), "cover curvature m=" + std::to_string(m));
    TorusEmbeddingReport emb = torus_embedding(cover.complex, m);
    c.expect(emb.ok(), "torus embedding m=" + std::to_string(m) +
                           (emb.failures.empty() ? "" : ": " + emb.failures.front()));
    MorseLinks ml = morse_links(base, 0);
    c.expect(ml.ascending_tree && ml.descending_tree, "base height-function links");
    c.expect(static_cast<int>(ml.ascending.nodes.size()) == 2 * m + 1 &&
                 static_cast<int>(ml.ascending.arcs.size()) == 2 * m,
             "ascending link size");
    c.expect(static_cast<int>(ml.descending.nodes.size()) == 2 * m + 1 &&
                 static_cast<int>(ml.descending.arcs.size()) == 2 * m,
             "descending link size");
    if (m <= 2)
      for (int v = 0; v < cover.complex.num_vertices; ++v) {
        MorseLinks cl = morse_links(cover.complex, v);
        c.expect(cl.ascending_tree && cl.descending_tree, "cover height-function links");
      }
  }
  // Frozen coordinate count: at m=2 the 160 directed out-edges hit 160
  // distinct torus 1-cells (32 points x 5 coordinates).
  Cover c2 = cover_from_action(presentation(2, 2), build_action(2));
  c.expect(c2.complex.edges.size() == 160, "m=2 one-cell count");
  return {"07-cover-embedding", c.pass, with_counts(c, "m in {1,2,4}, degrees 8/32/512")};
}

CriterionResult c08_walls_specialness() {
  Checker c;
  for (int m : {2, 4}) {
    Cover cover = cover_from_action(presentation(m, m), build_action(m));
    SpecialnessReport rep = specialness_report(cover.complex);
    c.expect(rep.verdict == "SPECIAL", "cover verdict m=" + std::to_string(m) + " got " +
                                           rep.verdict);
    c.expect(rep.vh.ok && rep.vh.labels_consistent, "cover two-coloring m=" + std::to_string(m));
    // Odd-position generators one side, even-position the other.
    std::vector<int> odd, even;
    for (int l = 0; l < 2 * m + 1; ++l) (l % 2 == 0 ? odd : even).push_back(l);
    c.expect(rep.vh.label_classes[0] == odd && rep.vh.label_classes[1] == even,
             "cover label split m=" + std::to_string(m));
    VhClassification base_vh = vh_classification(presentation_complex(presentation(m, m)));
    c.expect(base_vh.ok && base_vh.labels_consistent && base_vh.label_classes[0] == odd &&
                 base_vh.label_classes[1] == even,
             "base label split m=" + std::to_string(m));
  }
  for (int m : {1, 3}) {
    VhClassification vh = vh_classification(presentation_complex(presentation(m, m)));
    c.expect(!vh.ok && vh.certificate_square.has_value(),
             "odd-rank coloring should fail m=" + std::to_string(m));
  }
  // Hand-built controls.
  c.expect(specialness_report(torus_square()).verdict == "SPECIAL", "torus control");
  {
    SquareComplex mb = mobius_square();
    c.expect(!check_two_sided(mb, compute_walls(mb)).all_two_sided(), "one-sided control");
  }
  c.expect(!check_npc(bigon_square()).ok(), "double-arc control");
  {
    SquareComplex fx = inter_osculation_fixture();
    WallDecomposition w = compute_walls(fx);
    c.expect(w.num_hyperplanes == 4, "fixture hyperplane count");
    c.expect(check_npc(fx).ok(), "fixture curvature");
    c.expect(check_two_sided(fx, w).all_two_sided() &&
                 check_self_intersection(fx, w).clean() && check_self_osculation(fx, w).clean(),
             "fixture otherwise clean");
    InterOsculationReport io = check_inter_osculation(fx, w);
    c.expect(io.contacts.size() == 1 && io.contacts[0].vertex == 4, "fixture contact detected");
    c.expect(specialness_report(fx).verdict == "CLEAN-BUT-INTEROSCULATING", "fixture verdict");
  }
  return {"08-walls-specialness", c.pass, with_counts(c, "covers m in {2,4} + controls")};
}

CriterionResult c09_cover_deletion() {
  Checker c;
  for (int m : {2, 4}) {
    Cover full = cover_from_action(presentation(m, m), build_action(m));
    SquareComplex del = delete_generator(full.complex, 2 * m);
    const std::uint64_t deg = 1ull << (2 * m);
    c.expect(del.num_vertices == static_cast<int>(deg), "deleted-cover vertex count");
    SquareComplex base = presentation_complex(presentation(m, m - 1));
    CellMap map;
    map.vertex_map.assign(del.num_vertices, 0);
    for (const auto& e : del.edges) map.edge_map.push_back(e.label);
    for (const auto& s : del.squares) map.square_map.push_back(s.label);
    CoveringReport rep = verify_covering(del, base, map);
    c.expect(rep.ok() && rep.degree == static_cast<int>(deg),
             "deleted cover m=" + std::to_string(m) +
                 (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    c.expect(check_npc(del).ok(), "deleted cover curvature");
  }
  return {"09-cover-deletion", c.pass, with_counts(c, "degrees 16/256 over the one-lower family")};
}

CriterionResult c10_bieri() {
  Checker c;
  for (const auto& pr : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
    DoubledGroup G = make_doubled_group(pr.first, pr.second);
    for (int n = 1; n <= 8; ++n) {
      Certificate cert = certificate_word(G, n, 1, 1);
      c.expect(is_trivial(G, cert.word), "certificate not trivial n=" + std::to_string(n));
      c.expect(cert.word.length() == cert.written_length - 4, "certificate reduced length");
      MuImage mu = mu_embedding(G, cert.word);
      c.expect(mu.h.u.empty() && mu.h.g.empty() && mu.f.empty(), "substitution image");
      c.expect(cert.filling_exponent == pr.second + 2, "certified degree");
    }
  }
  // Normal forms are blind to relator insertions.
  {
    DoubledGroup G = make_doubled_group(2, 2);
    Presentation bp = bieri_presentation(2, 2);
    const int alphabet = G.psi.rank + 2;
    std::mt19937 rng(12345);
    auto random_word = [&](int max_len) {
      std::uniform_int_distribution<int> len(0, max_len);
      std::uniform_int_distribution<int> gen(0, alphabet - 1), sg(0, 1);
      Word w;
      int L = len(rng);
      for (int i = 0; i < L; ++i) push_reduced(w.syms, GenSymbol(gen(rng), sg(rng) ? 1 : -1));
      return w;
    };
    for (int trial = 0; trial < 10000; ++trial) {
      Word w = random_word(20);
      std::uniform_int_distribution<std::size_t> cut(0, w.length());
      std::uniform_int_distribution<std::size_t> rel(0, bp.relators.size() - 1);
      std::size_t pos = cut(rng);
      Word conj = random_word(5);
      Word insert = concat(concat(conj, bp.relators[rel(rng)]), invert(conj));
      Word prefix(std::vector<GenSymbol>(w.syms.begin(), w.syms.begin() + pos));
      Word suffix(std::vector<GenSymbol>(w.syms.begin() + pos, w.syms.end()));
      Word spliced = concat(concat(prefix, insert), suffix);
      c.expect(normal_form(G, spliced) == normal_form(G, w), "relator insertion changed the form");
    }
  }
  // Exhaustive fellow-traveler length audit on a ball.
  CombingAudit audit = combing_length_audit(make_doubled_group(1, 1), 6);
  c.expect(audit.violations == 0, "length bound violated in the ball");
  c.expect(audit.ball_size > 1000, "ball unexpectedly small");
  // Abelianized lower-bound closed form and its polynomial degree.
  for (int m = 1; m <= 5; ++m) {
    IntMatrix M = abelianization_matrix(make_phi(m, m));
    std::vector<Int> v;
    for (int n = 0; n <= 20; ++n) {
      Int got = n == 0 ? Int(0)
                       : Int(n) * Int(n) * column_l1(power(M, n), b_index(m, m));
      Int want = Int(n) * Int(n) * (Int(m) * binomial(n + m - 1, m) + 1);
      c.expect(got == want, "closed form m=" + std::to_string(m) + " n=" + std::to_string(n));
      v.push_back(got);
    }
    // Finite differences of order m+3 kill a degree-(m+2) polynomial.
    for (int d = 0; d < m + 3; ++d)
      for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
    v.resize(v.size() - (m + 3));
    for (const Int& x : v) c.expect(x == 0, "difference order m=" + std::to_string(m));
  }
  // Exact lower bound dominates its abelianized shadow.
  for (const auto& pr : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}})
    for (int n = 1; n <= 6; ++n)
      for (int ell = 1; ell <= 2; ++ell)
        for (int p = 1; p <= 2; ++p) {
          LowerBound lb = lower_bound_quantity(pr.first, pr.second, n, ell, p);
          c.expect(lb.exact >= lb.abelian, "exact below abelianized");
        }
  c.expect(lower_bound_quantity(2, 2, 3, 1, 1).abelian == 117, "frozen abelianized value");
  std::ostringstream sum;
  sum << "ball " << audit.ball_size << ", 10000 insertions";
  return {"10-bieri", c.pass, with_counts(c, sum.str())};
}

CriterionResult c11_determinism() {
  Checker c;
  for (const std::string& id : criterion_ids()) {
    if (id == "11-determinism") continue;
    CriterionResult a = run_criterion(id);
    CriterionResult b = run_criterion(id);
    c.expect(a.pass && b.pass && format_result(a) == format_result(b),
             "re-run differs for " + id);
  }
  return {"11-determinism", c.pass, with_counts(c, "10 criteria re-run byte-identical")};
}

const std::vector<std::pair<std::string, CriterionResult (*)()>>& table() {
  static const std::vector<std::pair<std::string, CriterionResult (*)()>> t = {
      {"01-growth-closed-forms", c01_closed_forms},
      {"02-recurrence-oracles", c02_recurrence_oracles},
      {"03-growth-upper-bounds", c03_growth_upper_bounds},
      {"04-growth-degree-estimates", c04_degree_estimates},
      {"05-abelianization", c05_abelianization},
      {"06-permrep", c06_permrep},
      {"07-cover-embedding", c07_cover_embedding},
      {"08-walls-specialness", c08_walls_specialness},
      {"09-cover-deletion", c09_cover_deletion},
      {"10-bieri", c10_bieri},
      {"11-determinism", c11_determinism},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : table()) v.push_back(id);
    return v;
  }();
  return ids;
}

CriterionResult run_criterion(const std::string& id) {
  for (const auto& [name, fn] : table())
    if (name == id) return fn();
  throw std::invalid_argument("unknown criterion id: " + id);
}

std::vector<CriterionResult> run_selected(const std::string& filter, int threads) {
  std::vector<std::pair<std::string, CriterionResult (*)()>> selected;
  for (const auto& entry : table())
    if (filter.empty() || entry.first.find(filter) != std::string::npos) selected.push_back(entry);

  std::vector<CriterionResult> results(selected.size());
  unsigned want = threads > 0 ? static_cast<unsigned>(threads)
                              : std::max(1u, std::thread::hardware_concurrency());
  want = std::min<unsigned>(want, selected.size() == 0 ? 1 : selected.size());
  if (want <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) results[i] = selected[i].second();
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < want; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
        results[i] = selected[i].second();
    });
  for (auto& th : pool) th.join();
  return results;
}

std::string format_result(const CriterionResult& r) {
  return (r.pass ? "PASS " : "FAIL ") + r.id + " -- " + r.detail;
}

}  // namespace gmk::acceptance
