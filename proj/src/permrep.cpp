#include "gmk/permrep.hpp"

#include <numeric>
#include <stdexcept>

namespace gmk {

namespace {

std::uint32_t swap_bits(std::uint32_t p, int b1, int b2) {
  std::uint32_t x = ((p >> b1) ^ (p >> b2)) & 1u;
  return p ^ ((x << b1) | (x << b2));
}

}  // namespace

CoordinateAction build_action(int m) {
  if (m < 1 || m > 15) throw std::invalid_argument("build_action: m out of range");
  CoordinateAction act;
  act.m = m;
  act.num_coords = 2 * m + 1;
  act.num_points = 1u << act.num_coords;
  const std::uint32_t UNSET = 0xffffffffu;
  act.tables.assign(act.num_coords, std::vector<std::uint32_t>(act.num_points, UNSET));

  // Stage 0: a_1 .. a_{m+1} act on the H_{m+1} slice as coordinate flips.
  std::uint32_t h = 1u << (m + 1);
  for (int i = 1; i <= m + 1; ++i)
    for (std::uint32_t p = 0; p < h; ++p) act.tables[i - 1][p] = p ^ (1u << (i - 1));

  // Stage k = 1..m: the slice grows from H_{m+k} to H_{m+k+1}.
  for (int k = 1; k <= m; ++k) {
    int n = m + k;                       // current slice dimension
    std::uint32_t half = 1u << n;        // size of H_n; H_n* = [half, 2*half)
    std::uint32_t top = 1u << n;         // bit of the new coordinate n+1
    // New generator a_{n+1} flips the new coordinate on the whole slice.
    for (std::uint32_t p = 0; p < 2 * half; ++p) act.tables[n][p] = p ^ top;
    // Earlier generators extend to the starred half by conjugating their
    // H_n action with (swap of coordinates k and n) then (flip of n+1),
    // rightmost factor applied first.
    for (int j = 1; j <= n; ++j) {
      for (std::uint32_t p = half; p < 2 * half; ++p) {
        std::uint32_t q = swap_bits(p ^ top, k - 1, n - 1);
        act.tables[j - 1][p] = swap_bits(act.tables[j - 1][q], k - 1, n - 1) ^ top;
      }
    }
  }
  return act;
}

std::uint32_t act_word(const CoordinateAction& act, std::uint32_t p, const Word& w) {
  for (const GenSymbol& s : w.syms) {
    if (s.index < 0 || s.index >= act.num_coords)
      throw std::out_of_range("letter outside the a-alphabet");
    p = act.tables[s.index][p];  // involution: sign immaterial
  }
  return p;
}

std::string point_label(const CoordinateAction& act, std::uint32_t p) {
  std::string s(act.num_coords, '0');
  for (int i = 0; i < act.num_coords; ++i)
    if (p & (1u << i)) s[i] = '1';
  return s;
}

namespace {

// Single orbit of the first `gens` generators on points < limit?
bool orbit_covers(const CoordinateAction& act, int gens, std::uint32_t limit) {
  std::vector<char> seen(limit, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::uint32_t count = 1;
  while (!stack.empty()) {
    std::uint32_t p = stack.back();
    stack.pop_back();
    for (int g = 0; g < gens; ++g) {
      std::uint32_t q = act.tables[g][p];
      if (q < limit && !seen[q]) {
        seen[q] = 1;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == limit;
}

}  // namespace

ActionReport verify_action(const CoordinateAction& act, const Presentation& pres) {
  ActionReport rep;
  const int m = act.m;
  const std::uint32_t N = act.num_points;

  rep.relators_ok = true;
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    for (std::uint32_t p = 0; p < N; ++p) {
      if (act_word(act, p, pres.relators[r]) != p) {
        rep.relators_ok = false;
        rep.failures.push_back("relator " + std::to_string(r) + " moves point " +
                               point_label(act, p));
        break;
      }
    }
  }

  rep.involutions_ok = true;
  rep.single_coordinate_moves = true;
  for (int g = 0; g < act.num_coords && rep.involutions_ok && rep.single_coordinate_moves; ++g) {
    for (std::uint32_t p = 0; p < N; ++p) {
      std::uint32_t q = act.tables[g][p];
      if (act.tables[g][q] != p || q == p) {
        rep.involutions_ok = false;
        rep.failures.push_back("generator a" + std::to_string(g + 1) +
                               " is not a fixed-point-free involution at " + point_label(act, p));
        break;
      }
      std::uint32_t d = p ^ q;
      if (d == 0 || (d & (d - 1)) != 0) {
        rep.single_coordinate_moves = false;
        rep.failures.push_back("generator a" + std::to_string(g + 1) +
                               " moves more than one coordinate at " + point_label(act, p));
        break;
      }
    }
  }

  rep.products_fixed_point_free = true;
  for (int g1 = 0; g1 < act.num_coords && rep.products_fixed_point_free; ++g1)
    for (int g2 = 0; g2 < act.num_coords && rep.products_fixed_point_free; ++g2) {
      if (g1 == g2) continue;
      for (std::uint32_t p = 0; p < N; ++p)
        if (act.tables[g2][act.tables[g1][p]] == p) {
          rep.products_fixed_point_free = false;
          rep.failures.push_back("a" + std::to_string(g1 + 1) + " a" + std::to_string(g2 + 1) +
                                 " fixes " + point_label(act, p));
          break;
        }
    }

  rep.transitive = orbit_covers(act, act.num_coords, N);
  if (!rep.transitive) rep.failures.push_back("action is not transitive");

  rep.staged_transitivity = true;
  for (int k = 0; k <= m; ++k) {
    if (!orbit_covers(act, m + k + 1, 1u << (m + k + 1))) {
      rep.staged_transitivity = false;
      rep.failures.push_back("a_1..a_" + std::to_string(m + k + 1) +
                             " not transitive on the H_" + std::to_string(m + k + 1) + " slice");
    }
  }

  // a_j restricted to H_{m+k} must equal the coordinate-j flip for j = k..m.
  rep.stage_flip_property = true;
  for (int k = 1; k <= m && rep.stage_flip_property; ++k) {
    std::uint32_t limit = 1u << (m + k);
    for (int j = k; j <= m && rep.stage_flip_property; ++j)
      for (std::uint32_t p = 0; p < limit; ++p)
        if (act.tables[j - 1][p] != (p ^ (1u << (j - 1)))) {
          rep.stage_flip_property = false;
          rep.failures.push_back("a" + std::to_string(j) + " is not the coordinate flip on H_" +
                                 std::to_string(m + k));
          break;
        }
  }
  return rep;
}

}  // namespace gmk
