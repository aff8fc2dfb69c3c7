#pragma once
// The right action of G_{m,m} on the point set {0,1}^{2m+1}, built by the
// staged induction: coordinate flips on the first slice, then one new
// generator per stage acting as a flip of the new coordinate, with all
// earlier generators extended to the new half by a swap-flip conjugation.
//
// Points are integers 0 .. 2^{2m+1}-1 with coordinate i stored as bit i-1.
// The slice H_n consists of points whose coordinates above n are all zero.

#include <cstdint>
#include <string>
#include <vector>

#include "gmk/family.hpp"

namespace gmk {

struct CoordinateAction {
  int m = 0;
  int num_coords = 0;      // 2m+1
  std::uint32_t num_points = 0;  // 2^{2m+1}
  // tables[g][p] = image of point p under generator a_{g+1}.
  std::vector<std::vector<std::uint32_t>> tables;
};

CoordinateAction build_action(int m);

// Apply a word letter by letter, left to right (right action: the inverse of
// an involution is itself, so signs are immaterial).
std::uint32_t act_word(const CoordinateAction& act, std::uint32_t p, const Word& w);

// Bit-string label of a point: coordinate 1 printed leftmost.
std::string point_label(const CoordinateAction& act, std::uint32_t p);

struct ActionReport {
  bool relators_ok = false;
  bool transitive = false;
  bool involutions_ok = false;
  bool single_coordinate_moves = false;
  bool products_fixed_point_free = false;
  bool staged_transitivity = false;
  bool stage_flip_property = false;  // a_j acts as the coordinate-j flip on
                                     // the H_{m+k} slice for j = k..m
  std::vector<std::string> failures;

  bool ok() const {
    return relators_ok && transitive && involutions_ok && single_coordinate_moves &&
           products_fixed_point_free && staged_transitivity && stage_flip_property;
  }
};

ActionReport verify_action(const CoordinateAction& act, const Presentation& pres);

}  // namespace gmk
