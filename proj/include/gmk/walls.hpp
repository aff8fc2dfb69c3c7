#pragma once
// Wall decomposition (parallelism classes of oriented edges) of a square
// complex, the four specialness pathology detectors, and the
// vertical/horizontal 2-coloring.

#include <optional>
#include <string>
#include <vector>

#include "gmk/complex.hpp"

namespace gmk {

// Oriented edge ids: 2*e is edge e traversed forward, 2*e+1 backward.
struct WallDecomposition {
  int num_classes = 0;
  int num_hyperplanes = 0;
  std::vector<int> class_of;       // oriented edge -> class
  std::vector<int> opposite;       // class -> class of the reversed edges
  std::vector<int> hyperplane_of;  // class -> hyperplane
  std::vector<std::vector<int>> dual_edges;  // hyperplane -> sorted geometric edges

  int edge_hyperplane(int e) const { return hyperplane_of[class_of[2 * e]]; }
};

WallDecomposition compute_walls(const SquareComplex& x);

struct OneSidedReport {
  std::vector<int> one_sided_hyperplanes;
  bool all_two_sided() const { return one_sided_hyperplanes.empty(); }
};
OneSidedReport check_two_sided(const SquareComplex& x, const WallDecomposition& w);

struct SelfIntersectionReport {
  std::vector<int> squares;  // both midcubes in one hyperplane
  bool clean() const { return squares.empty(); }
};
SelfIntersectionReport check_self_intersection(const SquareComplex& x, const WallDecomposition& w);

struct OsculationContact {
  int hyperplane1 = 0, hyperplane2 = 0;  // equal for self-osculation
  int vertex = 0;
  int edge1 = 0, edge2 = 0;
  bool direct = false;  // consistent orientations make the vertex a common origin/terminus
};

struct SelfOsculationReport {
  std::vector<OsculationContact> contacts;
  bool clean() const { return contacts.empty(); }
};
SelfOsculationReport check_self_osculation(const SquareComplex& x, const WallDecomposition& w);

struct InterOsculationReport {
  std::vector<OsculationContact> contacts;  // pairs that also cross in some square
  bool clean() const { return contacts.empty(); }
};
InterOsculationReport check_inter_osculation(const SquareComplex& x, const WallDecomposition& w);

struct VhClassification {
  bool ok = false;
  std::vector<int> edge_color;          // 0 / 1 per geometric edge when ok
  std::vector<std::vector<int>> label_classes;  // the two label classes when consistent
  bool labels_consistent = false;
  std::optional<int> certificate_square;  // a square witnessing the parity obstruction
};
VhClassification vh_classification(const SquareComplex& x);

struct SpecialnessReport {
  NpcReport npc;
  OneSidedReport one_sided;
  SelfIntersectionReport self_intersection;
  SelfOsculationReport self_osculation;
  InterOsculationReport inter_osculation;
  VhClassification vh;
  int num_hyperplanes = 0;
  std::string verdict;  // SPECIAL / CLEAN-BUT-INTEROSCULATING / OTHER
};
SpecialnessReport specialness_report(const SquareComplex& x);

}  // namespace gmk
