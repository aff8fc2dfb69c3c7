#pragma once
// Small hand-built square complexes used as positive/negative controls by
// the wall and curvature detectors.

#include "gmk/complex.hpp"

namespace gmk {

// One vertex, two loops, one square spelling the commutator: a torus.
SquareComplex torus_square();

// One vertex, two loops, square word a b a b^-1: the a-wall is one-sided.
SquareComplex mobius_square();

// Two vertices joined by two parallel edges carrying one square whose link
// has a double arc (girth 2): fails the link condition.
SquareComplex bigon_square();

// Subcomplex of the product of two length-1 segments and one length-2
// segment whose x- and y-hyperplanes cross in one square and osculate at a
// vertex not shared by any square: triggers the inter-osculation detector.
SquareComplex inter_osculation_fixture();

}  // namespace gmk
