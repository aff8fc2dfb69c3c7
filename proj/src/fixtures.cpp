#include "gmk/fixtures.hpp"

namespace gmk {

namespace {

SquareComplex::Square square_of(SquareComplex::Step s0, SquareComplex::Step s1,
                                SquareComplex::Step s2, SquareComplex::Step s3, int label = 0) {
  SquareComplex::Square sq;
  sq.steps = {s0, s1, s2, s3};
  sq.label = label;
  return sq;
}

}  // namespace

SquareComplex torus_square() {
  SquareComplex x;
  x.num_vertices = 1;
  x.num_labels = 2;
  x.edges = {{0, 0, 0}, {0, 0, 1}};
  x.squares = {square_of({0, true}, {1, true}, {0, false}, {1, false})};
  validate_complex(x);
  return x;
}

SquareComplex mobius_square() {
  SquareComplex x;
  x.num_vertices = 1;
  x.num_labels = 2;
  x.edges = {{0, 0, 0}, {0, 0, 1}};
  // a b a b^-1: sides 1 and 3 are the a-loop with the same orientation, so
  // the a-wall is glued to its own reversal.
  x.squares = {square_of({0, true}, {1, true}, {0, true}, {1, false})};
  validate_complex(x);
  return x;
}

SquareComplex bigon_square() {
  SquareComplex x;
  x.num_vertices = 2;
  x.num_labels = 2;
  x.edges = {{0, 1, 0}, {0, 1, 1}};
  // e1 e2^-1 e1 e2^-1: the corner (e1 in, e2 out) occurs twice at vertex 1,
  // giving a double arc in its link.
  x.squares = {square_of({0, true}, {1, false}, {0, true}, {1, false})};
  validate_complex(x);
  return x;
}

SquareComplex inter_osculation_fixture() {
  SquareComplex x;
  // A central x-y square (corners 0,1,3,2) whose two walls are each extended
  // by one more square in an independent direction (x by an x-z square, y by
  // a y-w square); the far corners of the two extensions are glued at vertex
  // 4.  The x- and y-walls cross in the central square and meet again only
  // at vertex 4, where no square contains both incident edges.
  x.num_vertices = 7;
  x.num_labels = 4;
  enum { x00, x10, x30, y00, y10, y20, z2, z3, w1, w3 };
  x.edges = {
      {0, 1, 0},  // x00
      {2, 3, 0},  // x10
      {4, 5, 0},  // x30: far side of the x-z square
      {0, 2, 1},  // y00
      {1, 3, 1},  // y10
      {4, 6, 1},  // y20: far side of the y-w square
      {2, 4, 2},  // z2
      {3, 5, 2},  // z3
      {1, 4, 3},  // w1
      {3, 6, 3},  // w3
  };
  x.squares = {
      square_of({x00, true}, {y10, true}, {x10, false}, {y00, false}, 0),
      square_of({x10, true}, {z3, true}, {x30, false}, {z2, false}, 1),
      square_of({y10, true}, {w3, true}, {y20, false}, {w1, false}, 2),
  };
  validate_complex(x);
  return x;
}

}  // namespace gmk
