#pragma once
// Square complexes: presentation complexes, vertex links, the girth-4 link
// condition, ascending/descending links of the circle-valued Morse function,
// covers built from a point action, covering verification, the coordinate
// torus embedding, and generator deletion.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gmk/family.hpp"
#include "gmk/permrep.hpp"

namespace gmk {

struct SquareComplex {
  struct Edge {
    int src = 0, dst = 0, label = 0;
  };
  struct Step {
    int edge = 0;
    bool forward = true;
  };
  struct Square {
    std::array<Step, 4> steps;
    int label = 0;  // relator index in the base presentation
  };

  int num_vertices = 0;
  int num_labels = 0;
  std::vector<Edge> edges;
  std::vector<Square> squares;
  std::vector<std::string> vertex_names;  // optional (bit strings for covers)

  int step_src(const Step& s) const { return s.forward ? edges[s.edge].src : edges[s.edge].dst; }
  int step_dst(const Step& s) const { return s.forward ? edges[s.edge].dst : edges[s.edge].src; }
};

// Validate closedness/composability of every square path; throws on failure.
void validate_complex(const SquareComplex& x);

// One vertex, one loop per generator, one square per length-4 relator.
SquareComplex presentation_complex(const Presentation& pres);

// Link of a vertex: one node per edge-end at v, one arc per square corner.
struct LinkGraph {
  struct Node {
    int edge = 0;
    bool head = false;  // true: the incoming end e+; false: the outgoing end e-
    bool operator==(const Node&) const = default;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> arcs;  // node indices
};

LinkGraph vertex_link(const SquareComplex& x, int v);

struct NpcReport {
  bool simplicial = true;    // no loop arcs, no double arcs in any link
  bool girth_at_least_4 = true;  // no triangles in any link
  std::vector<std::string> violations;
  bool ok() const { return simplicial && girth_at_least_4; }
};
NpcReport check_npc(const SquareComplex& x);

// Ascending link at v: corners with both edge-ends outgoing; descending:
// both incoming.  The Morse function maps every edge positively around the
// circle, so orientation data is the edge direction itself.
struct MorseLinks {
  LinkGraph ascending, descending;
  bool ascending_tree = false, descending_tree = false;
};
MorseLinks morse_links(const SquareComplex& x, int v);

struct CellMap {
  std::vector<int> vertex_map, edge_map, square_map;
};

// Cover with one vertex per point, one edge per (point, generator), one
// square per (point, relator); the covering map forgets basepoints.
struct Cover {
  SquareComplex complex;
  CellMap to_base;
};
Cover cover_from_action(const Presentation& pres, const CoordinateAction& act);

struct CoveringReport {
  bool label_regular = false;   // unique in/out edge per base edge per vertex
  bool squares_lift = false;    // each base square lifts degree times, once per fiber point
  bool links_isomorphic = false;
  bool incidence_ok = false;    // the map commutes with src/dst and square steps
  int degree = 0;
  std::vector<std::string> failures;
  bool ok() const { return label_regular && squares_lift && links_isomorphic && incidence_ok; }
};
CoveringReport verify_covering(const SquareComplex& cover, const SquareComplex& base,
                               const CellMap& map);

// Identity covering map (useful as a positive control).
CellMap identity_cell_map(const SquareComplex& x);

struct TorusEmbeddingReport {
  bool edges_flip_one_coordinate = false;
  bool per_vertex_distinct_positions = false;  // no two edges at a vertex flip the same coordinate
  bool squares_axis_aligned = false;  // opposite sides flip the same position, the two positions distinct
  bool injective_vertices = false, injective_edges = false, injective_squares = false;
  std::vector<std::string> failures;
  bool ok() const {
    return edges_flip_one_coordinate && per_vertex_distinct_positions && squares_axis_aligned &&
           injective_vertices && injective_edges && injective_squares;
  }
};
// Check the cellular embedding of a cover (vertices = bit points) into the
// 2-skeleton of the (2m+1)-torus with two vertices per circle factor.
TorusEmbeddingReport torus_embedding(const SquareComplex& cover, int m);

// Remove every edge with the given label and every square incident to one,
// then return the connected component of vertex 0 (the all-zeros point).
SquareComplex delete_generator(const SquareComplex& x, int label);

}  // namespace gmk
