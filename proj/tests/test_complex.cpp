#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gmk/complex.hpp"
#include "gmk/fixtures.hpp"

using namespace gmk;

TEST_CASE("presentation complexes") {
  SquareComplex t = presentation_complex(presentation(1, 0));
  CHECK(t.num_vertices == 1);
  CHECK(t.edges.size() == 2);
  CHECK(t.squares.size() == 1);

  SquareComplex k22 = presentation_complex(presentation(2, 2));
  CHECK(k22.num_vertices == 1);
  CHECK(k22.edges.size() == 5);
  CHECK(k22.squares.size() == 4);
  CHECK_NOTHROW(validate_complex(k22));

  CHECK(presentation_complex(presentation(3, 2)).edges.size() == 6);
  CHECK(presentation_complex(presentation(3, 2)).squares.size() == 5);
}

TEST_CASE("square path validation") {
  SquareComplex bad = torus_square();
  bad.squares[0].steps[2].edge = 1;  // breaks closedness
  CHECK_THROWS(validate_complex(bad));
  SquareComplex backtrack = torus_square();
  backtrack.squares[0].steps = {SquareComplex::Step{0, true}, SquareComplex::Step{0, false},
                                SquareComplex::Step{1, true}, SquareComplex::Step{1, false}};
  CHECK_THROWS(validate_complex(backtrack));
}

TEST_CASE("vertex links") {
  LinkGraph torus_link = vertex_link(torus_square(), 0);
  CHECK(torus_link.nodes.size() == 4);
  CHECK(torus_link.arcs.size() == 4);  // a 4-cycle

  LinkGraph l = vertex_link(presentation_complex(presentation(2, 2)), 0);
  CHECK(l.nodes.size() == 10);  // both ends of 5 loops
  CHECK(l.arcs.size() == 16);   // 4 squares x 4 corners
}

TEST_CASE("link condition") {
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; k <= m; ++k) {
      INFO("m=" << m << " k=" << k);
      CHECK(check_npc(presentation_complex(presentation(m, k))).ok());
    }
  NpcReport bad = check_npc(bigon_square());
  CHECK(!bad.ok());
  CHECK(!bad.simplicial);
}

TEST_CASE("height-function links are trees") {
  MorseLinks ml = morse_links(presentation_complex(presentation(2, 2)), 0);
  CHECK(ml.ascending_tree);
  CHECK(ml.descending_tree);
  CHECK(ml.ascending.nodes.size() == 5);
  CHECK(ml.ascending.arcs.size() == 4);
  CHECK(ml.descending.nodes.size() == 5);
  CHECK(ml.descending.arcs.size() == 4);
  // The descending link is the path a1+ - a2+ - ... - a5+: two leaves.
  std::vector<int> deg(ml.descending.nodes.size(), 0);
  for (auto [x, y] : ml.descending.arcs) {
    ++deg[x];
    ++deg[y];
  }
  CHECK(std::count(deg.begin(), deg.end(), 1) == 2);

  MorseLinks ml10 = morse_links(presentation_complex(presentation(1, 0)), 0);
  CHECK(ml10.ascending.nodes.size() == 2);
  CHECK(ml10.ascending.arcs.size() == 1);
  CHECK(ml10.ascending_tree);
}

TEST_CASE("covers from the point action") {
  Presentation pres = presentation(1, 1);
  SquareComplex base = presentation_complex(pres);
  Cover cov = cover_from_action(pres, build_action(1));
  CHECK(cov.complex.num_vertices == 8);
  CHECK(cov.complex.edges.size() == 24);
  CHECK(cov.complex.squares.size() == 16);
  CoveringReport rep = verify_covering(cov.complex, base, cov.to_base);
  CHECK(rep.ok());
  CHECK(rep.degree == 8);
  CHECK(check_npc(cov.complex).ok());

  // The identity map is a degree-1 covering.
  CoveringReport id_rep = verify_covering(base, base, identity_cell_map(base));
  CHECK(id_rep.ok());
  CHECK(id_rep.degree == 1);

  // Deleting one square breaks square lifting.
  SquareComplex damaged = cov.complex;
  CellMap dmap = cov.to_base;
  damaged.squares.pop_back();
  dmap.square_map.pop_back();
  CoveringReport bad = verify_covering(damaged, base, dmap);
  CHECK(!bad.ok());
  CHECK(!bad.squares_lift);
}

TEST_CASE("torus embedding") {
  for (int m : {1, 2}) {
    Cover cov = cover_from_action(presentation(m, m), build_action(m));
    TorusEmbeddingReport rep = torus_embedding(cov.complex, m);
    INFO("m=" << m);
    CHECK(rep.ok());
  }
  // A duplicated edge kills injectivity.
  Cover cov = cover_from_action(presentation(1, 1), build_action(1));
  SquareComplex dup = cov.complex;
  dup.edges.push_back(dup.edges[0]);
  CHECK(!torus_embedding(dup, 1).injective_edges);
}

TEST_CASE("generator deletion") {
  Cover cov = cover_from_action(presentation(1, 1), build_action(1));
  SquareComplex del = delete_generator(cov.complex, 2);  // drop the last loop's lifts
  CHECK(del.num_vertices == 4);
  SquareComplex base10 = presentation_complex(presentation(1, 0));
  CellMap map;
  map.vertex_map.assign(del.num_vertices, 0);
  for (const auto& e : del.edges) map.edge_map.push_back(e.label);
  for (const auto& s : del.squares) map.square_map.push_back(s.label);
  CoveringReport rep = verify_covering(del, base10, map);
  CHECK(rep.ok());
  CHECK(rep.degree == 4);

  // Deleting a label that no square uses leaves all squares intact.
  SquareComplex torus_plus = torus_square();
  torus_plus.num_labels = 3;
  torus_plus.edges.push_back({0, 0, 2});
  CHECK(delete_generator(torus_plus, 2).squares.size() == 1);
}
