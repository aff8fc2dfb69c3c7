#include "gmk/walls.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gmk {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int oriented_id(const SquareComplex::Step& s) { return 2 * s.edge + (s.forward ? 0 : 1); }

// Per-geometric-edge incidence lists of squares, for common-square tests.
std::vector<std::vector<int>> edge_squares(const SquareComplex& x) {
  std::vector<std::vector<int>> inc(x.edges.size());
  for (std::size_t s = 0; s < x.squares.size(); ++s)
    for (const auto& st : x.squares[s].steps) inc[st.edge].push_back(static_cast<int>(s));
  for (auto& v : inc) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return inc;
}

bool share_square(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    (a[i] < b[j]) ? ++i : ++j;
  }
  return false;
}

// Edges incident to each vertex (loops listed once).
std::vector<std::vector<int>> vertex_edges(const SquareComplex& x) {
  std::vector<std::vector<int>> inc(x.num_vertices);
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    inc[x.edges[e].src].push_back(static_cast<int>(e));
    if (x.edges[e].dst != x.edges[e].src) inc[x.edges[e].dst].push_back(static_cast<int>(e));
  }
  return inc;
}

}  // namespace

WallDecomposition compute_walls(const SquareComplex& x) {
  const int n = 2 * static_cast<int>(x.edges.size());
  Dsu dsu(n);
  for (const auto& sq : x.squares) {
    int s1 = oriented_id(sq.steps[0]), s2 = oriented_id(sq.steps[1]);
    int s3 = oriented_id(sq.steps[2]), s4 = oriented_id(sq.steps[3]);
    // Opposite sides, traversed with matching orientation; merges come in
    // reversal-symmetric pairs so that reversal acts on classes.
    dsu.unite(s1, s3 ^ 1);
    dsu.unite(s1 ^ 1, s3);
    dsu.unite(s2, s4 ^ 1);
    dsu.unite(s2 ^ 1, s4);
  }

  WallDecomposition w;
  w.class_of.assign(n, -1);
  std::vector<int> root_to_class(n, -1);
  for (int o = 0; o < n; ++o) {
    int r = dsu.find(o);
    if (root_to_class[r] < 0) root_to_class[r] = w.num_classes++;
    w.class_of[o] = root_to_class[r];
  }
  w.opposite.assign(w.num_classes, -1);
  for (int o = 0; o < n; ++o) {
    int c = w.class_of[o], oc = w.class_of[o ^ 1];
    if (w.opposite[c] >= 0 && w.opposite[c] != oc)
      throw std::logic_error("reversal is not well-defined on classes");
    w.opposite[c] = oc;
  }
  w.hyperplane_of.assign(w.num_classes, -1);
  for (int c = 0; c < w.num_classes; ++c) {
    if (w.hyperplane_of[c] >= 0) continue;
    w.hyperplane_of[c] = w.num_hyperplanes;
    w.hyperplane_of[w.opposite[c]] = w.num_hyperplanes;
    ++w.num_hyperplanes;
  }
  w.dual_edges.assign(w.num_hyperplanes, {});
  for (std::size_t e = 0; e < x.edges.size(); ++e)
    w.dual_edges[w.hyperplane_of[w.class_of[2 * e]]].push_back(static_cast<int>(e));
  for (auto& v : w.dual_edges) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return w;
}

OneSidedReport check_two_sided(const SquareComplex& x, const WallDecomposition& w) {
  OneSidedReport rep;
  std::set<int> bad;
  for (std::size_t e = 0; e < x.edges.size(); ++e)
    if (w.class_of[2 * e] == w.class_of[2 * e + 1])
      bad.insert(w.hyperplane_of[w.class_of[2 * e]]);
  rep.one_sided_hyperplanes.assign(bad.begin(), bad.end());
  return rep;
}

SelfIntersectionReport check_self_intersection(const SquareComplex& x,
                                               const WallDecomposition& w) {
  SelfIntersectionReport rep;
  for (std::size_t s = 0; s < x.squares.size(); ++s) {
    if (w.edge_hyperplane(x.squares[s].steps[0].edge) ==
        w.edge_hyperplane(x.squares[s].steps[1].edge))
      rep.squares.push_back(static_cast<int>(s));
  }
  return rep;
}

namespace {

// Collect osculating contacts; `same` selects self- (equal hyperplane) or
// inter- (distinct hyperplane) contacts.
std::vector<OsculationContact> osculating_contacts(const SquareComplex& x,
                                                   const WallDecomposition& w, bool same) {
  auto esq = edge_squares(x);
  auto vinc = vertex_edges(x);
  std::vector<OsculationContact> out;
  for (int v = 0; v < x.num_vertices; ++v) {
    const auto& inc = vinc[v];
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        int e1 = inc[i], e2 = inc[j];
        int h1 = w.edge_hyperplane(e1), h2 = w.edge_hyperplane(e2);
        if ((h1 == h2) != same) continue;
        if (share_square(esq[e1], esq[e2])) continue;
        OsculationContact c;
        c.hyperplane1 = std::min(h1, h2);
        c.hyperplane2 = std::max(h1, h2);
        c.vertex = v;
        c.edge1 = e1;
        c.edge2 = e2;
        // Orientations pointing out of v; the contact is direct when both
        // out-orientations lie in the same oriented class.
        int o1 = 2 * e1 + (x.edges[e1].src == v ? 0 : 1);
        int o2 = 2 * e2 + (x.edges[e2].src == v ? 0 : 1);
        c.direct = (w.class_of[o1] == w.class_of[o2]);
        out.push_back(c);
      }
  }
  return out;
}

}  // namespace

SelfOsculationReport check_self_osculation(const SquareComplex& x, const WallDecomposition& w) {
  SelfOsculationReport rep;
  rep.contacts = osculating_contacts(x, w, true);
  return rep;
}

InterOsculationReport check_inter_osculation(const SquareComplex& x, const WallDecomposition& w) {
  InterOsculationReport rep;
  std::set<std::pair<int, int>> crossing;
  for (const auto& sq : x.squares) {
    int h1 = w.edge_hyperplane(sq.steps[0].edge);
    int h2 = w.edge_hyperplane(sq.steps[1].edge);
    if (h1 != h2) crossing.insert({std::min(h1, h2), std::max(h1, h2)});
  }
  for (const auto& c : osculating_contacts(x, w, false))
    if (crossing.count({c.hyperplane1, c.hyperplane2})) rep.contacts.push_back(c);
  return rep;
}

VhClassification vh_classification(const SquareComplex& x) {
  // Union-find with parity over geometric edges: opposite sides of a square
  // get equal colors, consecutive sides opposite colors.
  const int n = static_cast<int>(x.edges.size());
  std::vector<int> parent(n), rel(n, 0);  // rel: parity vs parent
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  auto parity_to_root = [&](int a) {
    int p = 0;
    while (parent[a] != a) {
      p ^= rel[a];
      a = parent[a];
    }
    return p;
  };
  auto unite = [&](int a, int b, int parity) {
    int ra = find(a), rb = find(b);
    int pa = parity_to_root(a), pb = parity_to_root(b);
    if (ra == rb) return (pa ^ pb) == parity;
    parent[ra] = rb;
    rel[ra] = pa ^ pb ^ parity;
    return true;
  };

  VhClassification out;
  out.ok = true;
  for (std::size_t s = 0; s < x.squares.size(); ++s) {
    const auto& sq = x.squares[s];
    int e0 = sq.steps[0].edge, e1 = sq.steps[1].edge, e2 = sq.steps[2].edge, e3 = sq.steps[3].edge;
    if (!unite(e0, e2, 0) || !unite(e1, e3, 0) || !unite(e0, e1, 1) || !unite(e2, e3, 1)) {
      out.ok = false;
      out.certificate_square = static_cast<int>(s);
      return out;
    }
  }

  // Anchor each component deterministically: its smallest edge takes the
  // parity of its label (even label index -> color 0).
  out.edge_color.assign(n, 0);
  std::map<int, int> root_anchor;  // root -> color of root
  for (int e = 0; e < n; ++e) {
    int r = find(e);
    auto it = root_anchor.find(r);
    if (it == root_anchor.end())
      root_anchor[r] = parity_to_root(e) ^ (x.edges[e].label % 2);
  }
  for (int e = 0; e < n; ++e) out.edge_color[e] = parity_to_root(e) ^ root_anchor[find(e)];

  // Label classes, when every label is monochromatic.
  std::vector<int> label_color(x.num_labels, -1);
  out.labels_consistent = true;
  for (int e = 0; e < n; ++e) {
    int l = x.edges[e].label;
    if (label_color[l] < 0)
      label_color[l] = out.edge_color[e];
    else if (label_color[l] != out.edge_color[e])
      out.labels_consistent = false;
  }
  if (out.labels_consistent) {
    out.label_classes.assign(2, {});
    for (int l = 0; l < x.num_labels; ++l)
      if (label_color[l] >= 0) out.label_classes[label_color[l]].push_back(l);
  }
  return out;
}

SpecialnessReport specialness_report(const SquareComplex& x) {
  SpecialnessReport rep;
  rep.npc = check_npc(x);
  WallDecomposition w = compute_walls(x);
  rep.num_hyperplanes = w.num_hyperplanes;
  rep.one_sided = check_two_sided(x, w);
  rep.self_intersection = check_self_intersection(x, w);
  rep.self_osculation = check_self_osculation(x, w);
  rep.inter_osculation = check_inter_osculation(x, w);
  rep.vh = vh_classification(x);
  bool clean = rep.npc.ok() && rep.one_sided.all_two_sided() && rep.self_intersection.clean() &&
               rep.self_osculation.clean();
  if (clean && rep.inter_osculation.clean())
    rep.verdict = "SPECIAL";
  else if (clean)
    rep.verdict = "CLEAN-BUT-INTEROSCULATING";
  else
    rep.verdict = "OTHER";
  return rep;
}

}  // namespace gmk
