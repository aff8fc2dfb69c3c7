#include "gmk/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace gmk {

void validate_complex(const SquareComplex& x) {
  for (const auto& e : x.edges) {
    if (e.src < 0 || e.src >= x.num_vertices || e.dst < 0 || e.dst >= x.num_vertices ||
        e.label < 0 || e.label >= x.num_labels)
      throw std::invalid_argument("edge out of range");
  }
  for (const auto& sq : x.squares) {
    for (int i = 0; i < 4; ++i) {
      const auto& s = sq.steps[i];
      const auto& t = sq.steps[(i + 1) % 4];
      if (s.edge < 0 || s.edge >= static_cast<int>(x.edges.size()))
        throw std::invalid_argument("square step edge out of range");
      if (x.step_dst(s) != x.step_src(t)) throw std::invalid_argument("square path not composable");
      if (s.edge == t.edge && s.forward != t.forward)
        throw std::invalid_argument("degenerate square (immediate backtrack)");
    }
  }
}

SquareComplex presentation_complex(const Presentation& pres) {
  SquareComplex x;
  x.num_vertices = 1;
  x.num_labels = static_cast<int>(pres.generators.size());
  for (int i = 0; i < x.num_labels; ++i) x.edges.push_back({0, 0, i});
  int r = 0;
  for (const Word& rel : pres.relators) {
    if (rel.length() != 4) throw std::invalid_argument("relator length must be 4");
    SquareComplex::Square sq;
    for (int i = 0; i < 4; ++i) sq.steps[i] = {rel.syms[i].index, rel.syms[i].sign > 0};
    sq.label = r++;
    x.squares.push_back(sq);
  }
  validate_complex(x);
  return x;
}

namespace {

// The end of `s` arriving at its target vertex.
LinkGraph::Node arrive_node(const SquareComplex::Step& s) { return {s.edge, s.forward}; }
// The end of `s` leaving its source vertex.
LinkGraph::Node depart_node(const SquareComplex::Step& s) { return {s.edge, !s.forward}; }

struct LinkBuilder {
  std::map<std::pair<int, bool>, int> ids;
  LinkGraph g;

  int node(LinkGraph::Node n) {
    auto [it, fresh] = ids.try_emplace({n.edge, n.head}, static_cast<int>(g.nodes.size()));
    if (fresh) g.nodes.push_back(n);
    return it->second;
  }
};

std::vector<LinkGraph> build_all_links(const SquareComplex& x) {
  std::vector<LinkBuilder> b(x.num_vertices);
  for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
    b[x.edges[e].src].node({e, false});
    b[x.edges[e].dst].node({e, true});
  }
  for (const auto& sq : x.squares) {
    for (int i = 0; i < 4; ++i) {
      const auto& s = sq.steps[i];
      const auto& t = sq.steps[(i + 1) % 4];
      int v = x.step_dst(s);
      auto& lb = b[v];
      lb.g.arcs.emplace_back(lb.node(arrive_node(s)), lb.node(depart_node(t)));
    }
  }
  std::vector<LinkGraph> out;
  out.reserve(x.num_vertices);
  for (auto& lb : b) out.push_back(std::move(lb.g));
  return out;
}

}  // namespace

LinkGraph vertex_link(const SquareComplex& x, int v) {
  if (v < 0 || v >= x.num_vertices) throw std::out_of_range("vertex");
  LinkBuilder lb;
  for (int e = 0; e < static_cast<int>(x.edges.size()); ++e) {
    if (x.edges[e].src == v) lb.node({e, false});
    if (x.edges[e].dst == v) lb.node({e, true});
  }
  for (const auto& sq : x.squares) {
    for (int i = 0; i < 4; ++i) {
      const auto& s = sq.steps[i];
      const auto& t = sq.steps[(i + 1) % 4];
      if (x.step_dst(s) != v) continue;
      lb.g.arcs.emplace_back(lb.node(arrive_node(s)), lb.node(depart_node(t)));
    }
  }
  return lb.g;
}

namespace {

void check_link_npc(const LinkGraph& g, int v, NpcReport& rep) {
  std::set<std::pair<int, int>> seen;
  std::vector<std::set<int>> adj(g.nodes.size());
  for (auto [a, b] : g.arcs) {
    if (a == b) {
      rep.simplicial = false;
      rep.violations.push_back("loop arc in link of vertex " + std::to_string(v));
      continue;
    }
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) {
      rep.simplicial = false;
      rep.violations.push_back("double arc in link of vertex " + std::to_string(v));
    }
    adj[a].insert(b);
    adj[b].insert(a);
  }
  for (auto [a, b] : seen) {
    for (int c : adj[a])
      if (c != b && adj[b].count(c)) {
        rep.girth_at_least_4 = false;
        rep.violations.push_back("triangle in link of vertex " + std::to_string(v));
        return;
      }
  }
}

bool is_tree(const LinkGraph& g) {
  if (g.nodes.empty()) return false;
  if (g.arcs.size() != g.nodes.size() - 1) return false;
  std::vector<std::vector<int>> adj(g.nodes.size());
  for (auto [a, b] : g.arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == g.nodes.size();
}

}  // namespace

NpcReport check_npc(const SquareComplex& x) {
  NpcReport rep;
  auto links = build_all_links(x);
  for (int v = 0; v < x.num_vertices; ++v) check_link_npc(links[v], v, rep);
  return rep;
}

MorseLinks morse_links(const SquareComplex& x, int v) {
  LinkGraph full = vertex_link(x, v);
  MorseLinks out;
  LinkBuilder asc, desc;
  for (const auto& n : full.nodes) {
    if (n.head)
      desc.node(n);
    else
      asc.node(n);
  }
  for (auto [a, b] : full.arcs) {
    const auto& na = full.nodes[a];
    const auto& nb = full.nodes[b];
    if (!na.head && !nb.head) asc.g.arcs.emplace_back(asc.node(na), asc.node(nb));
    if (na.head && nb.head) desc.g.arcs.emplace_back(desc.node(na), desc.node(nb));
  }
  out.ascending = std::move(asc.g);
  out.descending = std::move(desc.g);
  out.ascending_tree = is_tree(out.ascending);
  out.descending_tree = is_tree(out.descending);
  return out;
}

Cover cover_from_action(const Presentation& pres, const CoordinateAction& act) {
  const int L = static_cast<int>(pres.generators.size());
  if (L != act.num_coords) throw std::invalid_argument("presentation rank != action alphabet");
  Cover c;
  SquareComplex& x = c.complex;
  x.num_vertices = static_cast<int>(act.num_points);
  x.num_labels = L;
  x.edges.reserve(static_cast<std::size_t>(x.num_vertices) * L);
  for (std::uint32_t p = 0; p < act.num_points; ++p) {
    x.vertex_names.push_back(point_label(act, p));
    for (int l = 0; l < L; ++l)
      x.edges.push_back({static_cast<int>(p), static_cast<int>(act.tables[l][p]), l});
  }
  for (std::uint32_t p = 0; p < act.num_points; ++p) {
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
      SquareComplex::Square sq;
      sq.label = static_cast<int>(r);
      std::uint32_t cur = p;
      const Word& rel = pres.relators[r];
      for (int i = 0; i < 4; ++i) {
        int l = rel.syms[i].index;
        std::uint32_t nxt = act.tables[l][cur];
        if (rel.syms[i].sign > 0)
          sq.steps[i] = {static_cast<int>(cur) * L + l, true};
        else
          sq.steps[i] = {static_cast<int>(nxt) * L + l, false};
        cur = nxt;
      }
      if (cur != p) throw std::invalid_argument("relator does not close up; action invalid");
      x.squares.push_back(sq);
    }
  }
  validate_complex(x);
  c.to_base.vertex_map.assign(x.num_vertices, 0);
  for (const auto& e : x.edges) c.to_base.edge_map.push_back(e.label);
  for (const auto& sq : x.squares) c.to_base.square_map.push_back(sq.label);
  return c;
}

CellMap identity_cell_map(const SquareComplex& x) {
  CellMap m;
  for (int v = 0; v < x.num_vertices; ++v) m.vertex_map.push_back(v);
  for (std::size_t e = 0; e < x.edges.size(); ++e) m.edge_map.push_back(static_cast<int>(e));
  for (std::size_t s = 0; s < x.squares.size(); ++s) m.square_map.push_back(static_cast<int>(s));
  return m;
}

CoveringReport verify_covering(const SquareComplex& cover, const SquareComplex& base,
                               const CellMap& map) {
  CoveringReport rep;
  if (map.vertex_map.size() != static_cast<std::size_t>(cover.num_vertices) ||
      map.edge_map.size() != cover.edges.size() || map.square_map.size() != cover.squares.size()) {
    rep.failures.push_back("cell map has wrong sizes");
    return rep;
  }

  rep.incidence_ok = true;
  for (std::size_t e = 0; e < cover.edges.size(); ++e) {
    const auto& ce = cover.edges[e];
    const auto& be = base.edges[map.edge_map[e]];
    if (map.vertex_map[ce.src] != be.src || map.vertex_map[ce.dst] != be.dst ||
        ce.label != be.label) {
      rep.incidence_ok = false;
      rep.failures.push_back("edge " + std::to_string(e) + " does not commute with incidence");
      break;
    }
  }
  for (std::size_t s = 0; s < cover.squares.size() && rep.incidence_ok; ++s) {
    const auto& cs = cover.squares[s];
    const auto& bs = base.squares[map.square_map[s]];
    for (int i = 0; i < 4; ++i)
      if (map.edge_map[cs.steps[i].edge] != bs.steps[i].edge ||
          cs.steps[i].forward != bs.steps[i].forward) {
        rep.incidence_ok = false;
        rep.failures.push_back("square " + std::to_string(s) + " does not map onto its base square");
        break;
      }
  }

  // Fibers and degree.
  std::vector<int> fiber_size(base.num_vertices, 0);
  for (int v = 0; v < cover.num_vertices; ++v) ++fiber_size[map.vertex_map[v]];
  rep.degree = fiber_size.empty() ? 0 : fiber_size[0];
  for (int f : fiber_size)
    if (f != rep.degree) {
      rep.failures.push_back("vertex fibers have unequal sizes");
      rep.degree = 0;
    }

  // Label regularity: the out-edges (and in-edges) at each cover vertex map
  // bijectively onto the out-edges (in-edges) of the base vertex.
  std::vector<std::vector<int>> base_out(base.num_vertices), base_in(base.num_vertices);
  for (std::size_t e = 0; e < base.edges.size(); ++e) {
    base_out[base.edges[e].src].push_back(static_cast<int>(e));
    base_in[base.edges[e].dst].push_back(static_cast<int>(e));
  }
  std::vector<std::vector<int>> cov_out(cover.num_vertices), cov_in(cover.num_vertices);
  for (std::size_t e = 0; e < cover.edges.size(); ++e) {
    cov_out[cover.edges[e].src].push_back(map.edge_map[e]);
    cov_in[cover.edges[e].dst].push_back(map.edge_map[e]);
  }
  rep.label_regular = true;
  for (int v = 0; v < cover.num_vertices && rep.label_regular; ++v) {
    auto check = [&](std::vector<int> got, std::vector<int> want) {
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (want.end() != std::unique(want.begin(), want.end()))
        return false;  // base must not have repeated edges in a star for unique lifting
      return got == want;
    };
    if (!check(cov_out[v], base_out[map.vertex_map[v]]) ||
        !check(cov_in[v], base_in[map.vertex_map[v]])) {
      rep.label_regular = false;
      rep.failures.push_back("edge star at cover vertex " + std::to_string(v) +
                             " is not a bijective lift");
    }
  }

  // Square lifting: every base square lifts exactly once per fiber point.
  rep.squares_lift = true;
  std::vector<std::vector<int>> lifts(base.squares.size());
  for (std::size_t s = 0; s < cover.squares.size(); ++s)
    lifts[map.square_map[s]].push_back(cover.step_src(cover.squares[s].steps[0]));
  for (std::size_t b = 0; b < base.squares.size(); ++b) {
    std::sort(lifts[b].begin(), lifts[b].end());
    bool distinct = std::adjacent_find(lifts[b].begin(), lifts[b].end()) == lifts[b].end();
    if (static_cast<int>(lifts[b].size()) != rep.degree || !distinct) {
      rep.squares_lift = false;
      rep.failures.push_back("base square " + std::to_string(b) +
                             " does not lift once per fiber point");
    }
  }

  // Link isomorphism at every vertex.
  auto cover_links = build_all_links(cover);
  auto base_links = build_all_links(base);
  rep.links_isomorphic = true;
  for (int v = 0; v < cover.num_vertices && rep.links_isomorphic; ++v) {
    const LinkGraph& cl = cover_links[v];
    const LinkGraph& bl = base_links[map.vertex_map[v]];
    std::map<std::pair<int, bool>, int> base_ids;
    for (std::size_t i = 0; i < bl.nodes.size(); ++i)
      base_ids[{bl.nodes[i].edge, bl.nodes[i].head}] = static_cast<int>(i);
    // Node bijection under (edge_map, end).
    std::vector<int> to_base(cl.nodes.size(), -1);
    std::vector<char> hit(bl.nodes.size(), 0);
    bool good = cl.nodes.size() == bl.nodes.size();
    for (std::size_t i = 0; i < cl.nodes.size() && good; ++i) {
      auto it = base_ids.find({map.edge_map[cl.nodes[i].edge], cl.nodes[i].head});
      if (it == base_ids.end() || hit[it->second])
        good = false;
      else {
        to_base[i] = it->second;
        hit[it->second] = 1;
      }
    }
    // Arc multisets must agree.
    if (good) {
      auto norm = [](std::vector<std::pair<int, int>> arcs) {
        for (auto& a : arcs)
          if (a.first > a.second) std::swap(a.first, a.second);
        std::sort(arcs.begin(), arcs.end());
        return arcs;
      };
      std::vector<std::pair<int, int>> mapped;
      for (auto [a, b] : cl.arcs) mapped.emplace_back(to_base[a], to_base[b]);
      good = norm(std::move(mapped)) == norm(bl.arcs);
    }
    if (!good) {
      rep.links_isomorphic = false;
      rep.failures.push_back("link at cover vertex " + std::to_string(v) +
                             " is not isomorphic to the base link");
    }
  }
  return rep;
}

TorusEmbeddingReport torus_embedding(const SquareComplex& cover, int m) {
  TorusEmbeddingReport rep;
  const int dim = 2 * m + 1;
  rep.injective_vertices = true;  // the vertex map is the identity on bit points

  rep.edges_flip_one_coordinate = true;
  std::vector<int> flip_pos(cover.edges.size(), -1);
  std::set<std::uint64_t> edge_cells;
  for (std::size_t e = 0; e < cover.edges.size(); ++e) {
    std::uint32_t d = static_cast<std::uint32_t>(cover.edges[e].src) ^
                      static_cast<std::uint32_t>(cover.edges[e].dst);
    if (d == 0 || (d & (d - 1)) != 0) {
      rep.edges_flip_one_coordinate = false;
      rep.failures.push_back("edge " + std::to_string(e) + " does not flip exactly one coordinate");
      continue;
    }
    int pos = std::countr_zero(d);
    flip_pos[e] = pos;
    std::uint32_t alpha = (static_cast<std::uint32_t>(cover.edges[e].src) >> pos) & 1u;
    std::uint64_t rest = static_cast<std::uint32_t>(cover.edges[e].src) & ~d;
    edge_cells.insert((static_cast<std::uint64_t>(pos) << 40) |
                      (static_cast<std::uint64_t>(alpha) << 32) | rest);
  }
  rep.injective_edges =
      rep.edges_flip_one_coordinate && edge_cells.size() == cover.edges.size();
  if (!rep.injective_edges) rep.failures.push_back("edge images collide in the torus");

  rep.per_vertex_distinct_positions = true;
  std::vector<std::set<int>> at_vertex(cover.num_vertices);
  for (std::size_t e = 0; e < cover.edges.size(); ++e) {
    if (flip_pos[e] < 0) continue;
    if (!at_vertex[cover.edges[e].src].insert(flip_pos[e]).second) {
      rep.per_vertex_distinct_positions = false;
      rep.failures.push_back("two generators flip coordinate " + std::to_string(flip_pos[e] + 1) +
                             " at vertex " + std::to_string(cover.edges[e].src));
    }
  }

  rep.squares_axis_aligned = true;
  std::set<std::vector<std::uint32_t>> square_cells;
  for (std::size_t s = 0; s < cover.squares.size(); ++s) {
    const auto& sq = cover.squares[s];
    int p = flip_pos[sq.steps[0].edge], p2 = flip_pos[sq.steps[2].edge];
    int q = flip_pos[sq.steps[1].edge], q2 = flip_pos[sq.steps[3].edge];
    auto alpha_of = [&](int step) {
      const auto& e = cover.edges[sq.steps[step].edge];
      return (static_cast<std::uint32_t>(e.src) >> flip_pos[sq.steps[step].edge]) & 1u;
    };
    if (p != p2 || q != q2 || p == q || p < 0 || q < 0 || alpha_of(0) != alpha_of(2) ||
        alpha_of(1) != alpha_of(3)) {
      rep.squares_axis_aligned = false;
      rep.failures.push_back("square " + std::to_string(s) +
                             " is not aligned with a torus 2-cell");
      continue;
    }
    std::uint32_t base = static_cast<std::uint32_t>(cover.step_src(sq.steps[0]));
    std::uint32_t rest = base & ~((1u << p) | (1u << q));
    std::uint32_t plo = static_cast<std::uint32_t>(std::min(p, q));
    std::uint32_t phi = static_cast<std::uint32_t>(std::max(p, q));
    std::uint32_t alo = plo == static_cast<std::uint32_t>(p) ? alpha_of(0) : alpha_of(1);
    std::uint32_t ahi = plo == static_cast<std::uint32_t>(p) ? alpha_of(1) : alpha_of(0);
    square_cells.insert({plo, phi, alo, ahi, rest});
  }
  rep.injective_squares =
      rep.squares_axis_aligned && square_cells.size() == cover.squares.size();
  if (!rep.injective_squares) rep.failures.push_back("square images collide in the torus");
  (void)dim;
  return rep;
}

SquareComplex delete_generator(const SquareComplex& x, int label) {
  if (label < 0 || label >= x.num_labels) throw std::invalid_argument("unknown label");
  std::vector<char> edge_kept(x.edges.size(), 0);
  for (std::size_t e = 0; e < x.edges.size(); ++e) edge_kept[e] = x.edges[e].label != label;

  // Component of vertex 0 in the remaining 1-skeleton.
  std::vector<char> vkeep(x.num_vertices, 0);
  std::vector<std::vector<int>> adj(x.num_vertices);
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    if (!edge_kept[e]) continue;
    adj[x.edges[e].src].push_back(x.edges[e].dst);
    adj[x.edges[e].dst].push_back(x.edges[e].src);
  }
  std::vector<int> stack{0};
  vkeep[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!vkeep[w]) {
        vkeep[w] = 1;
        stack.push_back(w);
      }
  }

  SquareComplex out;
  std::vector<int> vmap(x.num_vertices, -1), emap(x.edges.size(), -1);
  for (int v = 0; v < x.num_vertices; ++v)
    if (vkeep[v]) {
      vmap[v] = out.num_vertices++;
      if (!x.vertex_names.empty()) out.vertex_names.push_back(x.vertex_names[v]);
    }
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    if (!edge_kept[e] || !vkeep[x.edges[e].src] || !vkeep[x.edges[e].dst]) continue;
    emap[e] = static_cast<int>(out.edges.size());
    out.edges.push_back({vmap[x.edges[e].src], vmap[x.edges[e].dst], x.edges[e].label});
  }
  for (const auto& sq : x.squares) {
    bool keep = true;
    for (const auto& st : sq.steps)
      if (emap[st.edge] < 0) keep = false;
    if (!keep) continue;
    SquareComplex::Square ns = sq;
    for (auto& st : ns.steps) st.edge = emap[st.edge];
    out.squares.push_back(ns);
  }
  out.num_labels = 0;
  for (const auto& e : out.edges) out.num_labels = std::max(out.num_labels, e.label + 1);
  validate_complex(out);
  return out;
}

}  // namespace gmk
