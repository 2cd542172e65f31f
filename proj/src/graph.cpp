#include "asdimlab/graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "asdimlab/errors.hpp"

namespace asdimlab {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Artin: return "artin";
    case GroupKind::Coxeter: return "coxeter";
    case GroupKind::GraphGroup: return "graphgroup";
  }
  return "artin";
}

std::optional<GroupKind> group_kind_from_string(std::string_view text) {
  if (text == "artin") return GroupKind::Artin;
  if (text == "coxeter") return GroupKind::Coxeter;
  if (text == "graphgroup") return GroupKind::GraphGroup;
  return std::nullopt;
}

DefiningGraph DefiningGraph::build(GroupKind kind, std::vector<VertexId> vertices, std::vector<EdgeSpec> edges) {
  if (vertices.size() > kMaxVertexCapacity) {
    throw InputError("graph has " + std::to_string(vertices.size()) + " vertices; at most " +
                     std::to_string(kMaxVertexCapacity) + " are supported");
  }
  for (const auto& v : vertices) {
    if (!is_valid_vertex_name(v.name)) throw InputError("invalid vertex name '" + v.name + "'");
  }
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw InputError("duplicate vertex '" + dup->name + "'");
  }

  DefiningGraph g;
  g.kind_ = kind;
  g.names_ = std::move(vertices);
  g.adjacency_.assign(g.names_.size(), 0);

  std::map<std::pair<std::size_t, std::size_t>, EdgeLabel> by_pair;
  for (auto& e : edges) {
    const auto ia = g.index_of(e.a.name);
    const auto ib = g.index_of(e.b.name);
    if (!ia) throw InputError("undeclared vertex '" + e.a.name + "'");
    if (!ib) throw InputError("undeclared vertex '" + e.b.name + "'");
    if (*ia == *ib) throw InputError("loop at vertex '" + e.a.name + "'");
    if (kind == GroupKind::GraphGroup) {
      if (e.label.is_coefficient()) throw InputError("graphgroup edges must be labeled by relator words");
      validate_edge_word(e.label.relator(), e.a, e.b);
    } else {
      if (!e.label.is_coefficient()) throw InputError("artin/coxeter edges must be labeled by integers");
      if (e.label.coefficient() < 2) throw InputError("label must be >= 2");
    }
    const auto key = std::minmax(*ia, *ib);
    if (!by_pair.emplace(key, std::move(e.label)).second) {
      throw InputError("duplicate edge '" + e.a.name + "' - '" + e.b.name + "'");
    }
  }
  g.edges_.reserve(by_pair.size());
  for (auto& [key, label] : by_pair) {
    g.edges_.push_back(Edge{key.first, key.second, std::move(label)});
    g.adjacency_[key.first] |= std::uint64_t{1} << key.second;
    g.adjacency_[key.second] |= std::uint64_t{1} << key.first;
  }
  return g;
}

std::optional<std::size_t> DefiningGraph::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const VertexId& v, std::string_view n) { return v.name < n; });
  if (it == names_.end() || it->name != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

const EdgeLabel* DefiningGraph::label(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<std::size_t, std::size_t>& k) {
                               return std::pair{e.u, e.v} < k;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return nullptr;
  return &it->label;
}

VertexSet DefiningGraph::vertex_set(std::span<const VertexId> names) const {
  VertexSet out;
  for (const auto& n : names) {
    const auto i = index_of(n.name);
    if (!i) throw InputError("unknown vertex '" + n.name + "'");
    out.insert(*i);
  }
  return out;
}

std::vector<VertexId> DefiningGraph::names_of(VertexSet vs) const {
  std::vector<VertexId> out;
  out.reserve(vs.size());
  vs.for_each([&](std::size_t i) { out.push_back(names_[i]); });
  return out;
}

namespace induced {

std::size_t edge_count(Adjacency adj, VertexSet within) {
  std::size_t twice = 0;
  within.for_each([&](std::size_t v) { twice += (VertexSet(adj[v]) & within).size(); });
  return twice / 2;
}

std::vector<VertexSet> connected_components(Adjacency adj, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.least());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      std::uint64_t next = 0;
      frontier.for_each([&](std::size_t v) { next |= adj[v]; });
      frontier = VertexSet(next) & within;
      frontier = frontier - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

std::size_t component_count(Adjacency adj, VertexSet within) { return connected_components(adj, within).size(); }

bool is_connected(Adjacency adj, VertexSet within) { return component_count(adj, within) <= 1; }

std::size_t betti_number(Adjacency adj, VertexSet within) {
  return edge_count(adj, within) + component_count(adj, within) - within.size();
}

bool is_complete(Adjacency adj, VertexSet within) {
  bool ok = true;
  within.for_each([&](std::size_t v) { ok = ok && (within.without(v)).subset_of(VertexSet(adj[v])); });
  return ok;
}

bool is_independent(Adjacency adj, VertexSet within) {
  bool ok = true;
  within.for_each([&](std::size_t v) { ok = ok && (VertexSet(adj[v]) & within).empty(); });
  return ok;
}

std::size_t degree(Adjacency adj, VertexSet within, std::size_t v) { return (VertexSet(adj[v]) & within).size(); }

namespace {

// Smallest-last ordering: repeatedly remove a vertex of minimum degree.
std::vector<std::size_t> degeneracy_order(Adjacency adj, VertexSet within) {
  std::vector<std::size_t> order;
  order.reserve(within.size());
  VertexSet rest = within;
  while (!rest.empty()) {
    std::size_t best = rest.least();
    std::size_t best_deg = degree(adj, rest, best);
    rest.for_each([&](std::size_t v) {
      const auto d = degree(adj, rest, v);
      if (d < best_deg) {
        best = v;
        best_deg = d;
      }
    });
    order.push_back(best);
    rest.erase(best);
  }
  return order;
}

void expand_clique(Adjacency adj, std::size_t size, VertexSet cand, std::size_t& best) {
  if (cand.empty()) {
    best = std::max(best, size);
    return;
  }
  while (!cand.empty()) {
    if (size + cand.size() <= best) return;
    const auto v = cand.least();
    expand_clique(adj, size + 1, cand & VertexSet(adj[v]), best);
    cand.erase(v);
  }
}

void collect_cliques(Adjacency adj, std::size_t target, VertexSet chosen, VertexSet cand, std::vector<VertexSet>& out) {
  if (chosen.size() == target) {
    out.push_back(chosen);
    return;
  }
  while (!cand.empty()) {
    if (chosen.size() + cand.size() < target) return;
    const auto v = cand.least();
    cand.erase(v);
    collect_cliques(adj, target, chosen.with(v), cand & VertexSet(adj[v]), out);
  }
}

std::size_t dsatur_greedy(Adjacency adj, VertexSet within) {
  const auto n = adj.size();
  std::vector<int> color(n, -1);
  std::size_t used = 0;
  VertexSet rest = within;
  while (!rest.empty()) {
    std::size_t pick = rest.least();
    std::size_t pick_sat = 0;
    std::size_t pick_deg = 0;
    bool first = true;
    rest.for_each([&](std::size_t v) {
      std::uint64_t seen = 0;
      (VertexSet(adj[v]) & within).for_each([&](std::size_t w) {
        if (color[w] >= 0) seen |= std::uint64_t{1} << color[w];
      });
      const auto sat = static_cast<std::size_t>(std::popcount(seen));
      const auto deg = degree(adj, rest, v);
      if (first || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        first = false;
      }
    });
    std::uint64_t seen = 0;
    (VertexSet(adj[pick]) & within).for_each([&](std::size_t w) {
      if (color[w] >= 0) seen |= std::uint64_t{1} << color[w];
    });
    const auto c = static_cast<std::size_t>(std::countr_one(seen));
    color[pick] = static_cast<int>(c);
    used = std::max(used, c + 1);
    rest.erase(pick);
  }
  return used;
}

// Exact colouring search; vertices coloured in a fixed order, new colours
// opened only below the current best.
struct ColoringSearch {
  Adjacency adj;
  std::vector<std::size_t> order;
  std::vector<int> color;
  std::size_t best;

  void run(std::size_t pos, std::size_t used) {
    if (used >= best) return;
    if (pos == order.size()) {
      best = used;
      return;
    }
    const auto v = order[pos];
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < pos; ++i) {
      if ((adj[v] >> order[i]) & 1U) seen |= std::uint64_t{1} << color[order[i]];
    }
    for (std::size_t c = 0; c <= used; ++c) {
      if ((seen >> c) & 1U) continue;
      color[v] = static_cast<int>(c);
      run(pos + 1, std::max(used, c + 1));
    }
    color[v] = -1;
  }
};

}  // namespace

std::size_t clique_number(Adjacency adj, VertexSet within) {
  std::size_t best = 0;
  const auto order = degeneracy_order(adj, within);
  // Search each vertex together with its neighbours later in the order, latest first
  // so that small candidate sets establish a bound early.
  VertexSet later;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = *it;
    expand_clique(adj, 1, later & VertexSet(adj[v]), best);
    later.insert(v);
  }
  return best;
}

std::vector<VertexSet> maximum_cliques(Adjacency adj, VertexSet within) {
  std::vector<VertexSet> out;
  const auto target = clique_number(adj, within);
  if (target == 0) return out;
  collect_cliques(adj, target, VertexSet{}, within, out);
  return out;
}

std::size_t chromatic_number_upper(Adjacency adj, VertexSet within) {
  if (within.empty()) return 0;
  const auto lower = clique_number(adj, within);
  const auto greedy = dsatur_greedy(adj, within);
  if (within.size() > kExactChromaticLimit || greedy == lower) return std::max(greedy, lower);
  ColoringSearch search{adj, {}, std::vector<int>(adj.size(), -1), greedy};
  // Highest degree first.
  search.order = within.indices();
  std::stable_sort(search.order.begin(), search.order.end(), [&](std::size_t a, std::size_t b) {
    return degree(adj, within, a) > degree(adj, within, b);
  });
  search.run(0, 0);
  return std::max(search.best, lower);
}

std::optional<std::size_t> find_cycle_vertex(Adjacency adj, VertexSet within) {
  std::vector<bool> visited(adj.size(), false);
  std::optional<std::pair<std::size_t, std::size_t>> back_edge;

  auto dfs = [&](auto&& self, std::size_t u, std::optional<std::size_t> parent) -> void {
    visited[u] = true;
    (VertexSet(adj[u]) & within).for_each([&](std::size_t w) {
      if (back_edge || (parent && w == *parent)) return;
      if (visited[w]) {
        back_edge = std::pair{u, w};
        return;
      }
      self(self, w, u);
    });
  };

  within.for_each([&](std::size_t root) {
    if (!back_edge && !visited[root]) dfs(dfs, root, std::nullopt);
  });
  if (!back_edge) return std::nullopt;
  auto [a, b] = *back_edge;
  if (a > b) std::swap(a, b);
  return degree(adj, within, b) > degree(adj, within, a) ? b : a;
}

}  // namespace induced

DefiningGraph full_subgraph(const DefiningGraph& g, VertexSet vs) {
  if (!vs.subset_of(g.all())) throw InputError("vertex set is not contained in the graph");
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    if (vs.contains(e.u) && vs.contains(e.v)) edges.push_back(EdgeSpec{g.vertex(e.u), g.vertex(e.v), e.label});
  }
  return DefiningGraph::build(g.kind(), g.names_of(vs), std::move(edges));
}

std::vector<VertexSet> connected_components(const DefiningGraph& g) {
  return induced::connected_components(g.adjacency(), g.all());
}

std::size_t betti_number(const DefiningGraph& g) { return induced::betti_number(g.adjacency(), g.all()); }

std::size_t clique_number(const DefiningGraph& g) { return induced::clique_number(g.adjacency(), g.all()); }

std::vector<VertexSet> maximal_cliques_of_max_size(const DefiningGraph& g) {
  if (g.vertex_count() == 0) throw InputError("maximum cliques of the empty graph are undefined");
  return induced::maximum_cliques(g.adjacency(), g.all());
}

VertexSet neighbors(const DefiningGraph& g, const VertexId& v) {
  const auto i = g.index_of(v.name);
  if (!i) throw InputError("unknown vertex '" + v.name + "'");
  return VertexSet(g.adjacency(*i));
}

bool is_independent(const DefiningGraph& g, VertexSet vs) {
  if (!vs.subset_of(g.all())) throw InputError("vertex set is not contained in the graph");
  return induced::is_independent(g.adjacency(), vs);
}

VertexId find_cycle_vertex(const DefiningGraph& g) {
  const auto v = induced::find_cycle_vertex(g.adjacency(), g.all());
  if (!v) throw PreconditionError("find_cycle_vertex: graph is a forest");
  return g.vertex(*v);
}

std::size_t chromatic_number_upper(const DefiningGraph& g) {
  return induced::chromatic_number_upper(g.adjacency(), g.all());
}

GraphStats graph_stats(const DefiningGraph& g) {
  const auto adj = g.adjacency();
  const auto all = g.all();
  return GraphStats{
      induced::clique_number(adj, all),
      induced::betti_number(adj, all),
      induced::component_count(adj, all),
      induced::chromatic_number_upper(adj, all),
  };
}

}  // namespace asdimlab
