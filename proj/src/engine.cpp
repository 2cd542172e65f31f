#include "asdimlab/engine.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "asdimlab/errors.hpp"
#include "asdimlab/graph_io.hpp"

namespace asdimlab {

namespace {

bool all_labels(const DefiningGraph& g, VertexSet within, auto&& pred) {
  for (const auto& e : g.edges()) {
    if (within.contains(e.u) && within.contains(e.v) && !pred(e.label)) return false;
  }
  return true;
}

// Vertices joined by an edge labeled 2, as adjacency masks.
std::vector<std::uint64_t> right_angled_adjacency(const DefiningGraph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    if (e.label.is_coefficient() && e.label.coefficient() == 2) {
      adj[e.u] |= std::uint64_t{1} << e.v;
      adj[e.v] |= std::uint64_t{1} << e.u;
    }
  }
  return adj;
}

void ensure_valid_split(const DefiningGraph& g, VertexSet within, const Split& s) {
  const auto adj = g.adjacency();
  ASDIMLAB_ENSURE((s.left | s.right) == within, "split does not cover the graph");
  ASDIMLAB_ENSURE((s.left & s.right) == s.separator, "split sides do not meet in the separator");
  ASDIMLAB_ENSURE(s.separator != s.left && s.separator != s.right, "separator is not a proper subset of both sides");
  const auto only_left = s.left - s.separator;
  const auto only_right = s.right - s.separator;
  only_left.for_each([&](std::size_t v) {
    ASDIMLAB_ENSURE((VertexSet(adj[v]) & only_right).empty(), "edge crosses the amalgam split");
  });
}

}  // namespace

std::size_t lower_bound(const DefiningGraph& g, VertexSet within) {
  if (g.kind() != GroupKind::Artin || within.empty()) return 0;
  std::size_t lower = 1;
  if (induced::edge_count(g.adjacency(), within) > 0) lower = 2;
  const auto ra = right_angled_adjacency(g);
  return std::max(lower, induced::clique_number(ra, within));
}

std::size_t lower_bound(const DefiningGraph& g) { return lower_bound(g, g.all()); }

std::vector<std::pair<RuleId, Bound>> leaf_bound(const DefiningGraph& g, VertexSet within, Mode mode) {
  std::vector<std::pair<RuleId, Bound>> out;
  auto add = [&](RuleId r, std::size_t lo, ExtBound up, bool cond = false) {
    out.emplace_back(r, Bound::make(lo, up, cond));
  };
  if (within.empty()) {
    add(RuleId::LeafEmpty, 0, 0);
    return out;
  }
  const auto adj = g.adjacency();
  if (!induced::is_connected(adj, within)) throw PreconditionError("leaf_bound: graph is not connected");

  const auto n = within.size();
  const auto edges = induced::edge_count(adj, within);
  const bool forest = induced::betti_number(adj, within) == 0;
  const bool complete = induced::is_complete(adj, within);
  const auto sim = induced::clique_number(adj, within);

  switch (g.kind()) {
    case GroupKind::Artin: {
      const bool right_angled = all_labels(g, within, [](const EdgeLabel& l) { return l.coefficient() == 2; });
      const bool large = all_labels(g, within, [](const EdgeLabel& l) { return l.coefficient() >= 3; });
      if (n == 1) add(RuleId::LeafFreeArtin, 1, 1);
      if (forest && edges >= 1) add(RuleId::LeafArtinForest, 2, 2);
      if (large && sim == 3) add(RuleId::LeafLargeTypeSim3, 2, 2);
      if (right_angled) add(RuleId::LeafRAAG, sim, sim);
      if (complete && mode == Mode::Conditional) add(RuleId::LeafCompleteArtinConjectural, 0, sim, true);
      break;
    }
    case GroupKind::Coxeter:
      if (n == 1) add(RuleId::LeafCoxeterVertex, 0, 0);
      if (n == 2 && edges == 1) add(RuleId::LeafCoxeterEdge, 0, 0);
      if (forest) add(RuleId::LeafCoxeterForest, 0, 1);
      if (complete) add(RuleId::LeafCompleteCoxeter, 0, n);
      break;
    case GroupKind::GraphGroup:
      if (forest) add(RuleId::LeafGraphGroupForest, 0, 2);
      break;
  }
  return out;
}

std::vector<std::pair<RuleId, Bound>> leaf_bound(const DefiningGraph& g, Mode mode) {
  return leaf_bound(g, g.all(), mode);
}

Split select_cycle_split(const DefiningGraph& g, VertexSet within) {
  const auto adj = g.adjacency();
  if (!induced::is_connected(adj, within) || within.empty()) throw PreconditionError("cycle split: graph is not connected");
  if (induced::clique_number(adj, within) != 2) throw PreconditionError("cycle split: Sim must be 2");
  const auto v1 = induced::find_cycle_vertex(adj, within);
  if (!v1) throw PreconditionError("cycle split: graph is a forest");

  const auto nbrs = VertexSet(adj[*v1]) & within;
  Split s;
  s.rule = RuleId::AmalgamCycle;
  s.v1 = *v1;
  s.left = within.without(*v1);
  s.right = nbrs.with(*v1);
  s.separator = nbrs;
  ASDIMLAB_ENSURE(induced::is_independent(adj, s.separator), "cycle split separator is not independent");
  ASDIMLAB_ENSURE(induced::betti_number(adj, s.right) == 0 && induced::is_connected(adj, s.right),
                  "cycle split right side is not a star");
  ensure_valid_split(g, within, s);
  return s;
}

Split select_cycle_split(const DefiningGraph& g) { return select_cycle_split(g, g.all()); }

Split select_clique_split(const DefiningGraph& g, VertexSet within) {
  const auto adj = g.adjacency();
  if (within.empty() || !induced::is_connected(adj, within)) throw PreconditionError("clique split: graph is not connected");
  const auto sim = induced::clique_number(adj, within);
  if (sim < 3) throw PreconditionError("clique split: Sim must be at least 3");
  if (induced::is_complete(adj, within)) throw PreconditionError("clique split: graph is complete");

  const auto cliques = induced::maximum_cliques(adj, within);
  ASDIMLAB_ENSURE(!cliques.empty(), "no maximum clique");
  Split s;

  if (cliques.size() == 1) {
    const auto clique = cliques.front();
    const auto outside = within - clique;
    bool found = false;
    clique.for_each([&](std::size_t v) {
      if (found) return;
      const auto candidates = outside - VertexSet(adj[v]);
      if (!candidates.empty()) {
        s.v1 = v;
        s.x = candidates.least();
        found = true;
      }
    });
    ASDIMLAB_ENSURE(found, "unique maximum clique has no vertex with a non-neighbour outside it");
    s.rule = RuleId::AmalgamUniqueClique;
    s.left = within.without(s.v1);
    s.right = within.without(*s.x);
    s.separator = s.left & s.right;
    ASDIMLAB_ENSURE(induced::clique_number(adj, s.left) < sim, "Sim(left) did not drop");
    ASDIMLAB_ENSURE(induced::clique_number(adj, s.right) == sim, "Sim(right) changed");
  } else {
    bool found = false;
    for (std::size_t i = 0; i < cliques.size() && !found; ++i) {
      for (std::size_t j = 0; j < cliques.size() && !found; ++j) {
        if (i == j) continue;
        const auto only_i = cliques[i] - cliques[j];
        const auto only_j = cliques[j] - cliques[i];
        only_i.for_each([&](std::size_t v) {
          if (!found && !(only_j - VertexSet(adj[v])).empty()) {
            s.v1 = v;
            found = true;
          }
        });
      }
    }
    ASDIMLAB_ENSURE(found, "no two maximum cliques with non-adjacent private vertices");
    for (const auto& c : cliques) {
      if (c.contains(s.v1)) continue;
      const auto avoid = c - VertexSet(adj[s.v1]);
      ASDIMLAB_ENSURE(!avoid.empty(), "maximum clique fully adjacent to v1");
      s.chosen.insert(avoid.least());
    }
    s.rule = RuleId::AmalgamMultiClique;
    s.left = within.without(s.v1);
    s.right = within - s.chosen;
    s.separator = s.left & s.right;
    ASDIMLAB_ENSURE(induced::clique_number(adj, s.left) == sim, "Sim(left) changed");
    ASDIMLAB_ENSURE(induced::clique_number(adj, s.right) == sim, "Sim(right) changed");
  }
  ASDIMLAB_ENSURE(induced::clique_number(adj, s.separator) < sim, "Sim(separator) did not drop");
  ensure_valid_split(g, within, s);
  return s;
}

Split select_clique_split(const DefiningGraph& g) { return select_clique_split(g, g.all()); }

namespace {

struct Node {
  RuleId rule = RuleId::Unresolved;
  VertexSet vertices;
  Bound bound;
  std::optional<Split> split;
  std::vector<std::shared_ptr<const Node>> children;
};

using NodePtr = std::shared_ptr<const Node>;

class Solver {
 public:
  Solver(const DefiningGraph& g, Mode mode, EngineOptions options) : g_(g), mode_(mode), options_(options) {}

  NodePtr solve(VertexSet within) {
    if (options_.memoize) {
      if (auto it = memo_.find(within.bits()); it != memo_.end()) return it->second;
    }
    auto node = derive(within);
    if (options_.memoize) memo_.emplace(within.bits(), node);
    return node;
  }

 private:
  NodePtr derive(VertexSet within) {
    const auto adj = g_.adjacency();
    auto node = std::make_shared<Node>();
    node->vertices = within;
    const auto floor = lower_bound(g_, within);

    if (within.empty()) {
      node->rule = RuleId::LeafEmpty;
      node->bound = Bound::make(0, 0, false);
      return node;
    }

    const auto comps = induced::connected_components(adj, within);
    if (comps.size() > 1) {
      std::vector<Bound> child_bounds;
      for (const auto& c : comps) {
        node->children.push_back(solve(c));
        child_bounds.push_back(node->children.back()->bound);
      }
      const auto b = combine_free_product(child_bounds);
      node->rule = RuleId::FreeProduct;
      node->bound = Bound::make(std::max(b.lower, floor), b.upper, b.conditional);
      return node;
    }

    // Best leaf: smallest upper bound, earliest rule on ties.
    std::optional<std::pair<RuleId, Bound>> best;
    for (const auto& cand : leaf_bound(g_, within, mode_)) {
      if (!best || cand.second.upper.less_than(best->second.upper)) best = cand;
    }
    if (best) {
      node->rule = best->first;
      node->bound = Bound::make(std::max(best->second.lower, floor), best->second.upper, best->second.conditional);
      if (node->bound.exact) return node;
    }

    if (auto split = decomposition(within)) {
      auto left = solve(split->left);
      auto right = solve(split->right);
      auto sep = solve(split->separator);
      ensure_decreasing(within, *split);
      const auto b = combine_amalgam(left->bound, right->bound, sep->bound);
      if (!best || b.upper.less_than(node->bound.upper)) {
        node->rule = split->rule;
        node->split = *split;
        node->children = {left, right, sep};
        node->bound = Bound::make(std::max(b.lower, floor), b.upper, b.conditional);
      }
    }
    if (node->rule == RuleId::Unresolved) node->bound = Bound::make(floor, ExtBound::unknown(), false);
    ASDIMLAB_ENSURE(ExtBound(node->bound.lower).at_most(node->bound.upper), "lower bound exceeds upper bound");
    return node;
  }

  std::optional<Split> decomposition(VertexSet within) {
    if (g_.kind() == GroupKind::GraphGroup) return std::nullopt;
    const auto adj = g_.adjacency();
    const auto sim = induced::clique_number(adj, within);
    if (sim == 2 && induced::betti_number(adj, within) >= 1) return select_cycle_split(g_, within);
    if (sim >= 3 && !induced::is_complete(adj, within)) return select_clique_split(g_, within);
    return std::nullopt;
  }

  // (Sim, #V) strictly decreases lexicographically along every recursive call.
  void ensure_decreasing(VertexSet parent, const Split& s) const {
    const auto adj = g_.adjacency();
    const auto sim = induced::clique_number(adj, parent);
    for (auto child : {s.left, s.right, s.separator}) {
      const auto child_sim = induced::clique_number(adj, child);
      ASDIMLAB_ENSURE(child_sim < sim || (child_sim == sim && child.size() < parent.size()),
                      "termination measure did not decrease");
    }
  }

  const DefiningGraph& g_;
  Mode mode_;
  EngineOptions options_;
  std::unordered_map<std::uint64_t, NodePtr> memo_;
};

std::vector<VertexId> names(const DefiningGraph& g, VertexSet vs) { return g.names_of(vs); }

CertNode to_cert(const DefiningGraph& g, const Node& n) {
  CertNode out;
  out.rule = n.rule;
  out.vertices = names(g, n.vertices);
  out.claimed = n.bound;
  if (n.split) {
    out.data.v1 = g.vertex(n.split->v1);
    if (n.split->rule == RuleId::AmalgamUniqueClique) out.data.x = g.vertex(*n.split->x);
    if (n.split->rule == RuleId::AmalgamMultiClique) out.data.chosen = names(g, n.split->chosen);
    out.data.separator = names(g, n.split->separator);
  }
  out.children.reserve(n.children.size());
  for (const auto& c : n.children) out.children.push_back(to_cert(g, *c));
  return out;
}

}  // namespace

BoundResult compute_bound(const DefiningGraph& g, Mode mode, EngineOptions options) {
  Solver solver(g, mode, options);
  const auto root = solver.solve(g.all());
  BoundResult result;
  result.bound = root->bound;
  result.certificate = Certificate{fingerprint(g), mode, to_cert(g, *root)};
  result.stats = graph_stats(g);
  return result;
}

}  // namespace asdimlab
