#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "asdimlab/oracle.hpp"

namespace asdimlab::testing {

DefiningGraph make_graph(GroupKind kind, const EdgeList& edges, const std::vector<std::string>& extra) {
  std::set<std::string> names(extra.begin(), extra.end());
  std::vector<EdgeSpec> specs;
  for (const auto& [a, b, m] : edges) {
    names.insert(a);
    names.insert(b);
    EdgeLabel label;
    if (kind == GroupKind::GraphGroup) {
      label.value = artin_relator(VertexId{a}, VertexId{b}, m);
    } else {
      label.value = m;
    }
    specs.push_back(EdgeSpec{VertexId{a}, VertexId{b}, std::move(label)});
  }
  std::vector<VertexId> vs;
  for (const auto& n : names) vs.push_back(VertexId{n});
  return DefiningGraph::build(kind, std::move(vs), std::move(specs));
}

std::string vertex_name(std::size_t i, std::size_t n) {
  auto digits = std::to_string(i);
  if (n > 10 && i < 10) digits = "0" + digits;
  return "v" + digits;
}

DefiningGraph from_pairs(GroupKind kind, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         const std::vector<unsigned>& labels) {
  EdgeList edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    edges.emplace_back(vertex_name(pairs[k].first, n), vertex_name(pairs[k].second, n), labels[k % labels.size()]);
  }
  std::vector<std::string> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(vertex_name(i, n));
  return make_graph(kind, edges, all);
}

DefiningGraph cycle(GroupKind kind, std::size_t n, unsigned label) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return from_pairs(kind, n, pairs, {label});
}

DefiningGraph complete(GroupKind kind, std::size_t n, unsigned label) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return from_pairs(kind, n, pairs, {label});
}

DefiningGraph petersen(GroupKind kind, unsigned label) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);          // outer cycle
    pairs.emplace_back(i, i + 5);                // spokes
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return from_pairs(kind, 10, pairs, {label});
}

std::vector<unsigned> random_labels(std::mt19937_64& rng, std::size_t count, unsigned lo, unsigned hi) {
  std::uniform_int_distribution<unsigned> dist(lo, hi);
  std::vector<unsigned> out(count);
  for (auto& l : out) l = dist(rng);
  return out;
}

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

std::string rooted_code(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> codes;
  for (auto w : adj[v]) {
    if (w != parent) codes.push_back(rooted_code(adj, w, v));
  }
  std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (const auto& c : codes) out += c;
  return out + ")";
}

// AHU encoding rooted at the centre (minimum over two centres).
std::string tree_code(std::size_t n, const Pairs& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (auto v : layer) {
      for (auto w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (auto c : layer) {
    auto code = rooted_code(adj, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

Pairs prufer_decode(const std::vector<std::size_t>& seq, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (auto s : seq) ++degree[s];
  Pairs edges;
  for (auto s : seq) {
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, s);
        --degree[leaf];
        --degree[s];
        break;
      }
    }
  }
  std::size_t u = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u == n) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return edges;
}

}  // namespace

std::vector<Pairs> tree_shapes(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {Pairs{}};
  if (n == 2) return {Pairs{{0, 1}}};
  std::map<std::string, Pairs> shapes;
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    auto edges = prufer_decode(seq, n);
    shapes.emplace(tree_code(n, edges), std::move(edges));
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
    if (k == seq.size()) break;
  }
  std::vector<Pairs> out;
  for (auto& [code, edges] : shapes) out.push_back(std::move(edges));
  return out;
}

Corpus corpus_trees(GroupKind kind) {
  Corpus c{"trees", {}};
  std::mt19937_64 rng(kind == GroupKind::Artin ? 1001 : 1002);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& shape : tree_shapes(n)) {
      for (int rep = 0; rep < 50; ++rep) {
        c.graphs.push_back(from_pairs(kind, n, shape, shape.empty() ? std::vector<unsigned>{2} : random_labels(rng, shape.size(), 2, 9)));
      }
    }
  }
  return c;
}

Corpus corpus_sim2(GroupKind kind) {
  Corpus c{"sim2", {}};
  std::mt19937_64 rng(kind == GroupKind::Artin ? 2001 : 2002);
  auto relabel = [&](const DefiningGraph& g) {
    Pairs pairs;
    for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
    return from_pairs(kind, g.vertex_count(), pairs, random_labels(rng, pairs.size(), 2, 9));
  };
  for (std::size_t n = 4; n <= 8; ++n) c.graphs.push_back(relabel(cycle(kind, n)));
  c.graphs.push_back(relabel(petersen(kind)));
  for (std::size_t n = 2; n <= 6; ++n) {
    oracle::enumerate_graphs(kind, n, {2}, [&](const DefiningGraph& g) {
      const auto adj = g.adjacency();
      if (induced::is_connected(adj, g.all()) && induced::clique_number(adj, g.all()) == 2) c.graphs.push_back(relabel(g));
      return true;
    });
  }
  return c;
}

Corpus corpus_small_graphs(GroupKind kind) {
  Corpus c{"small-graphs", {}};
  for (std::size_t n = 0; n <= 5; ++n) {
    oracle::enumerate_graphs(kind, n, {2, 3}, [&](const DefiningGraph& g) {
      c.graphs.push_back(g);
      return true;
    });
  }
  // Six vertices: every edge subset under the all-2, all-3 and one seeded mixed labeling.
  std::mt19937_64 rng(3001);
  Pairs slots;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) slots.emplace_back(i, j);
  }
  std::vector<VertexId> names;
  for (std::size_t i = 0; i < 6; ++i) names.push_back(oracle::enumerated_vertex(i));
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    const auto mixed = random_labels(rng, slots.size(), 2, 3);
    for (int variant = 0; variant < 3; ++variant) {
      std::vector<EdgeSpec> edges;
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (!((mask >> k) & 1U)) continue;
        const unsigned m = variant == 0 ? 2 : variant == 1 ? 3 : mixed[k];
        edges.push_back(EdgeSpec{names[slots[k].first], names[slots[k].second], EdgeLabel{m}});
      }
      c.graphs.push_back(DefiningGraph::build(kind, names, std::move(edges)));
    }
  }
  return c;
}

Corpus corpus_large_type_sim3() {
  Corpus c{"large-type-sim3", {}};
  std::mt19937_64 rng(4001);
  std::uniform_int_distribution<std::size_t> size_dist(3, 8);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (c.graphs.size() < 200) {
    const auto n = size_dist(rng);
    const double p = 0.25 + 0.5 * coin(rng);
    Pairs pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng) < p) pairs.emplace_back(i, j);
      }
    }
    auto g = from_pairs(GroupKind::Artin, n, pairs, random_labels(rng, std::max<std::size_t>(pairs.size(), 1), 3, 9));
    const auto adj = g.adjacency();
    if (!induced::is_connected(adj, g.all()) || induced::clique_number(adj, g.all()) != 3) continue;
    c.graphs.push_back(std::move(g));
  }
  return c;
}

Corpus corpus_right_angled() {
  Corpus c{"right-angled", {}};
  for (std::size_t n = 0; n <= 6; ++n) {
    oracle::enumerate_graphs(GroupKind::Artin, n, {2}, [&](const DefiningGraph& g) {
      c.graphs.push_back(g);
      return true;
    });
  }
  return c;
}

// --- mutations ---------------------------------------------------------------

const char* to_string(MutationOp op) {
  switch (op) {
    case MutationOp::BoundEdit: return "bound-edit";
    case MutationOp::ChildDrop: return "child-drop";
    case MutationOp::SeparatorEdit: return "separator-edit";
    case MutationOp::RuleSwap: return "rule-swap";
    case MutationOp::VertexSetEdit: return "vertex-set-edit";
  }
  return "?";
}

namespace {

void collect_nodes(CertNode& n, std::vector<CertNode*>& out) {
  out.push_back(&n);
  for (auto& c : n.children) collect_nodes(c, out);
}

template <typename T>
T& pick(std::vector<T>& items, std::mt19937_64& rng) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

void insert_sorted(std::vector<VertexId>& names, const VertexId& v) {
  names.insert(std::lower_bound(names.begin(), names.end(), v), v);
}

void erase_name(std::vector<VertexId>& names, const VertexId& v) {
  names.erase(std::remove(names.begin(), names.end(), v), names.end());
}

}  // namespace

std::optional<Certificate> mutate(const Certificate& cert, const DefiningGraph& g, MutationOp op, std::mt19937_64& rng) {
  Certificate out = cert;
  std::vector<CertNode*> nodes;
  collect_nodes(out.root, nodes);
  std::vector<CertNode*> eligible;

  switch (op) {
    case MutationOp::BoundEdit: {
      auto* n = pick(nodes, rng);
      auto& b = n->claimed;
      switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
        case 0: b.lower += 1; break;
        case 1:
          if (b.upper.known() && b.upper.value() > 0) {
            b.upper = b.upper.value() - 1;
          } else {
            b.upper = b.upper.known() ? ExtBound(1) : ExtBound(b.lower);
          }
          break;
        case 2: b.upper = b.upper.known() ? ExtBound::unknown() : ExtBound(b.lower); break;
        case 3: b.exact = !b.exact; break;
        default: b.conditional = !b.conditional; break;
      }
      return out;
    }
    case MutationOp::ChildDrop: {
      for (auto* n : nodes) {
        if (!n->children.empty()) eligible.push_back(n);
      }
      if (eligible.empty()) return std::nullopt;
      auto* n = pick(eligible, rng);
      const auto k = std::uniform_int_distribution<std::size_t>(0, n->children.size() - 1)(rng);
      n->children.erase(n->children.begin() + static_cast<std::ptrdiff_t>(k));
      return out;
    }
    case MutationOp::SeparatorEdit: {
      for (auto* n : nodes) {
        if (is_amalgam(n->rule) && n->children.size() == 3 && !n->children[2].vertices.empty()) eligible.push_back(n);
      }
      if (eligible.empty()) return std::nullopt;
      auto* n = pick(eligible, rng);
      // Move one separator vertex to the left side only.
      const auto v = pick(n->children[2].vertices, rng);
      erase_name(n->children[2].vertices, v);
      erase_name(n->children[1].vertices, v);
      erase_name(*n->data.separator, v);
      return out;
    }
    case MutationOp::RuleSwap: {
      auto* n = pick(nodes, rng);
      if (is_leaf(n->rule)) {
        n->rule = RuleId::AmalgamCycle;
      } else if (n->rule == RuleId::FreeProduct) {
        n->rule = RuleId::LeafRAAG;
      } else {
        n->rule = RuleId::FreeProduct;
      }
      return out;
    }
    case MutationOp::VertexSetEdit: {
      for (auto* n : nodes) {
        if (g.vertex_count() > 0) eligible.push_back(n);
      }
      if (eligible.empty()) return std::nullopt;
      auto* n = pick(eligible, rng);
      std::vector<VertexId> missing;
      for (const auto& v : g.vertices()) {
        if (!std::binary_search(n->vertices.begin(), n->vertices.end(), v)) missing.push_back(v);
      }
      if (!missing.empty()) {
        insert_sorted(n->vertices, pick(missing, rng));
      } else {
        erase_name(n->vertices, pick(n->vertices, rng));
      }
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace asdimlab::testing
