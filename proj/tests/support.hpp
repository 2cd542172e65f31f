#pragma once

// Shared test fixtures: named graphs, the acceptance corpora, and the
// certificate mutation harness.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "asdimlab/certificate.hpp"
#include "asdimlab/graph.hpp"

namespace asdimlab::testing {

using EdgeList = std::vector<std::tuple<std::string, std::string, unsigned>>;

// Vertices are the endpoints plus `extra`.
DefiningGraph make_graph(GroupKind kind, const EdgeList& edges, const std::vector<std::string>& extra = {});

// Vertices v0..v{n-1} (zero-padded when n > 10 so names sort numerically).
std::string vertex_name(std::size_t i, std::size_t n);
DefiningGraph cycle(GroupKind kind, std::size_t n, unsigned label = 3);
DefiningGraph complete(GroupKind kind, std::size_t n, unsigned label = 2);
DefiningGraph petersen(GroupKind kind, unsigned label = 3);

// Graph on vertex indices with the given edge pairs; labels drawn per edge.
DefiningGraph from_pairs(GroupKind kind, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         const std::vector<unsigned>& labels);

// Non-isomorphic trees on exactly n vertices, as edge-pair lists.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree_shapes(std::size_t n);

std::vector<unsigned> random_labels(std::mt19937_64& rng, std::size_t count, unsigned lo, unsigned hi);

// Acceptance corpora.
struct Corpus {
  std::string name;
  std::vector<DefiningGraph> graphs;
};

Corpus corpus_trees(GroupKind kind);             // 1: tree shapes <= 7 vertices x 50 labelings from {2..9}
Corpus corpus_sim2(GroupKind kind);              // 2: C4..C8, Petersen, triangle-free connected <= 6 vertices
Corpus corpus_small_graphs(GroupKind kind);      // 3: every graph <= 6 vertices, labels {2,3}
Corpus corpus_large_type_sim3();                 // 4: 200 random large-type Artin graphs with Sim 3
Corpus corpus_right_angled();                    // 5: every all-2 Artin graph <= 6 vertices

// Certificate mutations; every one yields a certificate the checker must reject.
enum class MutationOp { BoundEdit, ChildDrop, SeparatorEdit, RuleSwap, VertexSetEdit };
inline constexpr std::size_t kMutationOpCount = 5;

const char* to_string(MutationOp op);

// Applies `op` at a random applicable node; nullopt if no node admits it.
std::optional<Certificate> mutate(const Certificate& cert, const DefiningGraph& g, MutationOp op, std::mt19937_64& rng);

}  // namespace asdimlab::testing
