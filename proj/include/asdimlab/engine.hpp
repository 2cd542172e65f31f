#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "asdimlab/bound.hpp"
#include "asdimlab/certificate.hpp"
#include "asdimlab/graph.hpp"

namespace asdimlab {

// Amalgam decomposition A_V = A_left *_{A_separator} A_right of parabolic
// subgroups. `rule` says which construction produced it and which of the
// chosen-vertex fields are meaningful.
struct Split {
  RuleId rule = RuleId::AmalgamCycle;
  VertexSet left;
  VertexSet right;
  VertexSet separator;
  std::size_t v1 = 0;
  std::optional<std::size_t> x;  // AmalgamUniqueClique
  VertexSet chosen;              // AmalgamMultiClique: the set D

  friend bool operator==(const Split&, const Split&) = default;
};

struct BoundResult {
  Bound bound;
  Certificate certificate;
  GraphStats stats;
};

struct EngineOptions {
  bool memoize = true;
};

BoundResult compute_bound(const DefiningGraph& g, Mode mode, EngineOptions options = {});

// Delete a cycle vertex v1: left = V - v1, right = N[v1], separator = N(v1).
// Requires a connected graph with Sim = 2 and a cycle.
Split select_cycle_split(const DefiningGraph& g, VertexSet within);
Split select_cycle_split(const DefiningGraph& g);

// Maximum-clique split. One maximum clique C: v1 in C, x outside, not adjacent;
// several: v1 plus one vertex per maximum clique avoiding v1. Requires a
// connected, non-complete graph with Sim >= 3.
Split select_clique_split(const DefiningGraph& g, VertexSet within);
Split select_clique_split(const DefiningGraph& g);

// Every leaf rule whose precondition holds on the connected full subgraph, with
// the bound that rule gives on its own.
std::vector<std::pair<RuleId, Bound>> leaf_bound(const DefiningGraph& g, VertexSet within, Mode mode);
std::vector<std::pair<RuleId, Bound>> leaf_bound(const DefiningGraph& g, Mode mode);

// Lower bound from parabolic subgroups: for Artin graphs the largest of 1 (a
// vertex), 2 (an edge), and the largest clique with all labels 2. Zero otherwise.
std::size_t lower_bound(const DefiningGraph& g, VertexSet within);
std::size_t lower_bound(const DefiningGraph& g);

}  // namespace asdimlab
