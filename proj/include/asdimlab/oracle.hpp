#pragma once

// Brute-force reference implementations. These deliberately avoid the
// production algorithms (no branch-and-bound, no degeneracy ordering) and exist
// for tests and corpus generation.

#include <cstddef>
#include <functional>
#include <vector>

#include "asdimlab/engine.hpp"
#include "asdimlab/graph.hpp"

namespace asdimlab::oracle {

inline constexpr std::size_t kCliqueOracleLimit = 20;
inline constexpr std::size_t kChromaticOracleLimit = 12;
inline constexpr std::size_t kEnumerationLimit = 7;

// Largest clique by scanning every vertex subset. Throws PreconditionError above 20 vertices.
std::size_t brute_clique_number(const DefiningGraph& g);

// Chromatic number by trying every restricted-growth colouring. Above 12 vertices throws.
std::size_t brute_chromatic(const DefiningGraph& g);

// Split invariants checked by scanning the edge list directly.
bool validate_split(const DefiningGraph& g, const Split& s);

// Calls `visit` for every simple graph on vertices a, b, c, ... (n of them),
// edge subsets in increasing bitmask order and, for each, every assignment of
// labels from `labels` (odometer order, first edge fastest). Graph-group
// edges get the braid relator of the chosen length. Stops early when `visit`
// returns false. Returns the number of graphs visited.
std::size_t enumerate_graphs(GroupKind kind, std::size_t n, const std::vector<unsigned>& labels,
                             const std::function<bool(const DefiningGraph&)>& visit);

// Vertex names used by enumerate_graphs.
VertexId enumerated_vertex(std::size_t i);

}  // namespace asdimlab::oracle
