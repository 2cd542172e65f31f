#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "asdimlab/vertex_id.hpp"
#include "asdimlab/vertex_set.hpp"
#include "asdimlab/word.hpp"

namespace asdimlab {

enum class GroupKind { Artin, Coxeter, GraphGroup };

std::string_view to_string(GroupKind kind);
std::optional<GroupKind> group_kind_from_string(std::string_view text);

// Edge label: a Coxeter coefficient m >= 2 (artin, coxeter) or a relator word (graphgroup).
struct EdgeLabel {
  std::variant<unsigned, Word> value;

  bool is_coefficient() const { return std::holds_alternative<unsigned>(value); }
  unsigned coefficient() const { return std::get<unsigned>(value); }
  const Word& relator() const { return std::get<Word>(value); }

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

struct Edge {
  std::size_t u;  // u < v
  std::size_t v;
  EdgeLabel label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge given by vertex names, as produced by a parser or generator.
struct EdgeSpec {
  VertexId a;
  VertexId b;
  EdgeLabel label;
};

// Finite simplicial labeled graph together with the kind of group it presents.
// Vertices are indexed in lexicographic name order; immutable once built.
class DefiningGraph {
 public:
  // Validates: names well-formed and unique, endpoints declared, no loops or
  // duplicate edges, label type matches kind, coefficients >= 2, relators
  // admissible. Throws InputError.
  static DefiningGraph build(GroupKind kind, std::vector<VertexId> vertices, std::vector<EdgeSpec> edges);

  GroupKind kind() const { return kind_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexSet all() const { return VertexSet::first_n(names_.size()); }

  const VertexId& vertex(std::size_t i) const { return names_[i]; }
  std::span<const VertexId> vertices() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Edges sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }
  std::uint64_t adjacency(std::size_t v) const { return adjacency_[v]; }
  std::span<const std::uint64_t> adjacency() const { return adjacency_; }
  bool adjacent(std::size_t u, std::size_t v) const { return (adjacency_[u] >> v) & 1U; }
  const EdgeLabel* label(std::size_t u, std::size_t v) const;

  // Resolves names to a VertexSet; throws InputError on an unknown name.
  VertexSet vertex_set(std::span<const VertexId> names) const;
  std::vector<VertexId> names_of(VertexSet vs) const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  DefiningGraph() = default;

  GroupKind kind_ = GroupKind::Artin;
  std::vector<VertexId> names_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adjacency_;
};

struct GraphStats {
  std::size_t sim = 0;  // clique number
  std::size_t betti = 0;
  std::size_t components = 0;
  std::size_t chromatic_upper = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

// --- Queries on whole graphs -------------------------------------------------

DefiningGraph full_subgraph(const DefiningGraph& g, VertexSet vs);
std::vector<VertexSet> connected_components(const DefiningGraph& g);
std::size_t betti_number(const DefiningGraph& g);
std::size_t clique_number(const DefiningGraph& g);
std::vector<VertexSet> maximal_cliques_of_max_size(const DefiningGraph& g);
VertexSet neighbors(const DefiningGraph& g, const VertexId& v);
bool is_independent(const DefiningGraph& g, VertexSet vs);
VertexId find_cycle_vertex(const DefiningGraph& g);
std::size_t chromatic_number_upper(const DefiningGraph& g);
GraphStats graph_stats(const DefiningGraph& g);

// --- Queries on the full subgraph spanned by `within` ------------------------
//
// The engine and checker work on vertex subsets of one original graph; these
// take the adjacency masks directly so no subgraph is materialized.

namespace induced {

using Adjacency = std::span<const std::uint64_t>;

std::size_t edge_count(Adjacency adj, VertexSet within);
std::vector<VertexSet> connected_components(Adjacency adj, VertexSet within);
std::size_t component_count(Adjacency adj, VertexSet within);
bool is_connected(Adjacency adj, VertexSet within);
std::size_t betti_number(Adjacency adj, VertexSet within);
bool is_complete(Adjacency adj, VertexSet within);
bool is_independent(Adjacency adj, VertexSet within);
std::size_t degree(Adjacency adj, VertexSet within, std::size_t v);

// Exact clique number by branch-and-bound over a degeneracy ordering.
std::size_t clique_number(Adjacency adj, VertexSet within);
// All cliques of size clique_number, in lexicographic order of their index sequences.
std::vector<VertexSet> maximum_cliques(Adjacency adj, VertexSet within);

// Exact for |within| <= kExactChromaticLimit, DSatur greedy otherwise; never below clique_number.
inline constexpr std::size_t kExactChromaticLimit = 12;
std::size_t chromatic_number_upper(Adjacency adj, VertexSet within);

// DFS policy: first back edge under index order, endpoint of larger degree,
// ties to the smaller index. Returns nullopt on a forest.
std::optional<std::size_t> find_cycle_vertex(Adjacency adj, VertexSet within);

}  // namespace induced

}  // namespace asdimlab
