#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "asdimlab/graph.hpp"

namespace asdimlab {

inline constexpr std::size_t kDefaultMaxVertices = 30;

struct ParseOptions {
  std::size_t max_vertices = kDefaultMaxVertices;
};

// Line-oriented defining-graph format:
//
//   # comment
//   kind artin|coxeter|graphgroup
//   vertex NAME
//   edge NAME NAME LABEL
//
// LABEL is an integer >= 2 for artin/coxeter and a relator word such as
// a.b.a^-1.b^-1 for graphgroup. Throws ParseError with line and column.
DefiningGraph parse_input(std::string_view text, const ParseOptions& options = {});

// Normalized text: kind, then vertices sorted, then edges sorted with sorted endpoints.
std::string canonical_text(const DefiningGraph& g);

// Lowercase hex SHA-256 of canonical_text(g).
std::string fingerprint(const DefiningGraph& g);

// Reads ASDIMLAB_MAX_VERTICES, falling back to kDefaultMaxVertices; clamped to kMaxVertexCapacity.
std::size_t max_vertices_from_env();

}  // namespace asdimlab
