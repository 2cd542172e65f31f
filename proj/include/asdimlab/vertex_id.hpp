#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace asdimlab {

// True iff `name` is a letter followed by letters, digits or underscores.
bool is_valid_vertex_name(std::string_view name) noexcept;

// Name of a defining-graph vertex. Ordered lexicographically by name.
struct VertexId {
  std::string name;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

}  // namespace asdimlab
