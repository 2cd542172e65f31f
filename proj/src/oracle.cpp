#include "asdimlab/oracle.hpp"

#include <bit>
#include <string>

#include "asdimlab/errors.hpp"

namespace asdimlab::oracle {

std::size_t brute_clique_number(const DefiningGraph& g) {
  const auto n = g.vertex_count();
  if (n > kCliqueOracleLimit) throw PreconditionError("brute_clique_number: more than 20 vertices");
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;

  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t subset = 1; subset < limit; ++subset) {
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i) {
      if (!((subset >> i) & 1U)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (((subset >> j) & 1U) && !adjacent[i][j]) {
          clique = false;
          break;
        }
      }
    }
    if (clique) best = size;
  }
  return best;
}

std::size_t brute_chromatic(const DefiningGraph& g) {
  const auto n = g.vertex_count();
  if (n > kChromaticOracleLimit) throw PreconditionError("brute_chromatic: more than 12 vertices");
  if (n == 0) return 0;
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;

  // Restricted growth strings: colour[i] <= 1 + max(colour[0..i-1]), so each
  // partition into colour classes is visited once.
  std::vector<std::size_t> colour(n, 0);
  std::size_t best = n;
  auto assign = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      best = std::min(best, used);
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      bool clash = false;
      for (std::size_t k = 0; k < i && !clash; ++k) clash = adjacent[i][k] && colour[k] == c;
      if (clash) continue;
      colour[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  assign(assign, 0, 0);
  return best;
}

bool validate_split(const DefiningGraph& g, const Split& s) {
  const auto all = g.all();
  if ((s.left | s.right) != all) return false;
  if ((s.left & s.right) != s.separator) return false;
  if (s.separator == s.left || s.separator == s.right) return false;
  for (const auto& e : g.edges()) {
    const bool u_left_only = s.left.contains(e.u) && !s.separator.contains(e.u);
    const bool v_left_only = s.left.contains(e.v) && !s.separator.contains(e.v);
    const bool u_right_only = s.right.contains(e.u) && !s.separator.contains(e.u);
    const bool v_right_only = s.right.contains(e.v) && !s.separator.contains(e.v);
    if ((u_left_only && v_right_only) || (v_left_only && u_right_only)) return false;
  }
  return true;
}

VertexId enumerated_vertex(std::size_t i) { return VertexId{std::string(1, static_cast<char>('a' + i))}; }

std::size_t enumerate_graphs(GroupKind kind, std::size_t n, const std::vector<unsigned>& labels,
                             const std::function<bool(const DefiningGraph&)>& visit) {
  if (n > kEnumerationLimit) throw PreconditionError("enumerate_graphs: more than 7 vertices");
  if (labels.empty()) throw PreconditionError("enumerate_graphs: empty label menu");
  std::vector<VertexId> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(enumerated_vertex(i));
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }

  std::size_t count = 0;
  const std::uint64_t subsets = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1U) chosen.push_back(slots[k]);
    }
    std::vector<std::size_t> digit(chosen.size(), 0);
    while (true) {
      std::vector<EdgeSpec> edges;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        const auto& a = names[chosen[k].first];
        const auto& b = names[chosen[k].second];
        const auto m = labels[digit[k]];
        EdgeLabel label;
        if (kind == GroupKind::GraphGroup) {
          label.value = artin_relator(a, b, m);
        } else {
          label.value = m;
        }
        edges.push_back(EdgeSpec{a, b, std::move(label)});
      }
      ++count;
      if (!visit(DefiningGraph::build(kind, names, std::move(edges)))) return count;
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == labels.size()) digit[k++] = 0;
      if (k == digit.size()) break;
    }
  }
  return count;
}

}  // namespace asdimlab::oracle
