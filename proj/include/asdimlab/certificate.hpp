#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asdimlab/bound.hpp"
#include "asdimlab/graph.hpp"

namespace asdimlab {

// Rule-specific record. Amalgam nodes carry the chosen vertices and the
// separator; every other rule carries nothing.
struct CertData {
  std::optional<VertexId> v1;
  std::optional<VertexId> x;                     // AmalgamUniqueClique
  std::optional<std::vector<VertexId>> chosen;   // AmalgamMultiClique: {v2, ..., v_sigma} as a set
  std::optional<std::vector<VertexId>> separator;

  bool empty() const { return !v1 && !x && !chosen && !separator; }
  friend bool operator==(const CertData&, const CertData&) = default;
};

// One rule application. Amalgam children are ordered (left, right, separator);
// free-product children are the connected components in order.
struct CertNode {
  RuleId rule = RuleId::Unresolved;
  std::vector<VertexId> vertices;  // sorted
  Bound claimed;
  CertData data;
  std::vector<CertNode> children;

  friend bool operator==(const CertNode&, const CertNode&) = default;
};

struct Certificate {
  std::string fingerprint;
  Mode mode = Mode::Unconditional;
  CertNode root;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Rule names in preorder.
std::vector<RuleId> rules_in_order(const CertNode& root);

std::string serialize(const Certificate& cert);
// Throws InputError carrying the byte offset or JSON path of the defect.
Certificate deserialize(std::string_view text);

struct Verdict {
  bool accepted = true;
  std::string path;  // "/" for the root, "/children/1/children/0" below it
  int clause = 0;    // 1 fingerprint, 2 structure, 3 amalgam split, 4 leaf precondition, 5 arithmetic, 6 conditionality
  std::string reason;

  static Verdict accept() { return {}; }
  std::string describe() const;
};

// Re-derives every node from the graph alone: vertex sets, split conditions,
// leaf preconditions, and bound arithmetic. Shares nothing with the engine
// beyond graph-core.
Verdict check(const Certificate& cert, const DefiningGraph& g);

}  // namespace asdimlab
