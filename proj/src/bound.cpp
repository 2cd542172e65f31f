#include "asdimlab/bound.hpp"

#include <array>

#include "asdimlab/errors.hpp"

namespace asdimlab {

std::string_view to_string(Mode mode) { return mode == Mode::Conditional ? "conditional" : "unconditional"; }

std::optional<Mode> mode_from_string(std::string_view text) {
  if (text == "conditional") return Mode::Conditional;
  if (text == "unconditional") return Mode::Unconditional;
  return std::nullopt;
}

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "FreeProduct",       "AmalgamCycle",      "AmalgamUniqueClique",  "AmalgamMultiClique",
    "LeafEmpty",         "LeafFreeArtin",     "LeafCoxeterVertex",    "LeafCoxeterEdge",
    "LeafArtinForest",   "LeafCoxeterForest", "LeafGraphGroupForest", "LeafLargeTypeSim3",
    "LeafRAAG",          "LeafCompleteCoxeter", "LeafCompleteArtinConjectural", "Unresolved",
};

}  // namespace

std::string_view to_string(RuleId rule) { return kRuleNames[static_cast<std::size_t>(rule)]; }

std::optional<RuleId> rule_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == text) return static_cast<RuleId>(i);
  }
  return std::nullopt;
}

Bound combine_free_product(std::span<const Bound> children) {
  if (children.size() < 2) throw PreconditionError("free product needs at least two factors");
  std::size_t lower = 1;
  ExtBound upper = 1;
  bool conditional = false;
  for (const auto& c : children) {
    lower = std::max(lower, c.lower);
    upper = max(upper, c.upper);
    conditional = conditional || c.conditional;
  }
  return Bound::make(lower, upper, conditional);
}

Bound combine_amalgam(const Bound& left, const Bound& right, const Bound& sep) {
  const auto upper = max(max(left.upper, right.upper), sep.upper.plus_one());
  const auto lower = std::max(left.lower, right.lower);
  return Bound::make(lower, upper, left.conditional || right.conditional || sep.conditional);
}

}  // namespace asdimlab
