#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace asdimlab {

// Natural number or `unknown`. max and +1 absorb unknown; min_known discards it.
class ExtBound {
 public:
  constexpr ExtBound() = default;  // unknown
  constexpr ExtBound(std::size_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtBound unknown() { return ExtBound{}; }

  constexpr bool known() const { return value_.has_value(); }
  constexpr std::size_t value() const { return *value_; }

  constexpr ExtBound plus_one() const { return known() ? ExtBound(*value_ + 1) : unknown(); }

  // unknown is +infinity for ordering.
  constexpr bool at_most(ExtBound other) const {
    if (!other.known()) return true;
    return known() && *value_ <= *other.value_;
  }
  constexpr bool less_than(ExtBound other) const { return at_most(other) && !(*this == other); }

  friend constexpr ExtBound max(ExtBound a, ExtBound b) {
    if (!a.known() || !b.known()) return unknown();
    return ExtBound(std::max(*a.value_, *b.value_));
  }
  friend constexpr ExtBound min_known(ExtBound a, ExtBound b) {
    if (!a.known()) return b;
    if (!b.known()) return a;
    return ExtBound(std::min(*a.value_, *b.value_));
  }

  friend constexpr bool operator==(ExtBound, ExtBound) = default;

  std::string to_string() const { return known() ? std::to_string(*value_) : "unknown"; }

 private:
  std::optional<std::size_t> value_;
};

struct Bound {
  std::size_t lower = 0;
  ExtBound upper;
  bool exact = false;
  // Some rule in the derivation assumes asdim A <= Sim for complete Artin graphs.
  bool conditional = false;

  // Sets `exact` from the bounds themselves.
  static Bound make(std::size_t lower, ExtBound upper, bool conditional) {
    return Bound{lower, upper, upper.known() && upper.value() == lower, conditional};
  }

  friend bool operator==(const Bound&, const Bound&) = default;
};

enum class Mode { Conditional, Unconditional };

std::string_view to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view text);

enum class RuleId {
  FreeProduct,
  AmalgamCycle,
  AmalgamUniqueClique,
  AmalgamMultiClique,
  LeafEmpty,
  LeafFreeArtin,
  LeafCoxeterVertex,
  LeafCoxeterEdge,
  LeafArtinForest,
  LeafCoxeterForest,
  LeafGraphGroupForest,
  LeafLargeTypeSim3,
  LeafRAAG,
  LeafCompleteCoxeter,
  LeafCompleteArtinConjectural,
  // No statement applies: upper is unknown, lower from parabolic subgroups only.
  Unresolved,
};

inline constexpr std::size_t kRuleCount = static_cast<std::size_t>(RuleId::Unresolved) + 1;

std::string_view to_string(RuleId rule);
std::optional<RuleId> rule_from_string(std::string_view text);

constexpr bool is_amalgam(RuleId r) {
  return r == RuleId::AmalgamCycle || r == RuleId::AmalgamUniqueClique || r == RuleId::AmalgamMultiClique;
}
constexpr bool is_leaf(RuleId r) { return r != RuleId::FreeProduct && !is_amalgam(r); }

// asdim(A * B) = max{asdim A, asdim B, 1}; requires >= 2 children.
Bound combine_free_product(std::span<const Bound> children);

// asdim(L *_S R) <= max{asdim L, asdim R, asdim S + 1}; lower bound from L and R as subgroups.
Bound combine_amalgam(const Bound& left, const Bound& right, const Bound& sep);

}  // namespace asdimlab
