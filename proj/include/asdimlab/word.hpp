#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asdimlab/errors.hpp"
#include "asdimlab/vertex_id.hpp"

namespace asdimlab {

// A generator or its inverse.
struct Letter {
  VertexId base;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return Letter{base, -sign}; }
  bool is_inverse_of(const Letter& other) const { return base == other.base && sign == -other.sign; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Word in the free group on the two endpoints of an edge.
struct Word {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;
};

// Deletes adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

// free_reduce, then strip mutually inverse first/last letters.
Word cyclic_reduce(const Word& w);

// True iff w has the shape x^k y^{+-1} x^l for its two generators x, y in
// either role (k, l arbitrary, possibly zero): exactly one occurrence of
// some generator. Words on a single generator are not of this shape.
bool is_forbidden_form(const Word& w);

enum class WordDefect {
  Empty,
  ForeignGenerator,
  NotCyclicallyReduced,
  SingleGenerator,
  ForbiddenForm,
};

const char* describe(WordDefect defect);

class WordError : public InputError {
 public:
  WordError(WordDefect defect, const std::string& detail)
      : InputError(std::string(describe(defect)) + (detail.empty() ? "" : ": " + detail)), defect_(defect) {}
  WordDefect defect() const noexcept { return defect_; }

 private:
  WordDefect defect_;
};

// Returns w unchanged if it is an admissible relator for the edge [a, b];
// throws WordError naming the first failed condition otherwise.
Word validate_edge_word(const Word& w, const VertexId& a, const VertexId& b);

// Token syntax: tokens joined by '.', each a vertex name optionally suffixed "^-1".
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

// The braid relator <ab...>_m <ba...>_m^{-1} of length 2m.
Word artin_relator(const VertexId& a, const VertexId& b, unsigned m);

}  // namespace asdimlab
