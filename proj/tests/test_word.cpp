#include "doctest.h"

#include "asdimlab/word.hpp"

using namespace asdimlab;

namespace {

Word w(std::string_view text) { return parse_word(text); }

const VertexId A{"a"};
const VertexId B{"b"};

WordDefect defect_of(const Word& word) {
  try {
    validate_edge_word(word, A, B);
  } catch (const WordError& e) {
    return e.defect();
  }
  FAIL("word was accepted");
  return WordDefect::Empty;
}

}  // namespace

TEST_CASE("parse and format round trip") {
  const auto word = w("a.b.a^-1");
  REQUIRE(word.size() == 3);
  CHECK(word.letters[2] == Letter{A, -1});
  CHECK(format_word(word) == "a.b.a^-1");
  CHECK(format_word(Word{}).empty());
  CHECK_THROWS_AS(parse_word("a..b"), InputError);
  CHECK_THROWS_AS(parse_word("a^2"), InputError);
  CHECK_THROWS_AS(parse_word("a.b^"), InputError);
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(w("a.b.b^-1.a")) == w("a.a"));
  CHECK(free_reduce(w("a.a^-1")).empty());
  CHECK(free_reduce(w("a.b.a^-1")) == w("a.b.a^-1"));
  // cancellation cascades through the middle
  CHECK(free_reduce(w("a.b.a.a^-1.b^-1.b")) == w("a.b"));
}

TEST_CASE("cyclic_reduce") {
  CHECK(cyclic_reduce(w("a.b.a^-1")) == w("b"));
  CHECK(cyclic_reduce(w("a.b.a.b^-1.a^-1.b^-1")) == w("a.b.a.b^-1.a^-1.b^-1"));
  CHECK(cyclic_reduce(Word{}).empty());
  CHECK(cyclic_reduce(w("b.a.b.b^-1.a^-1")) == w("b"));
  CHECK(cyclic_reduce(w("a^-1.b.a.b.a")) == w("b.a.b"));
}

TEST_CASE("reduction is idempotent and never grows the word") {
  const char* samples[] = {"a.b.b^-1.a", "a.b.a^-1", "a^-1.a^-1.b.a.a", "b.a.b^-1.a^-1", "a.b.a.b^-1.a^-1.b^-1", "b^-1.b"};
  for (const auto* s : samples) {
    const auto f = free_reduce(w(s));
    const auto c = cyclic_reduce(w(s));
    CHECK(free_reduce(f) == f);
    CHECK(cyclic_reduce(c) == c);
    CHECK(c.size() <= w(s).size());
    if (c.size() >= 2) CHECK_FALSE(c.letters.front().is_inverse_of(c.letters.back()));
  }
}

TEST_CASE("forbidden form") {
  CHECK(is_forbidden_form(w("b.b.a.b")));
  CHECK_FALSE(is_forbidden_form(w("a.b.a.b^-1.a^-1.b^-1")));
  CHECK(is_forbidden_form(w("a.b")));
  CHECK(is_forbidden_form(w("a.a.b^-1.a")));
  CHECK_FALSE(is_forbidden_form(w("a.a")));
  CHECK_FALSE(is_forbidden_form(w("a.b.a^-1.b^-1")));
}

TEST_CASE("forbidden form is symmetric under role swap and inversion") {
  const char* samples[] = {"b.b.a.b", "a.b", "a.b.a.b^-1.a^-1.b^-1", "a.b.a^-1.b^-1", "a.a.a.b^-1", "b^-1.a.a.b.b"};
  for (const auto* s : samples) {
    const auto word = w(s);
    Word swapped;
    for (const auto& l : word.letters) swapped.letters.push_back(Letter{l.base == A ? B : A, l.sign});
    CHECK(is_forbidden_form(word) == is_forbidden_form(swapped));
    CHECK(is_forbidden_form(word) == is_forbidden_form(word.inverse()));
  }
}

TEST_CASE("validate_edge_word diagnostics") {
  CHECK(validate_edge_word(w("a.b.a.b^-1.a^-1.b^-1"), A, B) == w("a.b.a.b^-1.a^-1.b^-1"));
  CHECK(defect_of(w("b.b.a.b")) == WordDefect::ForbiddenForm);
  CHECK(defect_of(w("a.b.a^-1")) == WordDefect::NotCyclicallyReduced);
  CHECK(defect_of(Word{}) == WordDefect::Empty);
  CHECK(defect_of(w("a.c.a^-1.c^-1")) == WordDefect::ForeignGenerator);
  CHECK(defect_of(w("a.a")) == WordDefect::SingleGenerator);
  CHECK(std::string(describe(WordDefect::ForbiddenForm)) == "forbidden relator form");
}

TEST_CASE("Artin relators are admissible graph-group labels") {
  for (unsigned m = 2; m <= 20; ++m) {
    const auto r = artin_relator(A, B, m);
    CHECK(r.size() == 2 * m);
    CHECK_NOTHROW(validate_edge_word(r, A, B));
    CHECK_NOTHROW(validate_edge_word(artin_relator(B, A, m), A, B));
  }
  CHECK(artin_relator(A, B, 3) == w("a.b.a.b^-1.a^-1.b^-1"));
  CHECK(artin_relator(A, B, 2) == w("a.b.a^-1.b^-1"));
}
