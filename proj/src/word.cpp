#include "asdimlab/word.hpp"

#include <algorithm>

namespace asdimlab {

bool is_valid_vertex_name(std::string_view name) noexcept {
  auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  if (name.empty() || !is_alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) { return is_alpha(c) || is_digit(c) || c == '_'; });
}

Word Word::inverse() const {
  Word out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

Word free_reduce(const Word& w) {
  // Single stack pass; the reduced form is unique so order of cancellation is irrelevant.
  Word out;
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().is_inverse_of(l)) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo].is_inverse_of(r.letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word{{r.letters.begin() + static_cast<std::ptrdiff_t>(lo), r.letters.begin() + static_cast<std::ptrdiff_t>(hi)}};
}

namespace {

struct GeneratorCounts {
  std::vector<std::pair<VertexId, std::size_t>> counts;

  explicit GeneratorCounts(const Word& w) {
    for (const auto& l : w.letters) {
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& p) { return p.first == l.base; });
      if (it == counts.end()) {
        counts.emplace_back(l.base, 1);
      } else {
        ++it->second;
      }
    }
  }
};

}  // namespace

bool is_forbidden_form(const Word& w) {
  GeneratorCounts gc(w);
  if (gc.counts.size() != 2) return false;
  return gc.counts[0].second == 1 || gc.counts[1].second == 1;
}

const char* describe(WordDefect defect) {
  switch (defect) {
    case WordDefect::Empty: return "empty relator";
    case WordDefect::ForeignGenerator: return "relator uses a generator that is not an endpoint of the edge";
    case WordDefect::NotCyclicallyReduced: return "relator is not cyclically reduced";
    case WordDefect::SingleGenerator: return "relator uses only one generator";
    case WordDefect::ForbiddenForm: return "forbidden relator form";
  }
  return "invalid relator";
}

Word validate_edge_word(const Word& w, const VertexId& a, const VertexId& b) {
  if (w.empty()) throw WordError(WordDefect::Empty, "");
  for (const auto& l : w.letters) {
    if (l.base != a && l.base != b) throw WordError(WordDefect::ForeignGenerator, l.base.name);
  }
  if (cyclic_reduce(w) != w) throw WordError(WordDefect::NotCyclicallyReduced, format_word(w));
  if (GeneratorCounts(w).counts.size() != 2) throw WordError(WordDefect::SingleGenerator, format_word(w));
  if (is_forbidden_form(w)) {
    throw WordError(WordDefect::ForbiddenForm, format_word(w) + " has the shape x^k y x^l");
  }
  return w;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (true) {
    const auto dot = text.find('.', pos);
    std::string_view tok = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    int sign = 1;
    constexpr std::string_view kInv = "^-1";
    if (tok.size() > kInv.size() && tok.substr(tok.size() - kInv.size()) == kInv) {
      tok.remove_suffix(kInv.size());
      sign = -1;
    }
    if (!is_valid_vertex_name(tok)) {
      throw InputError("malformed word token '" + std::string(text.substr(pos, dot - pos)) + "' at offset " +
                       std::to_string(pos));
    }
    w.letters.push_back(Letter{VertexId{std::string(tok)}, sign});
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += '.';
    out += w.letters[i].base.name;
    if (w.letters[i].sign < 0) out += "^-1";
  }
  return out;
}

Word artin_relator(const VertexId& a, const VertexId& b, unsigned m) {
  Word left;
  Word right;
  for (unsigned i = 0; i < m; ++i) {
    left.letters.push_back(Letter{i % 2 == 0 ? a : b, 1});
    right.letters.push_back(Letter{i % 2 == 0 ? b : a, 1});
  }
  Word inv = right.inverse();
  left.letters.insert(left.letters.end(), inv.letters.begin(), inv.letters.end());
  return left;
}

}  // namespace asdimlab
