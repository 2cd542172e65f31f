#include "asdimlab/graph_io.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

#include "asdimlab/errors.hpp"

namespace asdimlab {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

DefiningGraph parse_input(std::string_view text, const ParseOptions& options) {
  std::optional<GroupKind> kind;
  std::vector<VertexId> vertices;
  std::set<std::string, std::less<>> declared;
  std::set<std::pair<std::string, std::string>> edge_keys;
  std::vector<EdgeSpec> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const auto& head = tokens[0];
    auto fail = [&](const Token& at, const std::string& message) -> ParseError {
      return ParseError(line_no, at.column, message);
    };

    if (head.text == "kind") {
      if (tokens.size() != 2) throw fail(head, "expected 'kind artin|coxeter|graphgroup'");
      if (kind) throw fail(head, "kind declared more than once");
      kind = group_kind_from_string(tokens[1].text);
      if (!kind) throw fail(tokens[1], "unknown kind '" + std::string(tokens[1].text) + "'");
    } else if (head.text == "vertex") {
      if (tokens.size() != 2) throw fail(head, "expected 'vertex NAME'");
      const std::string name(tokens[1].text);
      if (!is_valid_vertex_name(name)) throw fail(tokens[1], "invalid vertex name '" + name + "'");
      if (!declared.insert(name).second) throw fail(tokens[1], "duplicate vertex '" + name + "'");
      if (declared.size() > options.max_vertices) {
        throw fail(tokens[1], "graph exceeds the size guard of " + std::to_string(options.max_vertices) + " vertices");
      }
      vertices.push_back(VertexId{name});
    } else if (head.text == "edge") {
      if (tokens.size() != 4) throw fail(head, "expected 'edge NAME NAME LABEL'");
      if (!kind) throw fail(head, "kind must be declared before any edge");
      const std::string a(tokens[1].text);
      const std::string b(tokens[2].text);
      if (!declared.contains(a)) throw fail(tokens[1], "undeclared vertex '" + a + "'");
      if (!declared.contains(b)) throw fail(tokens[2], "undeclared vertex '" + b + "'");
      if (a == b) throw fail(tokens[2], "loop at vertex '" + a + "'");
      if (!edge_keys.insert(std::minmax(a, b)).second) {
        throw fail(tokens[1], "duplicate edge '" + a + "' - '" + b + "'");
      }
      const auto& lab = tokens[3];
      EdgeLabel label;
      if (*kind == GroupKind::GraphGroup) {
        try {
          label.value = validate_edge_word(parse_word(lab.text), VertexId{a}, VertexId{b});
        } catch (const InputError& e) {
          throw fail(lab, e.what());
        }
      } else {
        unsigned m = 0;
        const auto* first = lab.text.data();
        const auto* last = first + lab.text.size();
        const auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc{} || ptr != last) throw fail(lab, "label must be an integer, got '" + std::string(lab.text) + "'");
        if (m < 2) throw fail(lab, "label must be \xE2\x89\xA5 2");
        label.value = m;
      }
      edges.push_back(EdgeSpec{VertexId{a}, VertexId{b}, std::move(label)});
    } else {
      throw fail(head, "unknown statement '" + std::string(head.text) + "'");
    }
  }
  if (!kind) throw ParseError(line_no, 1, "missing kind declaration");
  return DefiningGraph::build(*kind, std::move(vertices), std::move(edges));
}

std::string canonical_text(const DefiningGraph& g) {
  std::string out = "kind ";
  out += to_string(g.kind());
  out += '\n';
  for (const auto& v : g.vertices()) out += "vertex " + v.name + '\n';
  for (const auto& e : g.edges()) {
    out += "edge " + g.vertex(e.u).name + ' ' + g.vertex(e.v).name + ' ';
    out += e.label.is_coefficient() ? std::to_string(e.label.coefficient()) : format_word(e.label.relator());
    out += '\n';
  }
  return out;
}

std::string fingerprint(const DefiningGraph& g) {
  const auto text = canonical_text(g);
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), digest);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * SHA256_DIGEST_LENGTH);
  for (unsigned char c : digest) {
    out += kHex[c >> 4];
    out += kHex[c & 0xF];
  }
  return out;
}

std::size_t max_vertices_from_env() {
  const char* raw = std::getenv("ASDIMLAB_MAX_VERTICES");
  if (raw == nullptr) return kDefaultMaxVertices;
  std::size_t v = 0;
  const std::string_view s(raw);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) return kDefaultMaxVertices;
  return std::min(v, kMaxVertexCapacity);
}

}  // namespace asdimlab
