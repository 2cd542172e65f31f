#include "asdimlab/certificate.hpp"

#include <algorithm>
#include "json.hpp"

#include "asdimlab/errors.hpp"
#include "asdimlab/graph_io.hpp"

namespace asdimlab {

using ojson = nlohmann::ordered_json;

namespace {

void collect_rules(const CertNode& n, std::vector<RuleId>& out) {
  out.push_back(n.rule);
  for (const auto& c : n.children) collect_rules(c, out);
}

ojson names_json(const std::vector<VertexId>& names) {
  ojson arr = ojson::array();
  for (const auto& v : names) arr.push_back(v.name);
  return arr;
}

ojson node_json(const CertNode& n) {
  ojson j;
  j["rule"] = std::string(to_string(n.rule));
  j["vertices"] = names_json(n.vertices);
  j["lower"] = n.claimed.lower;
  if (n.claimed.upper.known()) {
    j["upper"] = n.claimed.upper.value();
  } else {
    j["upper"] = "unknown";
  }
  j["exact"] = n.claimed.exact;
  j["conditional"] = n.claimed.conditional;
  ojson data = ojson::object();
  if (n.data.v1) data["v1"] = n.data.v1->name;
  if (n.data.x) data["x"] = n.data.x->name;
  if (n.data.chosen) data["d"] = names_json(*n.data.chosen);
  if (n.data.separator) data["separator"] = names_json(*n.data.separator);
  j["data"] = std::move(data);
  ojson children = ojson::array();
  for (const auto& c : n.children) children.push_back(node_json(c));
  j["children"] = std::move(children);
  return j;
}

// Strict reader: exact key sets in the documented order, typed fields.
class Reader {
 public:
  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw InputError("certificate " + (path.empty() ? std::string("/") : path) + ": " + what);
  }

  static void expect_keys(const ojson& j, const std::string& path, std::initializer_list<const char*> keys) {
    if (!j.is_object()) fail(path, "expected an object");
    if (j.size() != keys.size()) fail(path, "expected exactly " + std::to_string(keys.size()) + " fields");
    auto it = j.begin();
    for (const char* k : keys) {
      if (it.key() != k) fail(path, std::string("expected field '") + k + "', found '" + it.key() + "'");
      ++it;
    }
  }

  static std::size_t natural(const ojson& j, const std::string& path) {
    if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
  }

  static VertexId name(const ojson& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a vertex name");
    auto s = j.get<std::string>();
    if (!is_valid_vertex_name(s)) fail(path, "invalid vertex name '" + s + "'");
    return VertexId{std::move(s)};
  }

  static std::vector<VertexId> names(const ojson& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of vertex names");
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(name(j[i], path + "/" + std::to_string(i)));
    return out;
  }

  static CertNode node(const ojson& j, const std::string& path) {
    expect_keys(j, path, {"rule", "vertices", "lower", "upper", "exact", "conditional", "data", "children"});
    CertNode n;
    if (!j["rule"].is_string()) fail(path + "/rule", "expected a rule name");
    const auto rule = rule_from_string(j["rule"].get<std::string>());
    if (!rule) fail(path + "/rule", "unknown rule '" + j["rule"].get<std::string>() + "'");
    n.rule = *rule;
    n.vertices = names(j["vertices"], path + "/vertices");
    n.claimed.lower = natural(j["lower"], path + "/lower");
    const auto& up = j["upper"];
    if (up.is_string()) {
      if (up.get<std::string>() != "unknown") fail(path + "/upper", "expected an integer or \"unknown\"");
      n.claimed.upper = ExtBound::unknown();
    } else {
      n.claimed.upper = natural(up, path + "/upper");
    }
    if (!j["exact"].is_boolean()) fail(path + "/exact", "expected a boolean");
    if (!j["conditional"].is_boolean()) fail(path + "/conditional", "expected a boolean");
    n.claimed.exact = j["exact"].get<bool>();
    n.claimed.conditional = j["conditional"].get<bool>();

    const auto& data = j["data"];
    const auto dpath = path + "/data";
    if (!data.is_object()) fail(dpath, "expected an object");
    std::vector<std::string> seen;
    for (auto it = data.begin(); it != data.end(); ++it) {
      const auto& k = it.key();
      if (!seen.empty()) {
        static const std::vector<std::string> kOrder = {"v1", "x", "d", "separator"};
        auto rank = [&](const std::string& s) { return std::find(kOrder.begin(), kOrder.end(), s) - kOrder.begin(); };
        if (rank(k) <= rank(seen.back())) fail(dpath, "fields out of order");
      }
      seen.push_back(k);
      if (k == "v1") {
        n.data.v1 = name(it.value(), dpath + "/v1");
      } else if (k == "x") {
        n.data.x = name(it.value(), dpath + "/x");
      } else if (k == "d") {
        n.data.chosen = names(it.value(), dpath + "/d");
      } else if (k == "separator") {
        n.data.separator = names(it.value(), dpath + "/separator");
      } else {
        fail(dpath, "unexpected field '" + k + "'");
      }
    }

    const auto& children = j["children"];
    if (!children.is_array()) fail(path + "/children", "expected an array");
    for (std::size_t i = 0; i < children.size(); ++i) {
      n.children.push_back(node(children[i], path + "/children/" + std::to_string(i)));
    }
    return n;
  }
};

}  // namespace

std::vector<RuleId> rules_in_order(const CertNode& root) {
  std::vector<RuleId> out;
  collect_rules(root, out);
  return out;
}

std::string serialize(const Certificate& cert) {
  ojson j;
  j["fingerprint"] = cert.fingerprint;
  j["mode"] = std::string(to_string(cert.mode));
  j["root"] = node_json(cert.root);
  return j.dump() + "\n";
}

Certificate deserialize(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    throw InputError("certificate parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  Reader::expect_keys(j, "", {"fingerprint", "mode", "root"});
  Certificate c;
  if (!j["fingerprint"].is_string()) Reader::fail("/fingerprint", "expected a hex string");
  c.fingerprint = j["fingerprint"].get<std::string>();
  if (!j["mode"].is_string()) Reader::fail("/mode", "expected a mode");
  const auto mode = mode_from_string(j["mode"].get<std::string>());
  if (!mode) Reader::fail("/mode", "unknown mode '" + j["mode"].get<std::string>() + "'");
  c.mode = *mode;
  c.root = Reader::node(j["root"], "/root");
  return c;
}

std::string Verdict::describe() const {
  if (accepted) return "accepted";
  return "rejected at " + path + " (clause " + std::to_string(clause) + "): " + reason;
}

// ---------------------------------------------------------------------------
// Checker

namespace {

struct Rejection {
  std::string path;
  int clause;
  std::string reason;
};

class Checker {
 public:
  Checker(const DefiningGraph& g, Mode mode) : g_(g), adj_(g.adjacency()), mode_(mode) {}

  void verify(const CertNode& n, const std::string& path) {
    const auto vs = resolve(n.vertices, path + "/vertices");
    check_data_shape(n, path);

    Bound expected;
    if (is_leaf(n.rule)) {
      if (!n.children.empty()) reject(path, 2, "leaf rule " + rule_name(n) + " has children");
      expected = leaf_expectation(n.rule, vs, path);
    } else if (n.rule == RuleId::FreeProduct) {
      expected = check_free_product(n, vs, path);
    } else {
      expected = check_amalgam(n, vs, path);
    }

    const auto floor = parabolic_floor(vs);
    const auto want = Bound::make(std::max(expected.lower, floor), expected.upper, expected.conditional);
    if (mode_ == Mode::Unconditional && n.claimed.conditional) {
      reject(path, 6, "conditional flag set in unconditional mode");
    }
    if (n.claimed.conditional != want.conditional) {
      reject(path, 6, std::string("conditional flag should be ") + (want.conditional ? "true" : "false"));
    }
    if (n.claimed.lower != want.lower || n.claimed.upper != want.upper || n.claimed.exact != want.exact) {
      reject(path, 5, "claimed (" + std::to_string(n.claimed.lower) + ", " + n.claimed.upper.to_string() +
                          (n.claimed.exact ? ", exact" : "") + ") but rule " + rule_name(n) + " yields (" +
                          std::to_string(want.lower) + ", " + want.upper.to_string() + (want.exact ? ", exact" : "") + ")");
    }
  }

  VertexSet resolve(const std::vector<VertexId>& names, const std::string& path) const {
    VertexSet out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i > 0 && !(names[i - 1] < names[i])) reject(path, 2, "vertex names not strictly sorted");
      const auto idx = g_.index_of(names[i].name);
      if (!idx) reject(path, 2, "unknown vertex '" + names[i].name + "'");
      out.insert(*idx);
    }
    return out;
  }

  [[noreturn]] static void reject(const std::string& path, int clause, const std::string& reason) {
    throw Rejection{path, clause, reason};
  }

 private:
  static std::string rule_name(const CertNode& n) { return std::string(to_string(n.rule)); }

  void check_data_shape(const CertNode& n, const std::string& path) const {
    const auto& d = n.data;
    bool ok = false;
    switch (n.rule) {
      case RuleId::AmalgamCycle: ok = d.v1 && !d.x && !d.chosen && d.separator; break;
      case RuleId::AmalgamUniqueClique: ok = d.v1 && d.x && !d.chosen && d.separator; break;
      case RuleId::AmalgamMultiClique: ok = d.v1 && !d.x && d.chosen && d.separator; break;
      default: ok = d.empty(); break;
    }
    if (!ok) reject(path + "/data", 2, "data fields do not match rule " + rule_name(n));
  }

  // Artin: 1 for a vertex, 2 for an edge, k for a clique with all labels 2.
  std::size_t parabolic_floor(VertexSet vs) const {
    if (g_.kind() != GroupKind::Artin || vs.empty()) return 0;
    std::vector<std::uint64_t> right_angled(adj_.size(), 0);
    bool has_edge = false;
    for (const auto& e : g_.edges()) {
      if (!vs.contains(e.u) || !vs.contains(e.v)) continue;
      has_edge = true;
      if (e.label.coefficient() == 2) {
        right_angled[e.u] |= std::uint64_t{1} << e.v;
        right_angled[e.v] |= std::uint64_t{1} << e.u;
      }
    }
    return std::max<std::size_t>(has_edge ? 2 : 1, induced::clique_number(right_angled, vs));
  }

  Bound leaf_expectation(RuleId rule, VertexSet vs, const std::string& path) const {
    auto need = [&](bool cond, const char* what) {
      if (!cond) reject(path, 4, std::string(to_string(rule)) + " precondition fails: " + what);
    };
    if (rule == RuleId::LeafEmpty) {
      need(vs.empty(), "vertex set must be empty");
      return Bound::make(0, 0, false);
    }
    need(!vs.empty(), "vertex set is empty");
    need(induced::is_connected(adj_, vs), "graph must be connected");
    if (rule == RuleId::Unresolved) return Bound::make(0, ExtBound::unknown(), false);

    const auto kind = g_.kind();
    const auto n = vs.size();
    const auto edges = induced::edge_count(adj_, vs);
    const bool forest = edges + 1 == n;  // connected
    auto labels_all = [&](auto&& pred) {
      for (const auto& e : g_.edges()) {
        if (vs.contains(e.u) && vs.contains(e.v) && !pred(e.label)) return false;
      }
      return true;
    };

    switch (rule) {
      case RuleId::LeafFreeArtin:
        need(kind == GroupKind::Artin, "artin kind");
        need(n == 1, "single vertex");
        return Bound::make(1, 1, false);
      case RuleId::LeafCoxeterVertex:
        need(kind == GroupKind::Coxeter, "coxeter kind");
        need(n == 1, "single vertex");
        return Bound::make(0, 0, false);
      case RuleId::LeafCoxeterEdge:
        need(kind == GroupKind::Coxeter, "coxeter kind");
        need(n == 2 && edges == 1, "single edge");
        return Bound::make(0, 0, false);
      case RuleId::LeafArtinForest:
        need(kind == GroupKind::Artin, "artin kind");
        need(forest && edges >= 1, "tree with at least one edge");
        return Bound::make(2, 2, false);
      case RuleId::LeafCoxeterForest:
        need(kind == GroupKind::Coxeter, "coxeter kind");
        need(forest, "tree");
        return Bound::make(0, 1, false);
      case RuleId::LeafGraphGroupForest:
        need(kind == GroupKind::GraphGroup, "graphgroup kind");
        need(forest, "tree");
        return Bound::make(0, 2, false);
      case RuleId::LeafLargeTypeSim3:
        need(kind == GroupKind::Artin, "artin kind");
        need(labels_all([](const EdgeLabel& l) { return l.coefficient() >= 3; }), "all labels >= 3");
        need(induced::clique_number(adj_, vs) == 3, "Sim = 3");
        return Bound::make(2, 2, false);
      case RuleId::LeafRAAG: {
        need(kind == GroupKind::Artin, "artin kind");
        need(labels_all([](const EdgeLabel& l) { return l.coefficient() == 2; }), "all labels 2");
        const auto sim = induced::clique_number(adj_, vs);
        return Bound::make(sim, sim, false);
      }
      case RuleId::LeafCompleteCoxeter:
        need(kind == GroupKind::Coxeter, "coxeter kind");
        need(induced::is_complete(adj_, vs), "complete graph");
        return Bound::make(0, n, false);
      case RuleId::LeafCompleteArtinConjectural:
        if (mode_ != Mode::Conditional) reject(path, 6, "conjectural rule used in unconditional mode");
        need(kind == GroupKind::Artin, "artin kind");
        need(induced::is_complete(adj_, vs), "complete graph");
        return Bound::make(0, n, true);
      default:
        reject(path, 2, "not a leaf rule");
    }
  }

  Bound check_free_product(const CertNode& n, VertexSet vs, const std::string& path) {
    const auto comps = induced::connected_components(adj_, vs);
    if (comps.size() < 2) reject(path, 2, "free product over a connected vertex set");
    if (n.children.size() != comps.size()) {
      reject(path, 2, "free product needs one child per connected component (" + std::to_string(comps.size()) + ")");
    }
    std::vector<Bound> bounds;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto cpath = path + "/children/" + std::to_string(i);
      if (resolve(n.children[i].vertices, cpath + "/vertices") != comps[i]) {
        reject(cpath, 2, "child is not connected component " + std::to_string(i));
      }
      verify(n.children[i], cpath);
      bounds.push_back(n.children[i].claimed);
    }
    return combine_free_product(bounds);
  }

  Bound check_amalgam(const CertNode& n, VertexSet vs, const std::string& path) {
    if (g_.kind() == GroupKind::GraphGroup) reject(path, 2, "amalgam rules apply to artin and coxeter graphs only");
    if (n.children.size() != 3) reject(path, 2, "amalgam needs exactly 3 children (left, right, separator)");
    const auto left = resolve(n.children[0].vertices, path + "/children/0/vertices");
    const auto right = resolve(n.children[1].vertices, path + "/children/1/vertices");
    const auto sep = resolve(n.children[2].vertices, path + "/children/2/vertices");

    if ((left | right) != vs) reject(path, 3, "left and right do not cover the vertex set");
    if ((left & right) != sep) reject(path, 3, "left and right do not intersect in the separator");
    if (sep == left || sep == right) reject(path, 3, "separator is not a proper subset of both sides");
    (left - sep).for_each([&](std::size_t v) {
      if (!(VertexSet(adj_[v]) & (right - sep)).empty()) {
        reject(path, 3, "edge from '" + g_.vertex(v).name + "' crosses the split");
      }
    });
    if (resolve(*n.data.separator, path + "/data/separator") != sep) {
      reject(path + "/data/separator", 2, "separator record does not match the separator child");
    }

    const auto v1_idx = g_.index_of(n.data.v1->name);
    if (!v1_idx || !vs.contains(*v1_idx)) reject(path + "/data/v1", 2, "v1 is not in the vertex set");
    const auto v1 = *v1_idx;
    if (left != vs.without(v1)) reject(path, 2, "left side must be the vertex set minus v1");

    const auto sim = induced::clique_number(adj_, vs);
    switch (n.rule) {
      case RuleId::AmalgamCycle:
        if (sim != 2) reject(path, 2, "cycle split needs Sim = 2");
        if (right != (VertexSet(adj_[v1]) & vs).with(v1)) reject(path, 2, "right side must be the closed neighbourhood of v1");
        break;
      case RuleId::AmalgamUniqueClique: {
        const auto x = g_.index_of(n.data.x->name);
        if (!x || !vs.contains(*x) || *x == v1) reject(path + "/data/x", 2, "x is not a vertex of the set distinct from v1");
        if (g_.adjacent(v1, *x)) reject(path, 3, "v1 and x are adjacent");
        if (right != vs.without(*x)) reject(path, 2, "right side must be the vertex set minus x");
        break;
      }
      case RuleId::AmalgamMultiClique: {
        const auto d = resolve(*n.data.chosen, path + "/data/d");
        if (d.empty() || !d.subset_of(vs) || d.contains(v1)) reject(path + "/data/d", 2, "invalid chosen set");
        if (!(d & VertexSet(adj_[v1])).empty()) reject(path, 3, "v1 is adjacent to a chosen vertex");
        if (right != vs - d) reject(path, 2, "right side must be the vertex set minus the chosen set");
        break;
      }
      default:
        reject(path, 2, "not an amalgam rule");
    }

    std::vector<Bound> bounds;
    for (std::size_t i = 0; i < 3; ++i) {
      verify(n.children[i], path + "/children/" + std::to_string(i));
      bounds.push_back(n.children[i].claimed);
    }
    return combine_amalgam(bounds[0], bounds[1], bounds[2]);
  }

  const DefiningGraph& g_;
  std::span<const std::uint64_t> adj_;
  Mode mode_;
};

}  // namespace

Verdict check(const Certificate& cert, const DefiningGraph& g) {
  if (cert.fingerprint != fingerprint(g)) return Verdict{false, "/", 1, "fingerprint does not match the input graph"};
  Checker checker(g, cert.mode);
  try {
    if (checker.resolve(cert.root.vertices, "/vertices") != g.all()) {
      Checker::reject("/", 2, "root does not cover every vertex of the graph");
    }
    checker.verify(cert.root, "");
  } catch (const Rejection& r) {
    return Verdict{false, r.path.empty() ? "/" : r.path, r.clause, r.reason};
  }
  return Verdict::accept();
}

}  // namespace asdimlab
