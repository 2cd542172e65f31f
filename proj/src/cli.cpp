#include "asdimlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "asdimlab/errors.hpp"
#include "asdimlab/graph_io.hpp"
#include "asdimlab/oracle.hpp"

namespace asdimlab::cli {

using ojson = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

DefiningGraph load_graph(const std::string& path) {
  return parse_input(read_file(path), ParseOptions{max_vertices_from_env()});
}

ojson result_object(const DefiningGraph& g, const BoundResult& r, bool report) {
  ojson j;
  j["kind"] = std::string(to_string(g.kind()));
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["sim"] = r.stats.sim;
  j["betti"] = r.stats.betti;
  j["chromatic_upper"] = r.stats.chromatic_upper;
  j["lower"] = r.bound.lower;
  if (r.bound.upper.known()) {
    j["upper"] = r.bound.upper.value();
  } else {
    j["upper"] = "unknown";
  }
  j["exact"] = r.bound.exact;
  j["conditional"] = r.bound.conditional;
  ojson rules = ojson::array();
  for (auto id : rules_in_order(r.certificate.root)) rules.push_back(std::string(to_string(id)));
  j["rules"] = std::move(rules);
  if (report) {
    const auto c = compare_bounds(g, r);
    ojson rep;
    rep["sim_bound"] = c.sim_bound;
    rep["chromatic_bound"] = c.chromatic_bound;
    rep["chromatic_exact"] = c.chromatic_exact;
    rep["vertex_bound"] = c.vertex_bound;
    j["report"] = std::move(rep);
  }
  return j;
}

void print_human(std::ostream& out, const DefiningGraph& g, const BoundResult& r, Mode mode, bool report) {
  if (r.bound.conditional) {
    out << "*** CONDITIONAL: relies on asdim A <= Sim for complete Artin graphs ***\n";
  }
  out << "kind:     " << to_string(g.kind()) << "\n";
  out << "mode:     " << to_string(mode) << "\n";
  out << "graph:    " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  out << "asdim:    ";
  if (r.bound.exact) {
    out << "= " << r.bound.lower << "\n";
  } else {
    out << r.bound.lower << " <= asdim <= " << r.bound.upper.to_string() << "\n";
  }
  out << "rules:   ";
  for (auto id : rules_in_order(r.certificate.root)) out << ' ' << to_string(id);
  out << "\n";
  if (report) {
    const auto c = compare_bounds(g, r);
    out << "report:\n";
    out << "  Sim:               " << r.stats.sim << "\n";
    out << "  betti:             " << r.stats.betti << "\n";
    out << "  components:        " << r.stats.components << "\n";
    out << "  Sim bound vs ch bound: " << c.sim_bound << (c.sim_bound < c.chromatic_bound ? " < " : " = ")
        << c.chromatic_bound << (c.chromatic_exact ? "" : " (ch is a greedy upper bound)") << "\n";
    out << "  vertex-count bound: " << c.vertex_bound << "\n";
  }
}

int cmd_bound(const std::string& file, const std::string& mode_text, const std::string& cert_out, bool json,
              bool report, std::ostream& out) {
  const auto mode = mode_from_string(mode_text);
  if (!mode) throw InputError("unknown mode '" + mode_text + "'");
  const auto g = load_graph(file);
  const auto result = compute_bound(g, *mode);
  if (!cert_out.empty()) write_file(cert_out, serialize(result.certificate));
  if (json) {
    out << result_json(g, result, report) << "\n";
  } else {
    print_human(out, g, result, *mode, report);
  }
  return kOk;
}

int cmd_check(const std::string& file, const std::string& cert_path, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(file);
  const auto cert = deserialize(read_file(cert_path));
  const auto verdict = check(cert, g);
  if (!verdict.accepted) {
    err << verdict.describe() << "\n";
    return kRejected;
  }
  out << "accepted: asdim " << (cert.root.claimed.exact ? "= " : ">= ") << cert.root.claimed.lower;
  if (!cert.root.claimed.exact) out << ", <= " << cert.root.claimed.upper.to_string();
  out << (cert.root.claimed.conditional ? " (conditional)" : "") << "\n";
  return kOk;
}

int cmd_atlas(std::size_t max_vertices, const std::string& kind_text, unsigned label, const std::string& mode_text,
              const std::string& path, std::ostream& out) {
  const auto kind = group_kind_from_string(kind_text);
  if (!kind) throw InputError("unknown kind '" + kind_text + "'");
  const auto mode = mode_from_string(mode_text);
  if (!mode) throw InputError("unknown mode '" + mode_text + "'");
  if (label < 2) throw InputError("label must be \xE2\x89\xA5 2");
  if (max_vertices > oracle::kEnumerationLimit) {
    throw InputError("atlas enumerates at most " + std::to_string(oracle::kEnumerationLimit) + " vertices");
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  std::size_t id = 0;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    oracle::enumerate_graphs(*kind, n, {label}, [&](const DefiningGraph& g) {
      const auto result = compute_bound(g, *mode);
      ojson line;
      line["id"] = id++;
      std::string edges;
      for (const auto& e : g.edges()) {
        if (!edges.empty()) edges += ',';
        edges += g.vertex(e.u).name + "-" + g.vertex(e.v).name;
      }
      line["graph"] = edges;
      const auto fields = result_object(g, result, false);
      for (const auto& [k, v] : fields.items()) line[k] = v;
      file << line.dump() << "\n";
      return true;
    });
  }
  out << "wrote " << id << " graphs to " << path << "\n";
  return kOk;
}

}  // namespace

Comparison compare_bounds(const DefiningGraph& g, const BoundResult& r) {
  Comparison c;
  c.sim_bound = r.stats.sim;
  c.chromatic_bound = r.stats.chromatic_upper;
  c.chromatic_exact = g.vertex_count() <= induced::kExactChromaticLimit;
  c.vertex_bound = g.vertex_count();
  return c;
}

std::string result_json(const DefiningGraph& g, const BoundResult& result, bool report) {
  return result_object(g, result, report).dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified asymptotic-dimension bounds for Artin, Coxeter and graph groups", "asdimlab"};
  app.require_subcommand(1);

  std::string file;
  std::string mode = "unconditional";
  std::string cert_path;
  bool json = false;
  bool report = false;
  auto* bound = app.add_subcommand("bound", "Compute a certified bound for a defining graph");
  bound->add_option("FILE", file, "Defining-graph file")->required();
  bound->add_option("--mode", mode, "conditional | unconditional")->check(CLI::IsMember({"conditional", "unconditional"}));
  bound->add_option("--certificate", cert_path, "Write the proof certificate to this path");
  bound->add_flag("--json", json, "Print one JSON line");
  bound->add_flag("--report", report, "Add Sim / chromatic / vertex-count comparison");

  auto* checkc = app.add_subcommand("check", "Check a proof certificate against a defining graph");
  checkc->add_option("FILE", file, "Defining-graph file")->required();
  checkc->add_option("--certificate", cert_path, "Certificate file")->required();

  std::size_t max_vertices = 0;
  std::string kind;
  unsigned label = 2;
  std::string atlas_out;
  auto* atlas = app.add_subcommand("atlas", "Run the engine over every graph up to a size");
  atlas->add_option("--max-vertices", max_vertices, "Largest vertex count")->required();
  atlas->add_option("--kind", kind, "artin | coxeter | graphgroup")->required();
  atlas->add_option("--label", label, "Edge label used for every edge")->required();
  atlas->add_option("--mode", mode, "conditional | unconditional")->check(CLI::IsMember({"conditional", "unconditional"}));
  atlas->add_option("--out", atlas_out, "Output path (JSON lines)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(file, mode, cert_path, json, report, out);
    if (checkc->parsed()) return cmd_check(file, cert_path, out, err);
    if (atlas->parsed()) return cmd_atlas(max_vertices, kind, label, mode, atlas_out, out);
  } catch (const InternalError& e) {
    err << e.what() << "\n";
    return kInternalError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kUsage;
}

}  // namespace asdimlab::cli
