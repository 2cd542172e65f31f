#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "asdimlab/engine.hpp"

namespace asdimlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kRejected = 3,
  kInternalError = 4,
};

struct Comparison {
  std::size_t sim_bound = 0;
  std::size_t chromatic_bound = 0;
  bool chromatic_exact = false;
  std::size_t vertex_bound = 0;
};

Comparison compare_bounds(const DefiningGraph& g, const BoundResult& result);

// One-line JSON result; the "report" object is appended only when `report` is set.
std::string result_json(const DefiningGraph& g, const BoundResult& result, bool report = false);

// Runs `asdimlab <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asdimlab::cli
