#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "closekit/graph.hpp"

namespace closekit {

// One closed-form-vs-oracle comparison. Boolean checks (tie-set membership,
// winner sets) are encoded as analytic = 1, oracle = 1/0 with tolerance 0.
struct SweepEntry {
  std::string instance;
  double analytic = 0.0;
  double oracle = 0.0;
  double diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SweepReport {
  std::string target;
  double tolerance = 1e-9;
  std::vector<SweepEntry> entries;
  double max_diff = 0.0;
  bool pass = true;

  SweepReport() = default;
  SweepReport(std::string target, double tolerance)
      : target(std::move(target)), tolerance(tolerance) {}

  void add(std::string instance, double analytic, double oracle);
  void add(std::string instance, double analytic, double oracle, double tol);
  void add_check(std::string instance, bool ok);
};

// Inclusive integer ranges keyed by parameter name, e.g. {"n", {3, 20}}.
using Ranges = std::map<std::string, std::pair<int, int>>;

// Verification targets: each sweeps a closed form against the brute-force
// pipeline over a parameter grid. Unknown target or a range outside the
// family's domain throws. Omitted ranges fall back to per-target defaults.
std::vector<std::string> sweep_targets();
SweepReport sweep(const std::string& target, const Ranges& ranges = {},
                  double tolerance = 1e-9);

// Frozen reference values for three small fixture graphs and the 4-vertex
// path, checked against the pipeline at pinned tolerances.
SweepReport fixture_check();

// Fixture graphs, reconstructed from their published metric values
// (closeness, residual, additional) which pin each one up to isomorphism.
Graph bowtie_graph();             // two triangles sharing a vertex
Graph bridged_triangles_graph();  // two triangles joined by one link
Graph disjoint_triangles_graph(); // two triangles, no connection

}  // namespace closekit
