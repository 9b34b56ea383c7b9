#include "closekit/metrics.hpp"

#include <cmath>

namespace closekit {

double closeness(const DistanceMatrix& d) {
  double total = 0.0;
  int n = d.vertex_count();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int dij = d.at(i, j);
      if (dij != DistanceMatrix::kUnreachable) total += std::ldexp(2.0, -dij);
    }
  }
  return total;
}

double closeness(const Graph& g) { return closeness(all_pairs_distances(g)); }

double vertex_closeness(const Graph& g, int v) {
  if (v < 1 || v > g.vertex_count()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  DistanceMatrix d = all_pairs_distances(g);
  double total = 0.0;
  for (int j = 1; j <= g.vertex_count(); ++j) {
    if (j == v) continue;
    int dvj = d.at(v, j);
    if (dvj != DistanceMatrix::kUnreachable) total += std::ldexp(1.0, -dvj);
  }
  return total;
}

LinkOptimum residual_closeness(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::domain_error("residual closeness needs at least one link");
  }
  LinkOptimum best;
  bool first = true;
  for (const Edge& e : g.edges()) {
    double value = closeness(mutate_copy(g, e, std::nullopt));
    if (first || value < best.value) {
      best.value = value;
      best.links.assign(1, e);
      first = false;
    } else if (value == best.value) {
      best.links.push_back(e);
    }
  }
  return best;
}

LinkOptimum additional_closeness(const Graph& g) {
  if (g.is_complete()) {
    throw std::domain_error("additional closeness needs an addable link");
  }
  LinkOptimum best;
  bool first = true;
  for (const Edge& e : g.non_edges()) {
    double value = closeness(mutate_copy(g, std::nullopt, e));
    if (first || value > best.value) {
      best.value = value;
      best.links.assign(1, e);
      first = false;
    } else if (value == best.value) {
      best.links.push_back(e);
    }
  }
  return best;
}

MetricReport metric_report(const Graph& g) {
  MetricReport report;
  report.closeness = closeness(g);
  if (g.edge_count() > 0) {
    report.residual = residual_closeness(g);
    if (report.closeness > 0) report.nr = report.residual->value / report.closeness;
  }
  if (!g.is_complete()) {
    report.additional = additional_closeness(g);
    if (report.closeness > 0) report.na = report.additional->value / report.closeness;
  }
  return report;
}

}  // namespace closekit
