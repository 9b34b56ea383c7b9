#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "closekit/closed_forms.hpp"
#include "closekit/decision.hpp"
#include "closekit/graph.hpp"
#include "closekit/metrics.hpp"
#include "closekit/output.hpp"
#include "closekit/verify.hpp"

namespace {

using namespace closekit;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string field;
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

int parse_range_int(const std::string& text) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range bound '" + text + "'");
  }
}

// "k=3..8" or "k=5"; bounds are inclusive.
Ranges parse_ranges(const std::vector<std::string>& args) {
  Ranges ranges;
  for (const std::string& arg : args) {
    std::size_t eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("bad range '" + arg + "', expected key=lo..hi");
    }
    std::string key = arg.substr(0, eq);
    std::string value = arg.substr(eq + 1);
    std::size_t dots = value.find("..");
    int lo = 0, hi = 0;
    if (dots == std::string::npos) {
      lo = hi = parse_range_int(value);
    } else {
      lo = parse_range_int(value.substr(0, dots));
      hi = parse_range_int(value.substr(dots + 2));
    }
    if (ranges.count(key)) {
      throw std::invalid_argument("duplicate range for '" + key + "'");
    }
    ranges[key] = {lo, hi};
  }
  return ranges;
}

std::map<Edge, double> load_weights(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open weights file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_weights(buf.str());
}

std::vector<Criterion> build_criteria(const std::string& names, double alpha,
                                      const std::string& weights_path) {
  std::vector<Criterion> out;
  if (names == "all") {
    out.push_back(Criterion::equal_likelihood());
    if (!weights_path.empty()) {
      out.push_back(Criterion::weighted(load_weights(weights_path)));
    }
    out.push_back(Criterion::pessimistic());
    out.push_back(Criterion::optimistic());
    out.push_back(Criterion::hurwicz(alpha));
    out.push_back(Criterion::paper_regret());
    out.push_back(Criterion::classical_savage());
    return out;
  }
  for (const std::string& name : split(names, ',')) {
    auto kind = criterion_kind_from_name(name);
    if (!kind) throw std::invalid_argument("unknown criterion '" + name + "'");
    switch (*kind) {
      case CriterionKind::equal_likelihood:
        out.push_back(Criterion::equal_likelihood());
        break;
      case CriterionKind::weighted:
        if (weights_path.empty()) {
          throw std::invalid_argument("criterion weighted needs --weights");
        }
        out.push_back(Criterion::weighted(load_weights(weights_path)));
        break;
      case CriterionKind::pessimistic:
        out.push_back(Criterion::pessimistic());
        break;
      case CriterionKind::optimistic:
        out.push_back(Criterion::optimistic());
        break;
      case CriterionKind::hurwicz:
        out.push_back(Criterion::hurwicz(alpha));
        break;
      case CriterionKind::paper_regret:
        out.push_back(Criterion::paper_regret());
        break;
      case CriterionKind::classical_savage:
        out.push_back(Criterion::classical_savage());
        break;
    }
  }
  if (out.empty()) throw std::invalid_argument("no criteria requested");
  return out;
}

int run_verify(const std::string& target, const Ranges& ranges,
               double tolerance, OutputFormat format) {
  std::vector<SweepReport> reports;
  if (target == "all") {
    if (!ranges.empty()) {
      throw std::invalid_argument("target all takes no ranges");
    }
    for (const std::string& name : sweep_targets()) {
      reports.push_back(sweep(name, {}, tolerance));
    }
  } else {
    reports.push_back(sweep(target, ranges, tolerance));
  }
  std::cout << render_sweeps(reports, format);
  for (const SweepReport& r : reports) {
    if (!r.pass) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-based closeness of undirected graphs: metrics, payoff tables, decisions, verification"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string format_name = "text";
  std::string criteria_names = "all";
  std::string weights_path;
  std::string target = "all";
  std::vector<std::string> range_args;
  double alpha = 0.5;
  double tolerance = 1e-9;

  auto* metrics = app.add_subcommand(
      "metrics", "closeness, residual and additional closeness");
  metrics->add_option("graph", graph_arg, "edge-list file or family spec like cycle:6")
      ->required();
  metrics->add_option("--format", format_name, "text, json or csv");

  auto* payoff = app.add_subcommand(
      "payoff", "payoff table over one deleted and one added link");
  payoff->add_option("graph", graph_arg, "edge-list file or family spec")
      ->required();
  payoff->add_option("--format", format_name, "text, json or csv");

  auto* decide_cmd = app.add_subcommand(
      "decide", "best link to add under the chosen criteria");
  decide_cmd->add_option("graph", graph_arg, "edge-list file or family spec")
      ->required();
  decide_cmd->add_option("--format", format_name, "text, json or csv");
  decide_cmd->add_option("--criteria", criteria_names,
                         "comma-separated criterion names, or 'all'");
  decide_cmd->add_option("--alpha", alpha, "hurwicz blend in [0,1]");
  decide_cmd->add_option("--weights", weights_path,
                         "weights file with lines 'u v p'");

  auto* verify = app.add_subcommand(
      "verify", "closed forms against the brute-force pipeline");
  verify->add_option("target", target, "sweep target, or 'all'");
  verify->add_option("ranges", range_args, "parameter ranges like n=3..20");
  verify->add_option("--tolerance", tolerance, "largest accepted difference");
  verify->add_option("--format", format_name, "text, json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    OutputFormat format = parse_format(format_name);
    if (*metrics) {
      std::cout << render_metrics(metric_report(load_graph(graph_arg)), format);
      return 0;
    }
    if (*payoff) {
      PayoffTable table = build_payoff_table(load_graph(graph_arg));
      std::cout << render_payoff(table, find_saddle_points(table), format);
      return 0;
    }
    if (*decide_cmd) {
      PayoffTable table = build_payoff_table(load_graph(graph_arg));
      std::vector<DecisionReport> reports;
      for (const Criterion& c : build_criteria(criteria_names, alpha, weights_path)) {
        reports.push_back(decide(table, c));
      }
      std::cout << render_decisions(table, reports, format);
      return 0;
    }
    return run_verify(target, parse_ranges(range_args), tolerance, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
