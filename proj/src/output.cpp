#include "closekit/output.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace closekit {

namespace {

using nlohmann::json;

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string links_text(const std::vector<Edge>& links) {
  std::string out;
  for (const Edge& e : links) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

// Pads left to the column width; headers and numbers share one alignment.
std::string pad(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return std::string(width - s.size(), ' ') + s;
}

std::string criterion_label(const Criterion& c) {
  if (c.kind == CriterionKind::hurwicz) {
    return c.name() + "(" + format_number(c.alpha) + ")";
  }
  return c.name();
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string render_metrics(const MetricReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::ostringstream out;
      out << "closeness   " << format_number(report.closeness) << "\n";
      if (report.residual) {
        out << "residual    " << format_number(report.residual->value)
            << "  delete " << links_text(report.residual->links) << "\n";
      } else {
        out << "residual    undefined (no links to delete)\n";
      }
      if (report.additional) {
        out << "additional  " << format_number(report.additional->value)
            << "  add " << links_text(report.additional->links) << "\n";
      } else {
        out << "additional  undefined (no links to add)\n";
      }
      if (report.nr) out << "nr          " << format_number(*report.nr * 100.0) << "%\n";
      if (report.na) out << "na          " << format_number(*report.na * 100.0) << "%\n";
      return out.str();
    }
    case OutputFormat::json: {
      json out;
      out["closeness"] = report.closeness;
      if (report.residual) {
        out["residual"] = {{"value", report.residual->value},
                           {"links", edges_json(report.residual->links)}};
      }
      if (report.additional) {
        out["additional"] = {{"value", report.additional->value},
                             {"links", edges_json(report.additional->links)}};
      }
      if (report.nr) out["nr"] = *report.nr;
      if (report.na) out["na"] = *report.na;
      return out.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "metric,value,links\n";
      out << "closeness," << format_number(report.closeness) << ",\n";
      if (report.residual) {
        out << "residual," << format_number(report.residual->value) << ","
            << csv_quote(links_text(report.residual->links)) << "\n";
      }
      if (report.additional) {
        out << "additional," << format_number(report.additional->value) << ","
            << csv_quote(links_text(report.additional->links)) << "\n";
      }
      if (report.nr) out << "nr," << format_number(*report.nr) << ",\n";
      if (report.na) out << "na," << format_number(*report.na) << ",\n";
      return out.str();
    }
  }
  throw std::invalid_argument("unknown format");
}

std::string render_payoff(const PayoffTable& table,
                          const std::vector<SaddlePoint>& saddles,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::size_t label = 9;  // "del \\ add"
      for (const Edge& e : table.rows()) label = std::max(label, to_string(e).size());
      std::vector<std::size_t> widths(table.cols().size());
      for (std::size_t c = 0; c < table.cols().size(); ++c) {
        widths[c] = to_string(table.cols()[c]).size();
        for (std::size_t r = 0; r < table.rows().size(); ++r) {
          widths[c] = std::max(widths[c], format_number(table.cell(r, c)).size());
        }
      }
      std::ostringstream out;
      out << pad("del \\ add", label);
      for (std::size_t c = 0; c < table.cols().size(); ++c) {
        out << "  " << pad(to_string(table.cols()[c]), widths[c]);
      }
      out << "\n";
      for (std::size_t r = 0; r < table.rows().size(); ++r) {
        out << pad(to_string(table.rows()[r]), label);
        for (std::size_t c = 0; c < table.cols().size(); ++c) {
          out << "  " << pad(format_number(table.cell(r, c)), widths[c]);
        }
        out << "\n";
      }
      if (saddles.empty()) {
        out << "saddle points: none\n";
      } else {
        for (const SaddlePoint& s : saddles) {
          out << "saddle point: delete " << to_string(s.removed) << ", add "
              << to_string(s.added) << ", value " << format_number(s.value)
              << "\n";
        }
      }
      return out.str();
    }
    case OutputFormat::json: {
      json cells = json::array();
      for (std::size_t r = 0; r < table.rows().size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < table.cols().size(); ++c) {
          row.push_back(table.cell(r, c));
        }
        cells.push_back(std::move(row));
      }
      json sp = json::array();
      for (const SaddlePoint& s : saddles) {
        sp.push_back({{"deleted", edge_json(s.removed)},
                      {"added", edge_json(s.added)},
                      {"value", s.value}});
      }
      json out = {{"deleted", edges_json(table.rows())},
                  {"added", edges_json(table.cols())},
                  {"cells", cells},
                  {"saddle_points", sp}};
      return out.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "deleted\\added";
      for (const Edge& e : table.cols()) out << "," << csv_quote(to_string(e));
      out << "\n";
      for (std::size_t r = 0; r < table.rows().size(); ++r) {
        out << csv_quote(to_string(table.rows()[r]));
        for (std::size_t c = 0; c < table.cols().size(); ++c) {
          out << "," << format_number(table.cell(r, c));
        }
        out << "\n";
      }
      return out.str();
    }
  }
  throw std::invalid_argument("unknown format");
}

std::string render_decisions(const PayoffTable& table,
                             const std::vector<DecisionReport>& reports,
                             OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::ostringstream out;
      for (const DecisionReport& d : reports) {
        bool regret = d.criterion.is_regret();
        out << "criterion " << criterion_label(d.criterion) << "\n";
        for (std::size_t c = 0; c < table.cols().size(); ++c) {
          double shown = regret ? -d.scores[c] : d.scores[c];
          out << "  add " << to_string(table.cols()[c])
              << (regret ? "  regret " : "  score ") << format_number(shown);
          if (std::find(d.best.begin(), d.best.end(), table.cols()[c]) !=
              d.best.end()) {
            out << "  best";
          }
          out << "\n";
        }
        out << "  best " << links_text(d.best) << (regret ? "  regret " : "  value ")
            << format_number(regret ? -d.optimum : d.optimum) << "\n";
      }
      return out.str();
    }
    case OutputFormat::json: {
      json out = json::array();
      for (const DecisionReport& d : reports) {
        json scores = json::array();
        for (std::size_t c = 0; c < table.cols().size(); ++c) {
          json entry = {{"added", edge_json(table.cols()[c])},
                        {"score", d.scores[c]}};
          if (d.criterion.is_regret()) entry["regret"] = -d.scores[c];
          scores.push_back(std::move(entry));
        }
        json rep = {{"criterion", d.criterion.name()},
                    {"scores", scores},
                    {"optimum", d.optimum},
                    {"best", edges_json(d.best)}};
        if (d.criterion.kind == CriterionKind::hurwicz) {
          rep["alpha"] = d.criterion.alpha;
        }
        if (d.criterion.is_regret()) rep["optimum_regret"] = -d.optimum;
        out.push_back(std::move(rep));
      }
      return out.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "criterion,added,score,best\n";
      for (const DecisionReport& d : reports) {
        for (std::size_t c = 0; c < table.cols().size(); ++c) {
          bool best = std::find(d.best.begin(), d.best.end(), table.cols()[c]) !=
                      d.best.end();
          out << criterion_label(d.criterion) << ","
              << csv_quote(to_string(table.cols()[c])) << ","
              << format_number(d.scores[c]) << "," << (best ? 1 : 0) << "\n";
        }
      }
      return out.str();
    }
  }
  throw std::invalid_argument("unknown format");
}

std::string render_sweeps(const std::vector<SweepReport>& reports,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::ostringstream out;
      for (const SweepReport& r : reports) {
        std::size_t failed = 0;
        for (const SweepEntry& e : r.entries) {
          if (!e.pass) ++failed;
        }
        out << "target " << r.target << ": " << r.entries.size()
            << " checks, max diff " << format_number(r.max_diff) << ", "
            << (r.pass ? "PASS" : "FAIL");
        if (failed > 0) {
          out << " (" << failed << (failed == 1 ? " mismatch)" : " mismatches)");
        }
        out << "\n";
        for (const SweepEntry& e : r.entries) {
          if (e.pass) continue;
          out << "  " << e.instance << ": formula " << format_number(e.analytic)
              << ", brute force " << format_number(e.oracle) << ", diff "
              << format_number(e.diff) << " > " << format_number(e.tolerance)
              << "\n";
        }
      }
      return out.str();
    }
    case OutputFormat::json: {
      json out = json::array();
      for (const SweepReport& r : reports) {
        json entries = json::array();
        for (const SweepEntry& e : r.entries) {
          entries.push_back({{"instance", e.instance},
                             {"analytic", e.analytic},
                             {"oracle", e.oracle},
                             {"diff", e.diff},
                             {"tolerance", e.tolerance},
                             {"pass", e.pass}});
        }
        out.push_back({{"target", r.target},
                       {"tolerance", r.tolerance},
                       {"max_diff", r.max_diff},
                       {"pass", r.pass},
                       {"entries", std::move(entries)}});
      }
      return out.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "target,instance,analytic,oracle,diff,tolerance,pass\n";
      for (const SweepReport& r : reports) {
        for (const SweepEntry& e : r.entries) {
          out << r.target << "," << csv_quote(e.instance) << ","
              << format_number(e.analytic) << "," << format_number(e.oracle)
              << "," << format_number(e.diff) << ","
              << format_number(e.tolerance) << "," << (e.pass ? 1 : 0) << "\n";
        }
      }
      return out.str();
    }
  }
  throw std::invalid_argument("unknown format");
}

}  // namespace closekit
