#include "closekit/decision.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "closekit/metrics.hpp"

namespace closekit {

namespace {

constexpr double kTieTolerance = 1e-9;

}  // namespace

PayoffTable::PayoffTable(std::vector<Edge> rows, std::vector<Edge> cols,
                         std::vector<double> cells)
    : rows_(std::move(rows)), cols_(std::move(cols)), cells_(std::move(cells)) {
  if (rows_.empty()) throw std::domain_error("payoff table needs a deletable link");
  if (cols_.empty()) throw std::domain_error("payoff table needs an addable link");
  if (cells_.size() != rows_.size() * cols_.size()) {
    throw std::invalid_argument("cell count does not match table shape");
  }
}

double PayoffTable::cell(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_.size()) {
    throw std::invalid_argument("cell index out of range");
  }
  return cells_[r * cols_.size() + c];
}

std::size_t PayoffTable::col_index(Edge added) const {
  auto it = std::lower_bound(cols_.begin(), cols_.end(), added);
  if (it == cols_.end() || *it != added) {
    throw std::invalid_argument("unknown added link " + to_string(added));
  }
  return static_cast<std::size_t>(it - cols_.begin());
}

double PayoffTable::col_min(std::size_t c) const {
  double best = cell(0, c);
  for (std::size_t r = 1; r < rows_.size(); ++r) best = std::min(best, cell(r, c));
  return best;
}

double PayoffTable::col_max(std::size_t c) const {
  double best = cell(0, c);
  for (std::size_t r = 1; r < rows_.size(); ++r) best = std::max(best, cell(r, c));
  return best;
}

double PayoffTable::col_mean(std::size_t c) const {
  double total = 0.0;
  for (std::size_t r = 0; r < rows_.size(); ++r) total += cell(r, c);
  return total / static_cast<double>(rows_.size());
}

double PayoffTable::row_max(std::size_t r) const {
  double best = cell(r, 0);
  for (std::size_t c = 1; c < cols_.size(); ++c) best = std::max(best, cell(r, c));
  return best;
}

PayoffTable build_payoff_table(const Graph& g) {
  std::vector<Edge> rows = g.edges();
  std::vector<Edge> cols = g.non_edges();
  if (rows.empty()) throw std::domain_error("no deletable links");
  if (cols.empty()) throw std::domain_error("no addable links");
  std::vector<double> cells;
  cells.reserve(rows.size() * cols.size());
  for (const Edge& removed : rows) {
    for (const Edge& added : cols) {
      cells.push_back(closeness(mutate_copy(g, removed, added)));
    }
  }
  return PayoffTable(std::move(rows), std::move(cols), std::move(cells));
}

Criterion Criterion::equal_likelihood() { return Criterion(CriterionKind::equal_likelihood); }

Criterion Criterion::weighted(std::map<Edge, double> weights) {
  double total = 0.0;
  for (const auto& [edge, p] : weights) {
    if (p < 0) {
      throw std::invalid_argument("negative weight for link " + to_string(edge));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kTieTolerance) {
    throw std::invalid_argument("weights must sum to 1");
  }
  Criterion c(CriterionKind::weighted);
  c.weights = std::move(weights);
  return c;
}

Criterion Criterion::pessimistic() { return Criterion(CriterionKind::pessimistic); }
Criterion Criterion::optimistic() { return Criterion(CriterionKind::optimistic); }

Criterion Criterion::hurwicz(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("hurwicz alpha must lie in [0,1]");
  }
  Criterion c(CriterionKind::hurwicz);
  c.alpha = alpha;
  return c;
}

Criterion Criterion::paper_regret() { return Criterion(CriterionKind::paper_regret); }
Criterion Criterion::classical_savage() { return Criterion(CriterionKind::classical_savage); }

std::string Criterion::name() const { return criterion_name(kind); }

bool Criterion::is_regret() const {
  return kind == CriterionKind::paper_regret || kind == CriterionKind::classical_savage;
}

std::optional<CriterionKind> criterion_kind_from_name(std::string_view name) {
  if (name == "equal-likelihood") return CriterionKind::equal_likelihood;
  if (name == "weighted") return CriterionKind::weighted;
  if (name == "pessimistic") return CriterionKind::pessimistic;
  if (name == "optimistic") return CriterionKind::optimistic;
  if (name == "hurwicz") return CriterionKind::hurwicz;
  if (name == "paper-regret") return CriterionKind::paper_regret;
  if (name == "classical-savage") return CriterionKind::classical_savage;
  return std::nullopt;
}

std::string criterion_name(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::equal_likelihood: return "equal-likelihood";
    case CriterionKind::weighted: return "weighted";
    case CriterionKind::pessimistic: return "pessimistic";
    case CriterionKind::optimistic: return "optimistic";
    case CriterionKind::hurwicz: return "hurwicz";
    case CriterionKind::paper_regret: return "paper-regret";
    case CriterionKind::classical_savage: return "classical-savage";
  }
  return "?";
}

double score_action(const PayoffTable& table, Edge added, const Criterion& criterion) {
  std::size_t c = table.col_index(added);
  switch (criterion.kind) {
    case CriterionKind::equal_likelihood:
      return table.col_mean(c);
    case CriterionKind::weighted: {
      if (criterion.weights.size() != table.rows().size()) {
        throw std::invalid_argument("weights must name every deletable link");
      }
      double total = 0.0;
      for (std::size_t r = 0; r < table.rows().size(); ++r) {
        auto it = criterion.weights.find(table.rows()[r]);
        if (it == criterion.weights.end()) {
          throw std::invalid_argument("missing weight for link " +
                                      to_string(table.rows()[r]));
        }
        total += it->second * table.cell(r, c);
      }
      return total;
    }
    case CriterionKind::pessimistic:
      return table.col_min(c);
    case CriterionKind::optimistic:
      return table.col_max(c);
    case CriterionKind::hurwicz:
      return criterion.alpha * table.col_max(c) +
             (1.0 - criterion.alpha) * table.col_min(c);
    case CriterionKind::paper_regret:
      return -(table.col_max(c) - table.col_min(c));
    case CriterionKind::classical_savage: {
      double worst = 0.0;
      for (std::size_t r = 0; r < table.rows().size(); ++r) {
        worst = std::max(worst, table.row_max(r) - table.cell(r, c));
      }
      return -worst;
    }
  }
  throw std::invalid_argument("unknown criterion");
}

DecisionReport decide(const PayoffTable& table, const Criterion& criterion) {
  DecisionReport report;
  report.criterion = criterion;
  report.scores.reserve(table.cols().size());
  for (const Edge& added : table.cols()) {
    report.scores.push_back(score_action(table, added, criterion));
  }
  report.optimum = *std::max_element(report.scores.begin(), report.scores.end());
  for (std::size_t c = 0; c < table.cols().size(); ++c) {
    if (report.scores[c] >= report.optimum - kTieTolerance) {
      report.best.push_back(table.cols()[c]);
    }
  }
  return report;
}

std::vector<SaddlePoint> find_saddle_points(const PayoffTable& table) {
  std::vector<SaddlePoint> saddles;
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    double rmax = table.row_max(r);
    for (std::size_t c = 0; c < table.cols().size(); ++c) {
      double value = table.cell(r, c);
      if (value == rmax && value == table.col_min(c)) {
        saddles.push_back({table.rows()[r], table.cols()[c], value});
      }
    }
  }
  return saddles;
}

std::map<Edge, double> parse_weights(std::string_view text) {
  std::map<Edge, double> weights;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream in(line);
    int u = 0, v = 0;
    double p = 0.0;
    if (in >> u) {
      if (!(in >> v >> p) || !(in >> std::ws).eof()) {
        throw ParseError("malformed weight on line " + std::to_string(line_no) +
                         ", expected 'u v p'");
      }
      if (u == v) throw ParseError("self-loop on line " + std::to_string(line_no));
      Edge e(u, v);
      if (weights.count(e)) {
        throw ParseError("duplicate weight for " + to_string(e) + " on line " +
                         std::to_string(line_no));
      }
      weights[e] = p;
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return weights;
}

}  // namespace closekit
