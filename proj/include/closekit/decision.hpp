#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "closekit/graph.hpp"

namespace closekit {

// Payoff matrix of the one-link-deleted / one-link-built game. Rows are the
// deletable links, columns the addable links, both lexicographic; a cell is
// the closeness of the graph after applying its row deletion and column
// addition. Requires at least one row and one column.
class PayoffTable {
 public:
  PayoffTable(std::vector<Edge> rows, std::vector<Edge> cols,
              std::vector<double> cells);  // cells row-major

  const std::vector<Edge>& rows() const { return rows_; }
  const std::vector<Edge>& cols() const { return cols_; }
  double cell(std::size_t r, std::size_t c) const;
  std::size_t col_index(Edge added) const;  // throws on unknown column

  double col_min(std::size_t c) const;
  double col_max(std::size_t c) const;
  double col_mean(std::size_t c) const;
  double row_max(std::size_t r) const;

 private:
  std::vector<Edge> rows_;
  std::vector<Edge> cols_;
  std::vector<double> cells_;
};

PayoffTable build_payoff_table(const Graph& g);

enum class CriterionKind {
  equal_likelihood,
  weighted,
  pessimistic,
  optimistic,
  hurwicz,
  paper_regret,
  classical_savage,
};

// Scoring rule for choosing the link to build when the deleted link is
// unknown. Every rule is maximized; the two regret rules score an action by
// the negated regret so that larger is still better.
struct Criterion {
  CriterionKind kind = CriterionKind::equal_likelihood;
  double alpha = 0.5;                // hurwicz blend, 0 = pessimistic end
  std::map<Edge, double> weights;    // per-deleted-link probabilities

  Criterion() = default;

  static Criterion equal_likelihood();
  // Weights must be nonnegative and sum to 1 within 1e-9.
  static Criterion weighted(std::map<Edge, double> weights);
  static Criterion pessimistic();
  static Criterion optimistic();
  static Criterion hurwicz(double alpha);  // alpha in [0,1]
  // Regret of an action = spread of its own column (column max - column
  // min). Scored negated.
  static Criterion paper_regret();
  // Regret of an action = max over rows of (row max - cell). Scored negated.
  static Criterion classical_savage();

  std::string name() const;
  bool is_regret() const;

 private:
  // The factories validate their inputs; they are the only way to pick a kind.
  explicit Criterion(CriterionKind kind) : kind(kind) {}
};

// Criterion names accepted by parsers and reports.
std::optional<CriterionKind> criterion_kind_from_name(std::string_view name);
std::string criterion_name(CriterionKind kind);

double score_action(const PayoffTable& table, Edge added,
                    const Criterion& criterion);

struct DecisionReport {
  Criterion criterion;
  std::vector<double> scores;  // aligned with table.cols()
  double optimum = 0.0;
  std::vector<Edge> best;      // all optimal columns, lexicographic
};

DecisionReport decide(const PayoffTable& table, const Criterion& criterion);

// Cell that is at once the minimum of its column and the maximum of its row
// (ties included).
struct SaddlePoint {
  Edge removed;
  Edge added;
  double value = 0.0;
};

std::vector<SaddlePoint> find_saddle_points(const PayoffTable& table);

// Weights file: '#' comments, payload lines "u v p".
std::map<Edge, double> parse_weights(std::string_view text);

}  // namespace closekit
