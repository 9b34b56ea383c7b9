#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "closekit/decision.hpp"
#include "closekit/graph.hpp"
#include "closekit/metrics.hpp"
#include "closekit/verify.hpp"

namespace closekit {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(std::string_view name);

// Up to 10 significant digits, trailing zeros trimmed.
std::string format_number(double v);

std::string render_metrics(const MetricReport& report, OutputFormat format);
std::string render_payoff(const PayoffTable& table,
                          const std::vector<SaddlePoint>& saddles,
                          OutputFormat format);
std::string render_decisions(const PayoffTable& table,
                             const std::vector<DecisionReport>& reports,
                             OutputFormat format);
std::string render_sweeps(const std::vector<SweepReport>& reports,
                          OutputFormat format);

}  // namespace closekit
