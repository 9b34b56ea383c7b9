#include "closekit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "closekit/closed_forms.hpp"
#include "closekit/decision.hpp"
#include "closekit/metrics.hpp"

namespace closekit {

void SweepReport::add(std::string instance, double analytic, double oracle) {
  add(std::move(instance), analytic, oracle, tolerance);
}

void SweepReport::add(std::string instance, double analytic, double oracle,
                      double tol) {
  SweepEntry e;
  e.instance = std::move(instance);
  e.analytic = analytic;
  e.oracle = oracle;
  e.diff = std::abs(analytic - oracle);
  e.tolerance = tol;
  e.pass = e.diff <= tol;  // NaN diffs fail
  max_diff = std::max(max_diff, e.diff);
  pass = pass && e.pass;
  entries.push_back(std::move(e));
}

void SweepReport::add_check(std::string instance, bool ok) {
  add(std::move(instance), 1.0, ok ? 1.0 : 0.0, 0.0);
}

Graph bowtie_graph() {
  return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

Graph bridged_triangles_graph() { return linked_cliques_graph(3, 3); }

Graph disjoint_triangles_graph() {
  return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
}

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

Range pick(const Ranges& ranges, const std::string& key, int lo, int hi,
           int domain_lo, const std::string& target) {
  auto it = ranges.find(key);
  if (it != ranges.end()) {
    lo = it->second.first;
    hi = it->second.second;
  }
  if (lo > hi) {
    throw std::invalid_argument("empty range " + key + "=" + std::to_string(lo) +
                                ".." + std::to_string(hi));
  }
  if (lo < domain_lo) {
    throw std::invalid_argument("target " + target + " needs " + key + " >= " +
                                std::to_string(domain_lo) + ", got " +
                                std::to_string(lo));
  }
  return {lo, hi};
}

void reject_unknown_keys(const Ranges& ranges, const std::string& target,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, range] : ranges) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return key == k;
        }) == known.end()) {
      throw std::invalid_argument("target " + target + " takes no range '" +
                                  key + "'");
    }
  }
}

void check_fixture(SweepReport& r, const std::string& name, const Graph& g,
                   double c, double res, double add, double nr_pct,
                   double na_pct) {
  MetricReport m = metric_report(g);
  r.add(name + " closeness", c, m.closeness, 1e-9);
  r.add(name + " residual", res, m.residual->value, 1e-9);
  r.add(name + " additional", add, m.additional->value, 1e-9);
  r.add(name + " nr%", nr_pct, *m.nr * 100.0, 1e-4 * 100.0);
  r.add(name + " na%", na_pct, *m.na * 100.0, 1e-4 * 100.0);
}

SweepReport sweep_fixtures() {
  SweepReport r;
  r.target = "fixtures";

  // Bowtie, one-link bridge between triangles, two loose triangles: frozen
  // closeness / residual / additional values and their percentage ratios.
  check_fixture(r, "bowtie", bowtie_graph(), 8.0, 7.0, 8.5, 87.5, 106.25);
  check_fixture(r, "bridged-triangles", bridged_triangles_graph(), 10.0, 6.0,
                11.25, 60.0, 112.5);
  check_fixture(r, "disjoint-triangles", disjoint_triangles_graph(), 6.0, 5.5,
                10.0, 91.67, 166.67);

  // 4-vertex path: the full payoff table, cell by cell, with zero tolerance,
  // and its unique saddle point.
  const Graph p4 = path_graph(4);
  PayoffTable table = build_payoff_table(p4);
  const std::vector<Edge> rows = {{1, 2}, {2, 3}, {3, 4}};
  const std::vector<Edge> cols = {{1, 3}, {1, 4}, {2, 4}};
  const double cells[3][3] = {
      {4.5, 4.25, 3.0}, {4.25, 4.25, 4.25}, {3.0, 4.25, 4.5}};
  r.add_check("path:4 rows", table.rows() == rows);
  r.add_check("path:4 cols", table.cols() == cols);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      r.add("path:4 cell " + to_string(rows[i]) + "/" + to_string(cols[j]),
            cells[i][j], table.cell(i, j), 0.0);
    }
  }
  auto saddles = find_saddle_points(table);
  r.add_check("path:4 saddle count", saddles.size() == 1);
  if (saddles.size() == 1) {
    r.add_check("path:4 saddle at (2,3)/(1,4)",
                saddles[0].removed == Edge(2, 3) && saddles[0].added == Edge(1, 4));
    r.add("path:4 saddle value", 4.25, saddles[0].value, 0.0);
  }

  // 6-cycle: column statistics of an opposite chord and a short chord, and
  // the winning chord sets per criterion.
  const Graph c6 = cycle_graph(6);
  PayoffTable t6 = build_payoff_table(c6);
  std::size_t opp = t6.col_index(Edge(1, 4));
  std::size_t sht = t6.col_index(Edge(1, 3));
  r.add("cycle:6 opposite max", 9.75, t6.col_max(opp), 1e-9);
  r.add("cycle:6 opposite min", 9.375, t6.col_min(opp), 1e-9);
  r.add("cycle:6 opposite max+min", 19.125, t6.col_max(opp) + t6.col_min(opp), 1e-9);
  r.add("cycle:6 opposite mean", 9.5, t6.col_mean(opp), 1e-9);
  r.add("cycle:6 opposite spread", 0.375, t6.col_max(opp) - t6.col_min(opp), 1e-9);
  r.add("cycle:6 short max", 10.0, t6.col_max(sht), 1e-9);
  r.add("cycle:6 short min", 9.0, t6.col_min(sht), 1e-9);
  r.add("cycle:6 short max+min", 19.0, t6.col_max(sht) + t6.col_min(sht), 1e-9);
  r.add("cycle:6 short mean", 9.45833, t6.col_mean(sht), 1e-5);
  r.add("cycle:6 short spread", 1.0, t6.col_max(sht) - t6.col_min(sht), 1e-9);

  const std::vector<Edge> opposite = {{1, 4}, {2, 5}, {3, 6}};
  const std::vector<Edge> shorts = {{1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {4, 6}};
  r.add_check("cycle:6 pessimistic winners",
              decide(t6, Criterion::pessimistic()).best == opposite);
  r.add_check("cycle:6 equal-likelihood winners",
              decide(t6, Criterion::equal_likelihood()).best == opposite);
  r.add_check("cycle:6 hurwicz(0.5) winners",
              decide(t6, Criterion::hurwicz(0.5)).best == opposite);
  r.add_check("cycle:6 paper-regret winners",
              decide(t6, Criterion::paper_regret()).best == opposite);
  r.add_check("cycle:6 optimistic winners",
              decide(t6, Criterion::optimistic()).best == shorts);
  return r;
}

SweepReport sweep_eq2(const Ranges& ranges, double tol) {
  SweepReport r{"eq2", tol};
  reject_unknown_keys(ranges, r.target, {"n"});
  Range n = pick(ranges, "n", 1, 20, 1, r.target);
  for (int i = n.lo; i <= n.hi; ++i) {
    r.add("path:" + std::to_string(i), path_closeness(i),
          closeness(path_graph(i)));
  }
  return r;
}

SweepReport sweep_eq3(const Ranges& ranges, double tol) {
  SweepReport r{"eq3", tol};
  reject_unknown_keys(ranges, r.target, {"n"});
  Range n = pick(ranges, "n", 3, 20, 3, r.target);
  for (int i = n.lo; i <= n.hi; ++i) {
    r.add("cycle:" + std::to_string(i), cycle_closeness(i),
          closeness(cycle_graph(i)));
  }
  return r;
}

SweepReport sweep_eq4(const Ranges& ranges, double tol) {
  SweepReport r{"eq4", tol};
  reject_unknown_keys(ranges, r.target, {"count"});
  Range count = pick(ranges, "count", 100, 100, 1, r.target);
  // Random part pairs at a fixed seed keep the sweep reproducible.
  std::mt19937 rng(12345u);
  std::uniform_int_distribution<int> size(1, 8);
  std::bernoulli_distribution flip(0.5);
  for (int i = 1; i <= count.hi; ++i) {
    int n1 = size(rng);
    int n2 = size(rng);
    std::vector<Edge> e1, e2;
    for (int u = 1; u <= n1; ++u) {
      for (int v = u + 1; v <= n1; ++v) {
        if (flip(rng)) e1.emplace_back(u, v);
      }
    }
    for (int u = 1; u <= n2; ++u) {
      for (int v = u + 1; v <= n2; ++v) {
        if (flip(rng)) e2.emplace_back(u, v);
      }
    }
    Graph g1(n1, e1), g2(n2, e2);
    int p = std::uniform_int_distribution<int>(1, n1)(rng);
    int q = std::uniform_int_distribution<int>(1, n2)(rng);

    std::vector<Edge> joined = e1;
    for (const Edge& e : e2) joined.emplace_back(e.u + n1, e.v + n1);
    joined.emplace_back(p, q + n1);
    Graph whole(n1 + n2, joined);

    double analytic =
        join_closeness(closeness(g1), closeness(g2), vertex_closeness(g1, p),
                       vertex_closeness(g2, q));
    std::ostringstream name;
    name << "join #" << i << " (n1=" << n1 << ", n2=" << n2 << ", link ("
         << p << "," << q + n1 << "))";
    r.add(name.str(), analytic, closeness(whole));
  }
  return r;
}

SweepReport sweep_lemma1(const Ranges& ranges, double tol) {
  SweepReport r{"lemma1", tol};
  reject_unknown_keys(ranges, r.target, {"k", "m"});
  Range k = pick(ranges, "k", 3, 10, 2, r.target);
  Range m = pick(ranges, "m", 3, 10, 2, r.target);
  for (int i = k.lo; i <= k.hi; ++i) {
    for (int j = m.lo; j <= m.hi; ++j) {
      r.add("cliques:" + std::to_string(i) + "," + std::to_string(j),
            linked_cliques_closeness(i, j),
            closeness(linked_cliques_graph(i, j)));
    }
  }
  return r;
}

SweepReport sweep_lemma2(const Ranges& ranges, double tol) {
  SweepReport r{"lemma2", tol};
  reject_unknown_keys(ranges, r.target, {"n", "p", "q"});
  Range n = pick(ranges, "n", 3, 10, 3, r.target);
  Range p = pick(ranges, "p", 0, 6, 0, r.target);
  Range q = pick(ranges, "q", 0, 6, 0, r.target);
  for (int i = n.lo; i <= n.hi; ++i) {
    for (int a = p.lo; a <= p.hi; ++a) {
      for (int b = q.lo; b <= q.hi; ++b) {
        r.add("cycletails:" + std::to_string(i) + "," + std::to_string(a) +
                  "," + std::to_string(b),
              cycle_tails_closeness(i, a, b),
              closeness(cycle_tails_graph(i, a, b)));
      }
    }
  }
  return r;
}

SweepReport sweep_eq6(const Ranges& ranges, double tol) {
  SweepReport r{"eq6", tol};
  reject_unknown_keys(ranges, r.target, {"n", "p"});
  Range n = pick(ranges, "n", 3, 16, 3, r.target);
  Range p = pick(ranges, "p", 0, 8, 0, r.target);
  for (int i = n.lo; i <= n.hi; ++i) {
    for (int a = p.lo; a <= p.hi; ++a) {
      r.add("cycletails:" + std::to_string(i) + "," + std::to_string(a) + ",0",
            cycle_tails_closeness(i, a, 0),
            closeness(cycle_tails_graph(i, a, 0)));
    }
  }
  return r;
}

SweepReport sweep_tail_min(const std::string& target, int parity,
                           const Ranges& ranges, double tol) {
  SweepReport r{target, tol};
  reject_unknown_keys(ranges, r.target, {"n", "p"});
  Range n = pick(ranges, "n", 3, 16, 3, r.target);
  Range p = pick(ranges, "p", 0, 8, 0, r.target);
  for (int i = n.lo; i <= n.hi; ++i) {
    if (i % 2 != parity) continue;
    for (int a = p.lo; a <= p.hi; ++a) {
      r.add("cycletails:" + std::to_string(i) + "," + std::to_string(a) + ",0",
            cycle_tail_min(i, a), closeness(cycle_tails_graph(i, a, 0)));
    }
  }
  return r;
}

// Iterates pairs k >= m over the requested grid.
template <typename Fn>
void for_clique_pairs(const Ranges& ranges, const std::string& target, Fn fn) {
  Range k = pick(ranges, "k", 3, 8, 3, target);
  Range m = pick(ranges, "m", 3, 8, 3, target);
  for (int i = k.lo; i <= k.hi; ++i) {
    for (int j = m.lo; j <= std::min(m.hi, i); ++j) fn(i, j);
  }
}

std::string cliques_name(int k, int m) {
  return "cliques:" + std::to_string(k) + "," + std::to_string(m);
}

SweepReport sweep_theorem1(const Ranges& ranges, double tol) {
  SweepReport r{"theorem1", tol};
  reject_unknown_keys(ranges, r.target, {"k", "m"});
  for_clique_pairs(ranges, r.target, [&](int k, int m) {
    PayoffTable t = build_payoff_table(linked_cliques_graph(k, m));
    r.add(cliques_name(k, m) + " mx", linked_cliques_decision(k, m).mx,
          decide(t, Criterion::optimistic()).optimum);
  });
  return r;
}

SweepReport sweep_theorem2(const Ranges& ranges, double tol) {
  SweepReport r{"theorem2", tol};
  reject_unknown_keys(ranges, r.target, {"k", "m"});
  for_clique_pairs(ranges, r.target, [&](int k, int m) {
    PayoffTable t = build_payoff_table(linked_cliques_graph(k, m));
    r.add(cliques_name(k, m) + " mn", linked_cliques_decision(k, m).mn,
          decide(t, Criterion::pessimistic()).optimum);
  });
  return r;
}

SweepReport sweep_corollary1(const Ranges& ranges, double tol) {
  SweepReport r{"corollary1", tol};
  reject_unknown_keys(ranges, r.target, {"k", "m"});
  for_clique_pairs(ranges, r.target, [&](int k, int m) {
    PayoffTable t = build_payoff_table(linked_cliques_graph(k, m));
    double mx = decide(t, Criterion::optimistic()).optimum;
    double mn = decide(t, Criterion::pessimistic()).optimum;
    double analytic = linked_cliques_decision(k, m).mx_plus_mn;
    r.add(cliques_name(k, m) + " mx+mn", analytic, mx + mn);
    // The balanced blend doubles back to the same sum.
    r.add(cliques_name(k, m) + " 2*hurwicz(0.5)", analytic,
          2.0 * decide(t, Criterion::hurwicz(0.5)).optimum);
  });
  return r;
}

SweepReport sweep_theorem3(const Ranges& ranges, double tol) {
  SweepReport r{"theorem3", tol};
  reject_unknown_keys(ranges, r.target, {"k", "m"});
  std::vector<std::pair<int, int>> pairs;
  for_clique_pairs(ranges, r.target,
                   [&](int k, int m) { pairs.emplace_back(k, m); });
  if (ranges.empty()) {
    // Branch-boundary pairs, including one outside the default grid.
    for (auto extra : {std::pair{9, 4}}) {
      if (std::find(pairs.begin(), pairs.end(), extra) == pairs.end()) {
        pairs.push_back(extra);
      }
    }
  }
  for (auto [k, m] : pairs) {
    PayoffTable t = build_payoff_table(linked_cliques_graph(k, m));
    r.add(cliques_name(k, m) + " reg", linked_cliques_decision(k, m).reg,
          -decide(t, Criterion::paper_regret()).optimum);
  }
  return r;
}

SweepReport sweep_theorem4(const Ranges& ranges, double tol) {
  SweepReport r{"theorem4", tol};
  reject_unknown_keys(ranges, r.target, {"k", "m"});
  for_clique_pairs(ranges, r.target, [&](int k, int m) {
    PayoffTable t = build_payoff_table(linked_cliques_graph(k, m));
    double analytic = linked_cliques_decision(k, m).av;
    r.add(cliques_name(k, m) + " av", analytic,
          decide(t, Criterion::equal_likelihood()).optimum);
    // Same value, rebuilt as the multiplicity-weighted mean over the
    // far-far cases.
    double rows = k * (k - 1) / 2.0 + m * (m - 1) / 2.0 + 1.0;
    double weighted = 0.0;
    for (CliqueCase c : {CliqueCase::A, CliqueCase::B, CliqueCase::C, CliqueCase::D}) {
      long count = linked_cliques_case_count(c, k, m);
      if (count > 0) weighted += count * linked_cliques_delta(c, k, m);
    }
    r.add(cliques_name(k, m) + " av case mean",
          linked_cliques_closeness(k, m) + weighted / rows, analytic);
  });
  return r;
}

SweepReport sweep_theorem5(const Ranges& ranges, double tol) {
  SweepReport r{"theorem5", tol};
  reject_unknown_keys(ranges, r.target, {"m"});
  Range m = pick(ranges, "m", 8, 24, 4, r.target);
  for (int i = m.lo; i <= m.hi; ++i) {
    CycleMaximin cm = cycle_maximin(i);
    PayoffTable t = build_payoff_table(cycle_graph(i));
    DecisionReport d = decide(t, Criterion::pessimistic());
    r.add("cycle:" + std::to_string(i) + " maximin", cm.value, d.optimum);
    r.add_check("cycle:" + std::to_string(i) + " chord " + to_string(cm.chord),
                std::find(d.best.begin(), d.best.end(), cm.chord) != d.best.end());
  }
  return r;
}

SweepReport sweep_lollipop(const Ranges& ranges, double tol) {
  SweepReport r{"lollipop", tol};
  reject_unknown_keys(ranges, r.target, {"n", "m"});
  Range n = pick(ranges, "n", 3, 6, 3, r.target);
  Range m = pick(ranges, "m", 1, 4, 1, r.target);
  for (int i = n.lo; i <= n.hi; ++i) {
    for (int j = m.lo; j <= m.hi; ++j) {
      PayoffTable t = build_payoff_table(lollipop_graph(i, j));
      r.add("lollipop:" + std::to_string(i) + "," + std::to_string(j) +
                " maximax",
            lollipop_maximax(i, j).value,
            decide(t, Criterion::optimistic()).optimum);
    }
  }
  return r;
}

SweepReport sweep_additional(const Ranges& ranges, double tol) {
  SweepReport r{"additional", tol};
  reject_unknown_keys(ranges, r.target, {"k", "m"});
  for_clique_pairs(ranges, r.target, [&](int k, int m) {
    r.add(cliques_name(k, m) + " best addition",
          linked_cliques_additional(k, m),
          additional_closeness(linked_cliques_graph(k, m)).value);
  });
  return r;
}

SweepReport sweep_cases(const Ranges& ranges, double tol) {
  SweepReport r{"cases", tol};
  reject_unknown_keys(ranges, r.target, {"k", "m"});
  Range kr = pick(ranges, "k", 3, 8, 3, r.target);
  Range mr = pick(ranges, "m", 3, 8, 3, r.target);
  for (int k = kr.lo; k <= kr.hi; ++k) {
    for (int m = mr.lo; m <= mr.hi; ++m) {
      Graph g = linked_cliques_graph(k, m);
      double base = closeness(g);
      auto probe = [&](CliqueCase c, Edge removed, Edge added) {
        double brute = closeness(mutate_copy(g, removed, added)) - base;
        r.add(cliques_name(k, m) + " case " + to_string(c) + " del " +
                  to_string(removed) + " add " + to_string(added),
              linked_cliques_delta(c, k, m), brute);
      };
      Edge far_far(k, k + 1);
      Edge endpoint(1, k + 1);
      probe(CliqueCase::A, Edge(1, k + m), far_far);
      if (k >= 4) {
        probe(CliqueCase::B, Edge(2, 3), far_far);
      } else if (m >= 4) {
        probe(CliqueCase::B, Edge(k + 2, k + 3), far_far);
      }
      probe(CliqueCase::C, Edge(1, 2), far_far);
      probe(CliqueCase::D, Edge(1, k), far_far);
      probe(CliqueCase::D, Edge(k + 1, k + m), far_far);
      probe(CliqueCase::E, Edge(2, 3), endpoint);
      probe(CliqueCase::E, Edge(k + 1, k + 2), endpoint);
      probe(CliqueCase::F, Edge(1, 2), endpoint);

      long links = k * long(k - 1) / 2 + m * long(m - 1) / 2 + 1;
      long far_rows = 1 + linked_cliques_case_count(CliqueCase::B, k, m) +
                      linked_cliques_case_count(CliqueCase::C, k, m) +
                      linked_cliques_case_count(CliqueCase::D, k, m);
      long end_rows = 1 + linked_cliques_case_count(CliqueCase::E, k, m) +
                      linked_cliques_case_count(CliqueCase::F, k, m);
      r.add_check(cliques_name(k, m) + " far-far rows cover all links",
                  far_rows == links);
      r.add_check(cliques_name(k, m) + " bridge-endpoint rows cover all links",
                  end_rows == links);
      r.add_check(cliques_name(k, m) + " delta E > delta F",
                  linked_cliques_delta(CliqueCase::E, k, m) >
                      linked_cliques_delta(CliqueCase::F, k, m));
    }
  }
  return r;
}

}  // namespace

std::vector<std::string> sweep_targets() {
  return {"fixtures",  "eq2",      "eq3",        "eq4",      "lemma1",
          "lemma2",    "eq6",      "eq7",        "eq8",      "theorem1",
          "theorem2",  "theorem3", "theorem4",   "theorem5", "corollary1",
          "lollipop",  "additional", "cases"};
}

SweepReport sweep(const std::string& target, const Ranges& ranges,
                  double tolerance) {
  if (target == "fixtures") {
    if (!ranges.empty()) {
      throw std::invalid_argument("target fixtures takes no ranges");
    }
    return sweep_fixtures();
  }
  if (target == "eq2") return sweep_eq2(ranges, tolerance);
  if (target == "eq3") return sweep_eq3(ranges, tolerance);
  if (target == "eq4") return sweep_eq4(ranges, tolerance);
  if (target == "lemma1") return sweep_lemma1(ranges, tolerance);
  if (target == "lemma2") return sweep_lemma2(ranges, tolerance);
  if (target == "eq6") return sweep_eq6(ranges, tolerance);
  if (target == "eq7") return sweep_tail_min("eq7", 0, ranges, tolerance);
  if (target == "eq8") return sweep_tail_min("eq8", 1, ranges, tolerance);
  if (target == "theorem1") return sweep_theorem1(ranges, tolerance);
  if (target == "theorem2") return sweep_theorem2(ranges, tolerance);
  if (target == "theorem3") return sweep_theorem3(ranges, tolerance);
  if (target == "theorem4") return sweep_theorem4(ranges, tolerance);
  if (target == "theorem5") return sweep_theorem5(ranges, tolerance);
  if (target == "corollary1") return sweep_corollary1(ranges, tolerance);
  if (target == "lollipop") return sweep_lollipop(ranges, tolerance);
  if (target == "additional") return sweep_additional(ranges, tolerance);
  if (target == "cases") return sweep_cases(ranges, tolerance);
  throw std::invalid_argument("unknown verify target '" + target + "'");
}

SweepReport fixture_check() { return sweep_fixtures(); }

}  // namespace closekit
