#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "closekit/closed_forms.hpp"
#include "closekit/decision.hpp"
#include "closekit/metrics.hpp"

using namespace closekit;
using doctest::Approx;

TEST_CASE("path closeness") {
  CHECK(path_closeness(1) == 0.0);
  CHECK(path_closeness(2) == 1.0);
  CHECK(path_closeness(4) == 4.25);
  CHECK(path_closeness(10) == 16.00390625);
  CHECK_THROWS_AS(path_closeness(0), std::domain_error);
  for (int n = 1; n <= 12; ++n) {
    CHECK(path_closeness(n) == Approx(closeness(path_graph(n))).epsilon(1e-12));
  }
}

TEST_CASE("cycle closeness") {
  CHECK(cycle_closeness(3) == 3.0);
  CHECK(cycle_closeness(4) == 5.0);
  CHECK(cycle_closeness(6) == 9.75);
  CHECK(cycle_closeness(7) == 12.25);
  CHECK_THROWS_AS(cycle_closeness(2), std::domain_error);
  for (int n = 3; n <= 12; ++n) {
    CHECK(cycle_closeness(n) == Approx(closeness(cycle_graph(n))).epsilon(1e-12));
  }
}

TEST_CASE("one-link join formula") {
  // Two triangles joined by a link: the linked-cliques value.
  CHECK(join_closeness(3.0, 3.0, 1.0, 1.0) == 10.0);
  // Two 2-paths joined end to end form the 4-path.
  CHECK(join_closeness(1.0, 1.0, 0.5, 0.5) == 4.25);
  // Pendant vertex: the second part is a lone vertex.
  CHECK(join_closeness(9.75, 0.0, vertex_closeness(cycle_graph(6), 1), 0.0) ==
        Approx(closeness(cycle_tails_graph(6, 1, 0))).epsilon(1e-12));
}

TEST_CASE("linked cliques closeness") {
  CHECK(linked_cliques_closeness(2, 2) == 4.25);  // the 4-path in disguise
  CHECK(linked_cliques_closeness(3, 3) == 10.0);
  CHECK(linked_cliques_closeness(4, 3) == 14.0);
  CHECK(linked_cliques_closeness(3, 4) == 14.0);
  CHECK_THROWS_AS(linked_cliques_closeness(1, 3), std::domain_error);
  for (int k = 2; k <= 7; ++k) {
    for (int m = 2; m <= 7; ++m) {
      CHECK(linked_cliques_closeness(k, m) ==
            Approx(closeness(linked_cliques_graph(k, m))).epsilon(1e-12));
    }
  }
}

TEST_CASE("clique case deltas") {
  CHECK(linked_cliques_delta(CliqueCase::A, 5, 4) == 0.0);
  CHECK(linked_cliques_delta(CliqueCase::B, 4, 4) == 1.25);
  CHECK(linked_cliques_delta(CliqueCase::C, 3, 3) == 0.5);
  CHECK(linked_cliques_delta(CliqueCase::D, 3, 3) == 0.75);
  CHECK(linked_cliques_delta(CliqueCase::E, 3, 3) == 0.5);
  CHECK(linked_cliques_delta(CliqueCase::F, 3, 3) == -0.125);
  CHECK_THROWS_AS(linked_cliques_delta(CliqueCase::B, 3, 3), std::domain_error);
  CHECK_NOTHROW(linked_cliques_delta(CliqueCase::B, 3, 4));
  CHECK_THROWS_AS(linked_cliques_delta(CliqueCase::A, 2, 3), std::domain_error);

  // Brute-force spot checks: apply a representative play and diff.
  Graph g44 = linked_cliques_graph(4, 4);
  double base44 = closeness(g44);
  CHECK(closeness(mutate_copy(g44, Edge(2, 3), Edge(4, 5))) - base44 ==
        Approx(1.25).epsilon(1e-12));
  Graph g33 = linked_cliques_graph(3, 3);
  double base33 = closeness(g33);
  CHECK(closeness(mutate_copy(g33, Edge(1, 2), Edge(1, 4))) - base33 ==
        Approx(-0.125).epsilon(1e-12));
  CHECK(closeness(mutate_copy(g33, Edge(1, 6), Edge(3, 4))) == base33);
}

TEST_CASE("clique case multiplicities") {
  CHECK(linked_cliques_case_count(CliqueCase::A, 3, 3) == 1);
  CHECK(linked_cliques_case_count(CliqueCase::B, 3, 3) == 0);
  CHECK(linked_cliques_case_count(CliqueCase::B, 4, 4) == 2);
  CHECK(linked_cliques_case_count(CliqueCase::C, 3, 3) == 4);
  CHECK(linked_cliques_case_count(CliqueCase::D, 8, 3) == 2);
  CHECK(linked_cliques_case_count(CliqueCase::E, 3, 3) == 4);
  CHECK(linked_cliques_case_count(CliqueCase::F, 3, 3) == 2);

  // Each strategy's cases partition the deletable links.
  for (int k = 3; k <= 8; ++k) {
    for (int m = 3; m <= 8; ++m) {
      long links = k * (k - 1) / 2 + m * (m - 1) / 2 + 1;
      CHECK(1 + linked_cliques_case_count(CliqueCase::B, k, m) +
                linked_cliques_case_count(CliqueCase::C, k, m) +
                linked_cliques_case_count(CliqueCase::D, k, m) ==
            links);
      CHECK(1 + linked_cliques_case_count(CliqueCase::E, k, m) +
                linked_cliques_case_count(CliqueCase::F, k, m) ==
            links);
    }
  }
}

TEST_CASE("linked cliques decision summary") {
  CliquesCriteria c33 = linked_cliques_decision(3, 3);
  CHECK(c33.mx == 10.75);
  CHECK(c33.mn == 10.0);
  CHECK(c33.mx_plus_mn == 20.75);
  CHECK(c33.reg == 0.625);
  CHECK(c33.av == 10.5);
  CHECK(c33.regret_strategy == "bridge-endpoint");

  CliquesCriteria c53 = linked_cliques_decision(5, 3);
  CHECK(c53.reg == 1.25);
  CHECK(c53.regret_strategy == "far-far");

  CliquesCriteria c55 = linked_cliques_decision(5, 5);
  CHECK(c55.reg == 1.0);
  CHECK(c55.regret_strategy == "bridge-endpoint");

  // Inputs are symmetric: the smaller clique is moved to the second slot.
  CliquesCriteria swapped = linked_cliques_decision(3, 5);
  CHECK(swapped.k == 5);
  CHECK(swapped.m == 3);
  CHECK(swapped.reg == c53.reg);
  CHECK(swapped.mx == c53.mx);

  // The two regret branches meet where 2m = k+4.
  for (int m = 4; m <= 10; ++m) {
    int k = 2 * m - 4;
    CHECK((k - 1.0) / 4.0 == Approx((3.0 * k + 2.0 - 2.0 * m) / 8.0));
  }

  CHECK_THROWS_AS(linked_cliques_decision(2, 3), std::domain_error);
}

TEST_CASE("best addition to linked cliques") {
  CHECK(linked_cliques_additional(3, 3) == 11.25);
  CHECK(linked_cliques_additional(4, 3) == 15.5);
  for (int k = 3; k <= 8; ++k) {
    for (int m = 3; m <= k; ++m) {
      CHECK(linked_cliques_additional(k, m) -
                linked_cliques_decision(k, m).mx ==
            Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("lollipop maximax") {
  LollipopMaximax l31 = lollipop_maximax(3, 1);
  CHECK(l31.value == 5.0);
  CHECK(l31.links == std::vector<Edge>{{1, 4}, {2, 4}});

  LollipopMaximax l42 = lollipop_maximax(4, 2);
  CHECK(l42.value == 11.5);
  CHECK(l42.value <
        additional_closeness(lollipop_graph(4, 2)).value);  // strict drop

  // Equivalence with the table optimum holds here (not at every size).
  PayoffTable t = build_payoff_table(lollipop_graph(4, 2));
  CHECK(decide(t, Criterion::optimistic()).optimum ==
        Approx(l42.value).epsilon(1e-12));

  CHECK_THROWS_AS(lollipop_maximax(2, 1), std::domain_error);
  CHECK_THROWS_AS(lollipop_maximax(3, 0), std::domain_error);
}

TEST_CASE("cycle with tails closeness") {
  CHECK(cycle_tails_closeness(4, 1, 1) == 9.75);
  for (int n = 3; n <= 8; ++n) {
    CHECK(cycle_tails_closeness(n, 0, 0) == Approx(cycle_closeness(n)).epsilon(1e-12));
  }
  CHECK(cycle_tails_closeness(5, 2, 0) ==
        Approx(closeness(cycle_tails_graph(5, 2, 0))).epsilon(1e-12));
  CHECK(cycle_tails_closeness(6, 3, 2) ==
        Approx(closeness(cycle_tails_graph(6, 3, 2))).epsilon(1e-12));
  CHECK_THROWS_AS(cycle_tails_closeness(2, 1, 1), std::domain_error);
  CHECK_THROWS_AS(cycle_tails_closeness(4, -1, 0), std::domain_error);
}

TEST_CASE("single-tail minimum") {
  CHECK(cycle_tail_min(4, 1) == 7.25);
  CHECK(cycle_tail_min(5, 1) == 10.0);
  for (int n = 3; n <= 9; ++n) {
    CHECK(cycle_tail_min(n, 0) == Approx(cycle_closeness(n)).epsilon(1e-12));
  }
  // Same value as the two-tail formula with everything on one side.
  for (int n = 3; n <= 9; ++n) {
    for (int p = 0; p <= 5; ++p) {
      CHECK(cycle_tail_min(n, p) ==
            Approx(cycle_tails_closeness(n, p, 0)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(cycle_tail_min(2, 1), std::domain_error);
}

TEST_CASE("cycle maximin") {
  CycleMaximin m4 = cycle_maximin(4);
  CHECK(m4.value == 5.0);
  CHECK(m4.chord == Edge(1, 3));

  CycleMaximin m6 = cycle_maximin(6);
  CHECK(m6.value == 9.375);
  CHECK(m6.chord == Edge(1, 4));

  CycleMaximin m8 = cycle_maximin(8);
  CHECK(m8.value == 14.375);
  CHECK(m8.chord == Edge(1, 5));

  CycleMaximin m9 = cycle_maximin(9);
  CHECK(m9.chord == Edge(1, 5));
  PayoffTable t9 = build_payoff_table(cycle_graph(9));
  CHECK(decide(t9, Criterion::pessimistic()).optimum ==
        Approx(m9.value).epsilon(1e-12));

  CycleMaximin m11 = cycle_maximin(11);
  CHECK(m11.chord == Edge(1, 6));

  CHECK_THROWS_AS(cycle_maximin(3), std::domain_error);
}

TEST_CASE("parity of the surviving cycle") {
  // Whoever builds the chord prefers the parity the branch formulas pick:
  // odd survivors for m = 4q, even survivors for m = 4q+2.
  for (int q = 2; q <= 6; ++q) {
    int m = 4 * q;
    double odd_pick = cycle_maximin(m).value;
    double even_alt = std::min(cycle_tail_min(2 * q, 2 * q),
                               cycle_tail_min(2 * q + 2, 2 * q - 2));
    CHECK(odd_pick > even_alt);

    m = 4 * q + 2;
    double even_pick = cycle_maximin(m).value;
    double odd_alt = std::min(cycle_tail_min(2 * q + 1, 2 * q + 1),
                              cycle_tail_min(2 * q + 3, 2 * q - 1));
    CHECK(even_pick > odd_alt);
  }
}

TEST_CASE("tail formulas grow with the cycle") {
  for (int p = 0; p <= 4; ++p) {
    for (int k = 2; k < 12; ++k) {
      CHECK(cycle_tail_min(2 * k + 2, p) > cycle_tail_min(2 * k, p));
      CHECK(cycle_tail_min(2 * k + 3, p) > cycle_tail_min(2 * k + 1, p));
    }
  }
}
