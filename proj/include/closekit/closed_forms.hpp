#pragma once

#include <string>

#include "closekit/graph.hpp"
#include "closekit/metrics.hpp"

namespace closekit {

// Closed-form closeness values and decision quantities for the parametric
// families. Every function matches the brute-force pipeline on its stated
// domain unless noted otherwise; the verify targets compare the two.

double path_closeness(int n);   // n >= 1
double cycle_closeness(int n);  // n >= 3

// Closeness of two disjoint graphs joined by one new link, from the parts'
// closeness values c1, c2 and the vertex closenesses cp, cq of the two
// endpoints the link connects.
double join_closeness(double c1, double c2, double cp, double cq);

// Two cliques K_k and K_m joined by one link; k,m >= 2.
double linked_cliques_closeness(int k, int m);

// Structural cases of a (deleted link, added link) play on the linked
// cliques, for an added link joining the two cliques. Letters follow the
// payoff-table case analysis: the deleted link is inside a clique or is the
// bridge, and the added link endpoints avoid or hit the bridge endpoints.
enum class CliqueCase { A, B, C, D, E, F };

std::string to_string(CliqueCase c);

// Closeness gain of the mutated graph over the intact linked cliques for
// each case; k,m >= 3. Cases E and F fix the added link at the K_k-side
// bridge endpoint. Case B needs a clique of size >= 4.
double linked_cliques_delta(CliqueCase c, int k, int m);

// Number of payoff cells realizing each case; k,m >= 3.
long linked_cliques_case_count(CliqueCase c, int k, int m);

// Decision quantities of the linked-cliques payoff table; k,m >= 3.
// Computed after normalizing to k >= m. mx/mn are the best attainable
// column max / column min, reg the smallest column spread, av the best
// column mean. regret_strategy tags the added link family attaining reg:
// far-far joins two non-bridge vertices, bridge-endpoint joins a bridge
// endpoint to the far clique.
struct CliquesCriteria {
  int k = 0;
  int m = 0;
  double mx = 0.0;
  double mn = 0.0;
  double mx_plus_mn = 0.0;
  double reg = 0.0;
  double av = 0.0;
  std::string regret_strategy;
};

CliquesCriteria linked_cliques_decision(int k, int m);

// Best closeness after adding one link to the linked cliques; k,m >= 3.
double linked_cliques_additional(int k, int m);

// Best optimistic outcome on the lollipop: one link is added, then the most
// favourable deletion is assumed. Value and the added links attaining it.
struct LollipopMaximax {
  double value = 0.0;
  std::vector<Edge> links;
};

LollipopMaximax lollipop_maximax(int n, int m);  // n >= 3, m >= 1

// Cycle with two tails; n >= 3, p,q >= 0.
double cycle_tails_closeness(int n, int p, int q);

// Closeness of the n-cycle carrying all p tail vertices in a single tail.
// Over every two-tail split with the same total this is the minimum;
// n >= 3, p >= 0.
double cycle_tail_min(int n, int p);

// Guaranteed closeness of the best chord built on the cycle C_m before an
// adversary deletes one link; m >= 4. chord is a best addition.
struct CycleMaximin {
  double value = 0.0;
  Edge chord;
};

CycleMaximin cycle_maximin(int m);

}  // namespace closekit
