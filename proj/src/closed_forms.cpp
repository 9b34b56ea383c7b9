#include "closekit/closed_forms.hpp"

#include <cmath>
#include <utility>

namespace closekit {

namespace {

double pow2(int e) { return std::ldexp(1.0, e); }

}  // namespace

double path_closeness(int n) {
  if (n < 1) throw std::domain_error("path needs n >= 1");
  return 2.0 * n - 4.0 + pow2(2 - n);
}

double cycle_closeness(int n) {
  if (n < 3) throw std::domain_error("cycle needs n >= 3");
  if (n % 2 == 0) {
    int k = n / 2;
    return 4.0 * k * (1.0 - 3.0 * pow2(-k - 1));
  }
  int k = (n - 1) / 2;
  return 2.0 * n * (1.0 - pow2(-k));
}

double join_closeness(double c1, double c2, double cp, double cq) {
  return c1 + c2 + (1.0 + cp) * (1.0 + cq);
}

double linked_cliques_closeness(int k, int m) {
  if (k < 2 || m < 2) throw std::domain_error("linked cliques need k,m >= 2");
  return (2.0 * k * k + 2.0 * m * m + 1.0 * k * m - k - m + 1.0) / 4.0;
}

std::string to_string(CliqueCase c) {
  switch (c) {
    case CliqueCase::A: return "A";
    case CliqueCase::B: return "B";
    case CliqueCase::C: return "C";
    case CliqueCase::D: return "D";
    case CliqueCase::E: return "E";
    case CliqueCase::F: return "F";
  }
  return "?";
}

double linked_cliques_delta(CliqueCase c, int k, int m) {
  if (k < 3 || m < 3) throw std::domain_error("case analysis needs k,m >= 3");
  switch (c) {
    case CliqueCase::A:
      return 0.0;
    case CliqueCase::B:
      if (k < 4 && m < 4) {
        throw std::domain_error("case B needs a clique of size >= 4");
      }
      return (k + m - 3.0) / 4.0;
    case CliqueCase::C:
      return (k + m - 4.0) / 4.0;
    case CliqueCase::D:
      return (k + m - 3.0) / 4.0;
    case CliqueCase::E:
      return (k - 1.0) / 4.0;
    case CliqueCase::F:
      return (2.0 * k - m - 4.0) / 8.0;
  }
  throw std::invalid_argument("unknown case");
}

long linked_cliques_case_count(CliqueCase c, int k, int m) {
  if (k < 3 || m < 3) throw std::domain_error("case analysis needs k,m >= 3");
  auto pairs = [](long s) { return s * (s - 1) / 2; };
  switch (c) {
    case CliqueCase::A: return 1;
    case CliqueCase::B: return pairs(k - 2) + pairs(m - 2);
    case CliqueCase::C: return 2L * k + 2L * m - 8;
    case CliqueCase::D: return 2;
    case CliqueCase::E: return pairs(k - 1) + pairs(m);
    case CliqueCase::F: return k - 1;
  }
  throw std::invalid_argument("unknown case");
}

CliquesCriteria linked_cliques_decision(int k, int m) {
  if (k < 3 || m < 3) throw std::domain_error("decision table needs k,m >= 3");
  if (k < m) std::swap(k, m);
  CliquesCriteria out;
  out.k = k;
  out.m = m;
  double c = linked_cliques_closeness(k, m);
  out.mx = c + (k + m - 3.0) / 4.0;
  out.mn = c;
  out.mx_plus_mn = 2.0 * c + (k + m - 3.0) / 4.0;
  if (2 * m >= k + 4) {
    out.reg = (k - 1.0) / 4.0;
    out.regret_strategy = "bridge-endpoint";
  } else if (k + 8 <= 4 * m) {
    out.reg = (3.0 * k + 2.0 - 2.0 * m) / 8.0;
    out.regret_strategy = "bridge-endpoint";
  } else {
    out.reg = (k + m - 3.0) / 4.0;
    out.regret_strategy = "far-far";
  }
  out.av = c + (k + m - 3.0) / 4.0 +
           (11.0 - 3.0 * k - 3.0 * m) /
               (2.0 * (1.0 * k * k - k + 1.0 * m * m - m + 2.0));
  return out;
}

double linked_cliques_additional(int k, int m) {
  if (k < 3 || m < 3) throw std::domain_error("needs k,m >= 3");
  return linked_cliques_closeness(k, m) + (k + m - 1.0) / 4.0;
}

LollipopMaximax lollipop_maximax(int n, int m) {
  // The clique needs a deletable link clear of the path attachment, which
  // n >= 3 guarantees. The best-addition value comes from the brute-force
  // pipeline; only the -1/2 step is closed-form.
  Graph g = lollipop_graph(n, m);
  LinkOptimum add = additional_closeness(g);
  return {add.value - 0.5, add.links};
}

double cycle_tails_closeness(int n, int p, int q) {
  if (n < 3 || p < 0 || q < 0) {
    throw std::domain_error("cycle with tails needs n >= 3 and p,q >= 0");
  }
  double c = cycle_closeness(n);
  return c * (1.0 + (4.0 - pow2(1 - p) - pow2(1 - q)) / n) + 2.0 * p +
         2.0 * q - 3.0 + pow2(-p) + pow2(-q) + pow2(-p - q);
}

double cycle_tail_min(int n, int p) {
  if (n < 3 || p < 0) throw std::domain_error("needs n >= 3 and p >= 0");
  if (n % 2 == 0) {
    int k = n / 2;
    return 4.0 * k + 2.0 * p + 2.0 - 6.0 * (k + 1.0) * pow2(-k) - pow2(1 - p) +
           3.0 * pow2(1 - k - p);
  }
  int k = (n - 1) / 2;
  return 4.0 * k + 2.0 * p + 4.0 - (2.0 * k + 3.0) * pow2(1 - k) - pow2(1 - p) +
         pow2(2 - k - p);
}

CycleMaximin cycle_maximin(int m) {
  if (m < 4) throw std::domain_error("cycle maximin needs m >= 4");
  int q = m / 4;
  CycleMaximin out;
  switch (m % 4) {
    case 0:
      out.value = 8.0 * q + 2.0 - (2.0 * q + 3.0) * pow2(1 - q) - pow2(2 - 2 * q) +
                  pow2(3 - 3 * q);
      out.chord = Edge(1, m / 2 + 1);
      break;
    case 1:
      out.value = 8.0 * q + 4.0 - (2.0 * q + 3.0) * pow2(1 - q) - pow2(1 - 2 * q) +
                  pow2(2 - 3 * q);
      out.chord = Edge(1, 2 * q + 1);
      break;
    case 2:
      out.value = 8.0 * q + 6.0 - 3.0 * (q + 2.0) * pow2(-q) - pow2(1 - 2 * q) +
                  3.0 * pow2(-3 * q);
      out.chord = Edge(1, m / 2 + 1);
      break;
    default:
      out.value = 8.0 * q + 8.0 - 3.0 * (q + 2.0) * pow2(-q) - pow2(-2 * q) +
                  3.0 * pow2(-1 - 3 * q);
      out.chord = Edge(1, 2 * q + 2);
      break;
  }
  return out;
}

}  // namespace closekit
