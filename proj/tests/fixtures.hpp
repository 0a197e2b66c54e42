#pragma once

// Hand-worked complete split instances with their published intermediate data.

#include <string>
#include <vector>

#include "hullcert/interval_set.hpp"
#include "hullcert/rational.hpp"

namespace fixture {

using hullcert::IntervalSet;
using hullcert::Rational;

inline Rational r(const char* s) { return Rational::parse(s); }

inline IntervalSet sets(std::vector<std::pair<const char*, const char*>> parts) {
  std::vector<hullcert::Interval> raw;
  for (const auto& [lo, hi] : parts) raw.push_back({r(lo), r(hi)});
  return IntervalSet::make(raw);
}

inline std::vector<Rational> list(const char* text) { return hullcert::parse_rational_list(text); }

// n1 = 4, n2 = 5.
struct Small {
  int n1 = 4;
  int n2 = 5;
  std::vector<Rational> x = list("0.85,0.8,0.7,0.5,0.8,0.6,0.5,0.3,0.1");
  std::vector<IntervalSet> X = {
      sets({{"0.3", "1"}, {"0.1", "0.25"}}),  sets({{"0.25", "1"}, {"0", "0.05"}}),
      sets({{"0.5", "1"}, {"0.05", "0.25"}}), sets({{"0.6", "1"}, {"0.25", "0.35"}}),
      sets({{"0", "0.8"}}),                   sets({{"0", "0.6"}}),
      sets({{"0", "0.5"}}),                   sets({{"0", "0.3"}}),
      sets({{"0", "0.1"}})};
  Rational edge_sum = r("8.05");
};

struct Step {
  IntervalSet X;
  std::vector<Rational> a;           // a_0..a_L
  std::vector<std::vector<int>> A;   // A_1..A_L
};

// n1 = 8, n2 = 13: every step of the greedy construction.
struct Large {
  int n1 = 8;
  int n2 = 13;
  std::vector<Rational> x =
      list("0.9,0.85,0.53,0.49,0.44,0.23,0.16,0.1,0.96,0.89,0.82,0.75,0.67,0.59,0.55,0.45,0.38,0.29,0.22,0.15,0.07");
  std::vector<Step> steps = {
      {sets({{"0.07", "0.12"}, {"0.15", "1"}}), list("1,0.96,0.89,0.82,0.75,0.67,0.59,0.55,0.45,0.38,0.29,0.22,0.12,0"),
       {{9}, {10}, {11}, {12}, {13}, {14}, {15}, {16}, {17}, {18}, {19}, {1, 20, 21}, {22}}},
      {sets({{"0.12", "0.19"}, {"0.22", "1"}}), list("1,0.96,0.89,0.82,0.75,0.67,0.59,0.55,0.45,0.38,0.29,0.19,0"),
       {{9}, {10}, {11}, {12}, {13}, {14}, {15}, {16}, {17}, {18}, {1, 2, 19, 20, 21}, {22}}},
      {sets({{"0.45", "0.53"}, {"0.55", "1"}}), list("1,0.96,0.89,0.82,0.75,0.67,0.59,0.53,0.38,0.29,0.19,0"),
       {{9}, {10}, {11}, {12}, {13}, {14}, {3, 15, 16}, {17}, {18}, {1, 2, 19, 20, 21}, {22}}},
      {sets({{"0.38", "0.4"}, {"0.53", "1"}}), list("1,0.96,0.89,0.82,0.75,0.67,0.59,0.4,0.29,0.19,0"),
       {{9}, {10}, {11}, {12}, {13}, {14}, {3, 4, 15, 16, 17}, {18}, {1, 2, 19, 20, 21}, {22}}},
      {sets({{"0.4", "0.43"}, {"0.59", "1"}}), list("1,0.96,0.89,0.82,0.75,0.67,0.43,0.29,0.19,0"),
       {{9}, {10}, {11}, {12}, {13}, {3, 4, 5, 14, 15, 16, 17}, {18}, {1, 2, 19, 20, 21}, {22}}},
      {sets({{"0.75", "0.8"}, {"0.82", "1"}}), list("1,0.96,0.89,0.8,0.67,0.43,0.29,0.19,0"),
       {{9}, {10}, {6, 11, 12}, {13}, {3, 4, 5, 14, 15, 16, 17}, {18}, {1, 2, 19, 20, 21}, {22}}},
      {sets({{"0.8", "0.85"}, {"0.89", "1"}}), list("1,0.96,0.85,0.67,0.43,0.29,0.19,0"),
       {{9}, {6, 7, 10, 11, 12}, {13}, {3, 4, 5, 14, 15, 16, 17}, {18}, {1, 2, 19, 20, 21}, {22}}},
      {sets({{"0.85", "0.91"}, {"0.96", "1"}}), list("1,0.91,0.67,0.43,0.29,0.19,0"),
       {{6, 7, 8, 9, 10, 11, 12}, {13}, {3, 4, 5, 14, 15, 16, 17}, {18}, {1, 2, 19, 20, 21}, {22}}},
  };
  std::vector<int> S = {10, 11, 14, 15, 16, 19, 20};
  std::vector<Rational> h_breaks = list("0,0.07,0.19,0.38,0.43,0.75,0.91,0.96");
  std::vector<int> h_values = {7, 8, 7, 8, 7, 8, 7, 8};
};

}  // namespace fixture
