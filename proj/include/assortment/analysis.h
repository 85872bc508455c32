// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Guarantee checks for the greedy solver under the MNL model: the noisy-gap
// bound, the slack sets used to size the exchange budget, and runtime checks
// of the comparison and loop invariants the guarantees rest on.

#ifndef ASSORTMENT_ANALYSIS_H_
#define ASSORTMENT_ANALYSIS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assortment/assortment.h"
#include "assortment/choice_model.h"
#include "assortment/greedy.h"
#include "assortment/reference.h"
#include "assortment/transform.h"

namespace assortment {

// W_C^max = 1 + sum of the C largest weights.
double MaxTotalWeight(const Instance& instance, int capacity);

// Relative optimality-gap bound for greedy runs on a noisy oracle.
struct GapBound {
  int capacity = 0;
  double eps_max = 0.0;
  double max_total_weight = 1.0;  // W_C^max
  double optimum_weight = 1.0;    // w(M_OPT) = 1 + sum of optimum weights
  double delta_bound = 0.0;       // W_C^max eps / (1 - eps), bounds delta_C
  double eta = 0.0;               // 4 C eps / (1 - eps)
  double f_value = 0.0;           // (W_C^max / w(M_OPT)) eta

  // A bound >= 1 says nothing about a relative gap.
  bool vacuous() const { return f_value >= 1.0; }
};

// Throws kInvalidConfig for eps_max outside [0, 1).
GapBound ComputeBounds(const Instance& instance, int capacity, double eps_max,
                       const ExactSolution& optimum);

// delta_C = max over |M| <= C of w(M) eps(M) / (1 - eps(M)), by enumeration.
// Throws kEnumerationCap for N > 12.
double ExactDeltaC(const Instance& instance, int capacity,
                   const NoiseSpec& noise);

// B_S(u) plus every outside product j with h_{i_S}(u) - h_j(u) <= delta u,
// where i_S is the weakest member of B_S(u). Ascending ids. Throws
// kUndefined when B_S(u) is empty.
std::vector<ProductId> SlackTopSet(const Instance& instance, int max_size,
                                   double delta, double u);

// max over u > 0 of |SlackTopSet(S, delta, u)|, evaluated once on every open
// piece between breakpoints (pairwise crossings, zero crossings and the
// slack-threshold crossings). Isolated breakpoints, where exact ties would
// momentarily add products, are not counted. Returns 0 when B_S(u) is empty
// for all u > 0.
int MaxSlackTopSetSize(const Instance& instance, int max_size, double delta);

// Same maximum over `points` evenly spaced u in [0, max price]; independent
// of the breakpoint enumeration and used to cross-check it.
int MaxSlackTopSetSizeOnGrid(const Instance& instance, int max_size,
                             double delta, int points = 10001);

// Exchange budget that satisfies both guarantees for eps_max:
// max(C + 1, MaxSlackTopSetSize(C, 2 delta_bound) + 1).
int RobustExchangeBudget(const Instance& instance, int capacity,
                         double eps_max);

struct ComparisonCheck {
  double revenue_1 = 0.0;      // R(M1)
  double revenue_2 = 0.0;      // R(M2) = u2
  double transform_1 = 0.0;    // H_{M1}(u2)
  double transform_2 = 0.0;    // H_{M2}(u2)
  bool transform_order = false;  // H_{M1}(u2) >= H_{M2}(u2)
  bool revenue_order = false;    // R(M1) >= R(M2)
  bool near_tie = false;         // |R1 - R2| within rounding; both read as true
  bool holds() const { return near_tie || transform_order == revenue_order; }
};

// H_{M1}(u2) >= H_{M2}(u2) iff R(M1) >= R(M2), with u2 = R(M2).
ComparisonCheck CheckTransformComparison(const Instance& instance,
                                         const Assortment& m1,
                                         const Assortment& m2);

struct TraceViolation {
  int invocation = 0;
  int step_index = 0;
  std::string kind;  // "exchanged_out" or "entering"
  ProductId chosen = 0;
  ProductId rival = 0;
  double chosen_value = 0.0;  // h of the chosen product at u
  double rival_value = 0.0;   // h of the rival at u
  double slack = 0.0;         // delta_C * u
};

// Replays greedy steps at u = R(assortment_after) (exact MNL revenue):
//   exchange: h_{i*}(u) <= h_i(u) + delta u for every i in the pre-step
//             assortment, and h_{j*}(u) >= h_j(u) - delta u for every j in
//             the pre-step candidate pool;
//   add:      the j* inequality.
// A relative tolerance of 1e-9 absorbs rounding. Throws kMalformedTrace if a
// record's before/after states do not match its action.
std::vector<TraceViolation> CheckTraceInvariants(
    const Instance& instance, std::span<const IterationRecord> trace,
    double delta_c);

struct TopSetMonotonicityCheck {
  int size_at_u1 = 0;
  int size_at_u2 = 0;
  bool monotone = true;  // |B_S(u1)| >= |B_S(u2)|
  // With an optimum supplied: for each u <= u_S, S >= |B_S(u)| >= |M_OPT_S|.
  int bracket_points_checked = 0;
  bool bracket_holds = true;
  bool holds() const { return monotone && bracket_holds; }
};

// Requires 0 <= u1 <= u2. `optimum` (optional) must carry per-size optima up
// to at least S.
TopSetMonotonicityCheck CheckTopSetMonotonicity(
    const Instance& instance, int max_size, double u1, double u2,
    const ExactSolution* optimum = nullptr);

}  // namespace assortment

#endif  // ASSORTMENT_ANALYSIS_H_
