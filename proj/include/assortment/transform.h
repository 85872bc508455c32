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

// Revenue-offset transform of MNL revenues.
//
// For an offset u, each product contributes h_i(u) = (p_i - u) w_i and an
// assortment M has H_M(u) = sum_{i in M} h_i(u). With w(M) = 1 + sum w_i,
//
//   H_M(u) = u + w(M) (R(M) - u),
//
// so comparing H at a common u orders assortments by revenue, and H is linear
// in the members. The top set B_S(u) holds the at most S products with the
// largest positive h_i(u); the MNL optimum of size <= S is B_S(u) at the
// optimal revenue u.

#ifndef ASSORTMENT_TRANSFORM_H_
#define ASSORTMENT_TRANSFORM_H_

#include <vector>

#include "assortment/assortment.h"

namespace assortment {

// h_i(u) = (p_i - u) w_i.
double ProductTransform(const Instance& instance, ProductId id, double u);

// H_M(u) = sum over members of h_i(u).
double AssortmentTransform(const Instance& instance, const Assortment& m,
                           double u);

// Top-at-most-S products by h_i(u) among those with h_i(u) > 0. Ties prefer
// the smaller id.
Assortment TopSet(const Instance& instance, int max_size, double u);

// Products ranked by h_i(u) descending, ties by ascending id.
std::vector<ProductId> RankByTransform(const Instance& instance, double u);

// Sorted distinct u >= 0 at which the h-ranking or a sign changes: pairwise
// crossings h_i = h_j and zero crossings u = p_i. Always contains 0.
std::vector<double> TransformBreakpoints(const Instance& instance);

// Every breakpoint, the midpoint of each gap, and one point past the last.
// Covers each constant piece of a function that only changes at breakpoints.
std::vector<double> BreakpointSamples(const std::vector<double>& breakpoints);

// Only the gap midpoints and the point past the last breakpoint: one
// representative of every open piece, none of the isolated breakpoints.
std::vector<double> IntervalSamples(const std::vector<double>& breakpoints);

}  // namespace assortment

#endif  // ASSORTMENT_TRANSFORM_H_
