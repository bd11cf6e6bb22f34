// Copyright 2026 The Collabnet Authors
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

#ifndef COLLABNET_STRUCTURE_DEGREE_DISTRIBUTION_H_
#define COLLABNET_STRUCTURE_DEGREE_DISTRIBUTION_H_

#include <cstdint>
#include <map>

#include "absl/status/statusor.h"
#include "collabnet/graph/graph.h"

namespace collabnet {

// degree -> number of nodes with that degree. Degree 0 is included.
using DegreeHistogram = std::map<uint64_t, uint64_t>;

DegreeHistogram DegreeHistogramOf(const Graph& g);

enum class PowerLawMethod {
  // Maximizes the discrete power-law likelihood
  //   L(g) = -n ln zeta(g, xmin) - g * sum ln k
  // over the tail k >= xmin (zeta is the Hurwitz zeta function).
  kExactDiscrete,
  // Closed-form estimate 1 + n / sum ln(k / (xmin - 1/2)). Accurate only when
  // xmin is large (roughly >= 6); biased low for small xmin.
  kContinuousApproximation,
};

struct PowerLawFit {
  double gamma = 0.0;
  uint64_t xmin = 1;
  uint64_t tail_count = 0;  // Nodes with degree >= xmin.
  PowerLawMethod method = PowerLawMethod::kExactDiscrete;
};

// Fails with InvalidArgument when xmin < 1 or the tail has fewer than two
// distinct degrees.
absl::StatusOr<PowerLawFit> FitPowerLaw(
    const DegreeHistogram& histogram, uint64_t xmin = 1,
    PowerLawMethod method = PowerLawMethod::kExactDiscrete);

}  // namespace collabnet

#endif  // COLLABNET_STRUCTURE_DEGREE_DISTRIBUTION_H_
