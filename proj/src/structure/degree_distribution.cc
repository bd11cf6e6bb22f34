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

#include "collabnet/structure/degree_distribution.h"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace collabnet {
namespace {

constexpr double kGammaLower = 1.0 + 1e-6;
constexpr double kGammaUpper = 50.0;

double LogHurwitzZeta(double s, double q) {
  gsl_sf_result result;
  if (gsl_sf_hzeta_e(s, q, &result) != GSL_SUCCESS || result.val <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return std::log(result.val);
}

}  // namespace

DegreeHistogram DegreeHistogramOf(const Graph& g) {
  DegreeHistogram h;
  for (NodeId v = 0; v < g.node_count(); ++v) ++h[g.Degree(v)];
  return h;
}

absl::StatusOr<PowerLawFit> FitPowerLaw(const DegreeHistogram& histogram,
                                        uint64_t xmin, PowerLawMethod method) {
  if (xmin < 1) return absl::InvalidArgumentError("xmin must be >= 1");
  uint64_t n = 0;
  uint64_t distinct = 0;
  double sum_log_k = 0.0;
  double sum_log_shifted = 0.0;
  const double shift = static_cast<double>(xmin) - 0.5;
  for (auto it = histogram.lower_bound(xmin); it != histogram.end(); ++it) {
    if (it->second == 0) continue;
    const double count = static_cast<double>(it->second);
    const double k = static_cast<double>(it->first);
    n += it->second;
    ++distinct;
    sum_log_k += count * std::log(k);
    sum_log_shifted += count * std::log(k / shift);
  }
  if (distinct < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "power-law fit needs at least two distinct degrees >= ", xmin,
        ", found ", distinct));
  }

  PowerLawFit fit;
  fit.xmin = xmin;
  fit.tail_count = n;
  fit.method = method;
  const double approx = 1.0 + static_cast<double>(n) / sum_log_shifted;
  if (method == PowerLawMethod::kContinuousApproximation) {
    fit.gamma = approx;
    return fit;
  }

  gsl_set_error_handler_off();
  // Per-observation negative log-likelihood; convex in gamma.
  const double mean_log_k = sum_log_k / static_cast<double>(n);
  const double q = static_cast<double>(xmin);
  auto nll = [&](double gamma) {
    return LogHurwitzZeta(gamma, q) + gamma * mean_log_k;
  };
  const auto [gamma, value] = boost::math::tools::brent_find_minima(
      nll, kGammaLower, kGammaUpper, std::numeric_limits<double>::digits / 2);
  if (!std::isfinite(value)) {
    return absl::InternalError("power-law likelihood could not be evaluated");
  }
  fit.gamma = gamma;
  return fit;
}

}  // namespace collabnet
