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

#include "testing/oracles.h"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <limits>

namespace collabnet::testing {
namespace {

std::vector<std::vector<int>> Dense(NodeId n, const EdgeList& edges) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    a[u][v] = 1;
    a[v][u] = 1;
  }
  return a;
}

}  // namespace

double PairSumModularity(NodeId n, const EdgeList& edges,
                         const std::vector<uint32_t>& labels) {
  const auto a = Dense(n, edges);
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) k[i] += a[i][j];
    two_m += k[i];
  }
  double q = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (labels[i] != labels[j]) continue;
      q += a[i][j] - k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

double ExhaustiveMaxModularity(NodeId n, const EdgeList& edges) {
  // Restricted growth strings enumerate each set partition once.
  std::vector<uint32_t> labels(n, 0);
  double best = -std::numeric_limits<double>::infinity();
  std::function<void(NodeId, uint32_t)> rec = [&](NodeId i, uint32_t used) {
    if (i == n) {
      best = std::max(best, PairSumModularity(n, edges, labels));
      return;
    }
    for (uint32_t c = 0; c <= used && c < n; ++c) {
      labels[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n > 0) {
    labels[0] = 0;
    rec(1, 1);
  }
  return best;
}

DenseEigen DominantEigenpair(NodeId n, const EdgeList& edges) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : edges) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::Index top = n - 1;  // Eigenvalues come sorted ascending.
  Eigen::VectorXd x = solver.eigenvectors().col(top);
  if (x.sum() < 0) x = -x;
  DenseEigen out;
  out.eigenvalue = solver.eigenvalues()(top);
  out.vector.assign(x.data(), x.data() + n);
  return out;
}

std::vector<uint32_t> NaiveCoreNumbers(NodeId n, const EdgeList& edges) {
  const auto a = Dense(n, edges);
  std::vector<uint32_t> core(n, 0);
  for (uint32_t k = 1; k <= n; ++k) {
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
      changed = false;
      for (NodeId v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        uint32_t live = 0;
        for (NodeId u = 0; u < n; ++u) live += alive[u] && a[v][u];
        if (live < k) {
          alive[v] = false;
          changed = true;
        }
      }
    }
    bool any = false;
    for (NodeId v = 0; v < n; ++v) {
      if (alive[v]) {
        core[v] = k;
        any = true;
      }
    }
    if (!any) break;
  }
  return core;
}

NaiveMeasures EvaluateNaive(const std::vector<std::vector<AuthorId>>& lists,
                            const std::set<AuthorId>& a) {
  NaiveMeasures m;
  for (uint32_t p = 0; p < lists.size(); ++p) {
    uint32_t inside = 0;
    for (AuthorId x : lists[p]) inside += a.count(x);
    if (inside == 0) continue;
    m.p.insert(p);
    if (lists[p].size() >= 2) m.cp.insert(p);
    if (inside >= 2) m.cp_intra.insert(p);
  }
  for (AuthorId x : a) {
    for (const auto& list : lists) {
      if (std::find(list.begin(), list.end(), x) == list.end()) continue;
      for (AuthorId y : list) {
        if (y != x) m.ca.insert(y);
      }
    }
  }
  uint64_t pairs = 0;
  for (auto i = a.begin(); i != a.end(); ++i) {
    for (auto j = std::next(i); j != a.end(); ++j) {
      for (const auto& list : lists) {
        const bool has_i =
            std::find(list.begin(), list.end(), *i) != list.end();
        const bool has_j =
            std::find(list.begin(), list.end(), *j) != list.end();
        if (has_i && has_j) {
          ++pairs;
          break;
        }
      }
    }
  }
  const double k = static_cast<double>(a.size());
  if (a.empty()) return m;
  m.ap = m.p.size() / k;
  m.acp = m.cp.size() / k;
  m.aca = m.ca.size() / k;
  if (!m.cp.empty()) {
    m.cpr_intra = static_cast<double>(m.cp_intra.size()) / m.cp.size();
  }
  if (a.size() >= 2) m.cad = pairs / (k * (k - 1) / 2.0);
  return m;
}

std::set<std::pair<std::string, std::string>> NaiveCoauthorPairs(
    const std::vector<PublicationRecord>& records) {
  std::set<std::string> names;
  for (const auto& r : records)
    names.insert(r.authors.begin(), r.authors.end());
  std::set<std::pair<std::string, std::string>> pairs;
  for (const std::string& x : names) {
    for (const std::string& y : names) {
      if (x >= y) continue;
      for (const auto& r : records) {
        const auto& list = r.authors;
        if (std::find(list.begin(), list.end(), x) != list.end() &&
            std::find(list.begin(), list.end(), y) != list.end()) {
          pairs.emplace(x, y);
          break;
        }
      }
    }
  }
  return pairs;
}

}  // namespace collabnet::testing
