// Copyright 2026 The xgcvqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xgc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <Eigen/Dense>

#include "xgc/error.hpp"

namespace xgc::stats {

namespace {

void check_pair(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), ErrorKind::kInvalidArgument, "correlation inputs differ in length");
  require(a.size() >= 2, ErrorKind::kInvalidArgument, "correlation needs at least two pairs");
}

std::int64_t pairs(std::int64_t t) { return t * (t - 1) / 2; }

// Sorts v in place and returns the number of strictly inverted pairs.
std::int64_t count_inversions(std::vector<double>& v, std::vector<double>& scratch,
                              std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

template <typename Eq>
std::int64_t tied_pairs(std::size_t n, Eq equal) {
  std::int64_t total = 0;
  std::int64_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (equal(i - 1, i)) {
      ++run;
    } else {
      total += pairs(run);
      run = 1;
    }
  }
  return total + pairs(run);
}

}  // namespace

double mean(std::span<const double> v) {
  require(!v.empty(), ErrorKind::kInvalidArgument, "mean of empty sequence");
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  require(!v.empty(), ErrorKind::kInvalidArgument, "median of empty sequence");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return v[i] < v[j]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && v[order[j]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j - 1) + 1.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

Correlation pearson(std::span<const double> a, std::span<const double> b) {
  check_pair(a, b);
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return {0.0, true};
  return {std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0), false};
}

Correlation srocc(std::span<const double> a, std::span<const double> b) {
  check_pair(a, b);
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  return pearson(ra, rb);
}

Correlation krocc(std::span<const double> a, std::span<const double> b) {
  check_pair(a, b);
  const std::size_t n = a.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) {
    return a[i] < a[j] || (a[i] == a[j] && b[i] < b[j]);
  });

  const auto n0 = pairs(static_cast<std::int64_t>(n));
  const auto ties_a = tied_pairs(n, [&](auto i, auto j) { return a[order[i]] == a[order[j]]; });
  const auto ties_ab = tied_pairs(n, [&](auto i, auto j) {
    return a[order[i]] == a[order[j]] && b[order[i]] == b[order[j]];
  });

  std::vector<double> bs(n), scratch(n);
  for (std::size_t i = 0; i < n; ++i) bs[i] = b[order[i]];
  const auto swaps = count_inversions(bs, scratch, 0, n);
  const auto ties_b = tied_pairs(n, [&](auto i, auto j) { return bs[i] == bs[j]; });

  const auto denom_a = n0 - ties_a;
  const auto denom_b = n0 - ties_b;
  if (denom_a == 0 || denom_b == 0) return {0.0, true};
  const double numer = static_cast<double>(n0 - ties_a - ties_b + ties_ab - 2 * swaps);
  const double tau =
      numer / std::sqrt(static_cast<double>(denom_a) * static_cast<double>(denom_b));
  return {std::clamp(tau, -1.0, 1.0), false};
}

double Logistic4::operator()(double v) const {
  return b2 + (b1 - b2) / (1.0 + std::exp(-(v - b3) / std::fabs(b4)));
}

Logistic4 fit_logistic(std::span<const double> a, std::span<const double> b) {
  check_pair(a, b);
  const auto n = static_cast<Eigen::Index>(a.size());
  Logistic4 p;
  p.b1 = *std::max_element(b.begin(), b.end());
  p.b2 = *std::min_element(b.begin(), b.end());
  p.b3 = mean(a);
  double var = 0.0;
  for (double v : a) var += (v - p.b3) * (v - p.b3);
  p.b4 = var > 0.0 ? std::sqrt(var / static_cast<double>(a.size())) : 1.0;

  const auto sse = [&](const Logistic4& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double r = q(a[i]) - b[i];
      s += r * r;
    }
    return s;
  };

  double current = sse(p);
  double damping = 1e-3;
  Eigen::MatrixXd jac(n, 4);
  Eigen::VectorXd res(n);
  for (int iter = 0; iter < 200; ++iter) {
    const double scale = std::fabs(p.b4);
    const double sign = p.b4 < 0.0 ? -1.0 : 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double v = a[static_cast<std::size_t>(i)];
      const double s = 1.0 / (1.0 + std::exp(-(v - p.b3) / scale));
      const double ds = (p.b1 - p.b2) * s * (1.0 - s);
      jac(i, 0) = s;
      jac(i, 1) = 1.0 - s;
      jac(i, 2) = -ds / scale;
      jac(i, 3) = -ds * (v - p.b3) * sign / (p.b4 * p.b4);
      res(i) = p(v) - b[static_cast<std::size_t>(i)];
    }
    const Eigen::Matrix4d jtj = jac.transpose() * jac;
    const Eigen::Vector4d grad = jac.transpose() * res;
    bool improved = false;
    while (damping < 1e12) {
      Eigen::Matrix4d lhs = jtj;
      for (int d = 0; d < 4; ++d) lhs(d, d) += damping * std::max(jtj(d, d), 1e-12);
      const Eigen::Vector4d step = lhs.ldlt().solve(-grad);
      Logistic4 trial{p.b1 + step(0), p.b2 + step(1), p.b3 + step(2), p.b4 + step(3)};
      if (std::fabs(trial.b4) < 1e-12 || !std::isfinite(trial.b1 + trial.b2 + trial.b3 + trial.b4)) {
        damping *= 10.0;
        continue;
      }
      const double candidate = sse(trial);
      if (candidate < current) {
        const double gain = current - candidate;
        p = trial;
        current = candidate;
        damping = std::max(damping / 10.0, 1e-12);
        improved = gain > 1e-14 * std::max(current, 1e-300);
        break;
      }
      damping *= 10.0;
    }
    if (!improved) break;
  }
  return p;
}

Correlation plcc(std::span<const double> a, std::span<const double> b, bool logistic) {
  check_pair(a, b);
  if (!logistic) return pearson(a, b);
  const auto f = fit_logistic(a, b);
  std::vector<double> mapped(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mapped[i] = f(a[i]);
  return pearson(mapped, b);
}

}  // namespace xgc::stats
