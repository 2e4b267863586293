// Copyright 2026 The stdassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stdassoc/rankcompare.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "stdassoc/errors.hpp"

namespace stdassoc {
namespace {

std::int64_t tied_pairs(std::int64_t run) { return run * (run - 1) / 2; }

// Sorts v ascending and returns the number of inversions removed.
std::int64_t merge_count(std::vector<double>& v, std::vector<double>& buf) {
  const std::size_t n = v.size();
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          swaps += static_cast<std::int64_t>(mid - i);
          buf[k++] = v[j++];
        } else {
          buf[k++] = v[i++];
        }
      }
      while (i < mid) buf[k++] = v[i++];
      while (j < hi) buf[k++] = v[j++];
    }
    std::swap(v, buf);
  }
  return swaps;
}

}  // namespace

TauCounts tau_counts(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("tau-b inputs differ in length");
  if (x.size() < 2) throw DomainError("tau-b needs at least two observations");
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    if (std::isnan(x[i]) || std::isnan(y[i])) throw DomainError("tau-b input contains NaN");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });

  TauCounts c;
  c.pairs = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  std::int64_t run_x = 1, run_xy = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const double x0 = x[order[i - 1]], x1 = x[order[i]];
    const double y0 = y[order[i - 1]], y1 = y[order[i]];
    if (x1 == x0) {
      ++run_x;
      if (y1 == y0) {
        ++run_xy;
      } else {
        c.ties_xy += tied_pairs(run_xy);
        run_xy = 1;
      }
    } else {
      c.ties_x += tied_pairs(run_x);
      c.ties_xy += tied_pairs(run_xy);
      run_x = run_xy = 1;
    }
  }
  c.ties_x += tied_pairs(run_x);
  c.ties_xy += tied_pairs(run_xy);

  std::vector<double> ys(n), buf(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  const std::int64_t swaps = merge_count(ys, buf);

  std::int64_t run_y = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (ys[i] == ys[i - 1]) {
      ++run_y;
    } else {
      c.ties_y += tied_pairs(run_y);
      run_y = 1;
    }
  }
  c.ties_y += tied_pairs(run_y);

  c.concordant_minus_discordant = c.pairs - c.ties_x - c.ties_y + c.ties_xy - 2 * swaps;
  return c;
}

double tau_b_from_counts(const TauCounts& c) {
  const std::int64_t dx = c.pairs - c.ties_x;
  const std::int64_t dy = c.pairs - c.ties_y;
  if (dx == 0 || dy == 0) throw DomainError("undefined tau-b");
  return static_cast<double>(c.concordant_minus_discordant) /
         std::sqrt(static_cast<double>(dx) * static_cast<double>(dy));
}

double tau_b(std::span<const double> x, std::span<const double> y) {
  return tau_b_from_counts(tau_counts(x, y));
}

TauBReport tau_b_by_decile(std::span<const double> raw, std::span<const double> standardized) {
  if (raw.size() != standardized.size()) throw DomainError("tau-b inputs differ in length");
  if (raw.size() < 10) throw DomainError("decile breakdown needs at least 10 rules");
  const std::size_t n = raw.size();

  TauBReport report;
  report.n_rules = n;
  report.overall = tau_b(raw, standardized);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });

  const std::size_t base = n / 10, extra = n % 10;
  std::size_t start = 0;
  std::vector<double> bx, by;
  for (std::size_t d = 0; d < 10; ++d) {
    const std::size_t len = base + (d < extra ? 1 : 0);
    bx.clear();
    by.clear();
    for (std::size_t i = start; i < start + len; ++i) {
      bx.push_back(raw[order[i]]);
      by.push_back(standardized[order[i]]);
    }
    start += len;
    if (len < 2) continue;
    const TauCounts c = tau_counts(bx, by);
    if (c.pairs == c.ties_x || c.pairs == c.ties_y) continue;
    report.by_decile[d] = tau_b_from_counts(c);
  }
  return report;
}

}  // namespace stdassoc
