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

#pragma once

// Independent reference implementations used only by tests. None of these
// call into the library's counting, mining, measure or ranking code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "stdassoc/transactions.hpp"

namespace oracle {

using Items = std::vector<stdassoc::ItemId>;

// Horizontal scan: transactions containing every item.
inline std::uint64_t count(const stdassoc::TransactionSet& ts, const Items& items) {
  std::uint64_t c = 0;
  for (const auto& t : ts.transactions()) {
    const auto row = t.items();
    bool all = true;
    for (auto id : items)
      if (std::find(row.begin(), row.end(), id) == row.end()) {
        all = false;
        break;
      }
    c += all ? 1 : 0;
  }
  return c;
}

// Every itemset up to max_len with count >= min_count, keyed by items.
inline std::map<Items, std::uint64_t> frequent(const stdassoc::TransactionSet& ts,
                                               std::uint64_t min_count, std::size_t max_len) {
  const std::size_t k = ts.num_items();
  std::map<Items, std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Items items;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1U) items.push_back(static_cast<stdassoc::ItemId>(b));
    if (items.size() > max_len) continue;
    const auto c = count(ts, items);
    if (c >= min_count && c > 0) out.emplace(items, c);
  }
  return out;
}

struct RuleKey {
  Items antecedent, consequent;
  std::uint64_t count_a, count_b, count_ab;
  auto operator<=>(const RuleKey&) const = default;
};

// All bipartitions of frequent sets with count_ab / count_a >= kappa.
inline std::vector<RuleKey> rules(const stdassoc::TransactionSet& ts,
                                  const std::map<Items, std::uint64_t>& freq, double kappa) {
  std::vector<RuleKey> out;
  for (const auto& [z, cz] : freq) {
    if (z.size() < 2) continue;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << z.size()); ++mask) {
      Items a, b;
      for (std::size_t i = 0; i < z.size(); ++i) (mask >> i & 1U ? a : b).push_back(z[i]);
      const auto ca = count(ts, a);
      if (static_cast<double>(cz) < kappa * static_cast<double>(ca) * (1.0 - 1e-12)) continue;
      out.push_back({a, b, ca, count(ts, b), cz});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Yule's Q from the four cells of the 2x2 table.
inline double yule_q_cells(double pa, double pb, double pab) {
  const double ab = pab, a_nb = pa - pab, na_b = pb - pab, na_nb = 1.0 - pa - pb + pab;
  return (ab * na_nb - na_b * a_nb) / (ab * na_nb + na_b * a_nb);
}

// Gini from conditional probabilities of B and not-B given A and not-A.
inline double gini_conditional(double pa, double pb, double pab) {
  const double b_a = pab / pa, nb_a = (pa - pab) / pa;
  const double b_na = (pb - pab) / (1.0 - pa), nb_na = (1.0 - pa - pb + pab) / (1.0 - pa);
  return pa * (b_a * b_a + nb_a * nb_a) + (1.0 - pa) * (b_na * b_na + nb_na * nb_na) - pb * pb -
         (1.0 - pb) * (1.0 - pb);
}

inline double gini_alternate(double pa, double pb, double pab) {
  return 2.0 / (1.0 - pa) * (pab / pa - pb) * (pab - pa * pb);
}

inline double gini_usable(double pa, double pb, double pab) {
  return 2.0 * (pab - pa * pb) * (pab - pa * pb) / (pa * (1.0 - pa));
}

struct Extrema {
  double lo, hi;
  bool empty;
};

// Min/max of the usable-form Gini over pab in [from, to] on a fixed grid
// (endpoints included); `open_right` drops the right endpoint itself.
inline Extrema gini_grid(double pa, double pb, double from, double to, double step,
                         bool open_right) {
  Extrema e{INFINITY, -INFINITY, true};
  if (from > to || (open_right && from >= to)) return e;
  auto visit = [&](double x) {
    const double g = gini_usable(pa, pb, x);
    e.lo = std::min(e.lo, g);
    e.hi = std::max(e.hi, g);
    e.empty = false;
  };
  for (double x = from; x < to; x += step) visit(x);
  if (!open_right) visit(to);
  return e;
}

// O(n^2) Kendall tau-b.
inline double tau_b_pairs(const std::vector<double>& x, const std::vector<double>& y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  std::int64_t c = 0, d = 0, tx = 0, ty = 0;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j) {
      const bool ex = x[i] == x[j], ey = y[i] == y[j];
      if (ex) ++tx;
      if (ey) ++ty;
      if (ex || ey) continue;
      ((x[i] < x[j]) == (y[i] < y[j]) ? c : d) += 1;
    }
  const std::int64_t n0 = n * (n - 1) / 2;
  return static_cast<double>(c - d) /
         std::sqrt(static_cast<double>(n0 - tx) * static_cast<double>(n0 - ty));
}

// Sequential SplitMix64 stream: state advances by the golden gamma before each
// output; u = top 53 bits / 2^53.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  double next_uniform() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) / 9007199254740992.0;
  }

 private:
  std::uint64_t state_;
};

// Random transactions over k items with per-item probabilities drawn once.
inline stdassoc::TransactionSet random_set(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("i" + std::to_string(i));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(k);
  for (auto& x : p) x = 0.1 + 0.7 * u(rng);
  std::vector<stdassoc::Transaction> rows;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<stdassoc::ItemId> ids;
    for (std::size_t i = 0; i < k; ++i)
      if (u(rng) < p[i]) ids.push_back(static_cast<stdassoc::ItemId>(i));
    rows.emplace_back(ids);
  }
  return stdassoc::TransactionSet(stdassoc::ItemCatalog(labels), std::move(rows));
}

}  // namespace oracle
