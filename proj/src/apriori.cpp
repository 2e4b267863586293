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

#include "stdassoc/apriori.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "stdassoc/errors.hpp"
#include "stdassoc/kernels.hpp"

namespace stdassoc {
namespace {

// Rounding slack when turning fractional thresholds into integer counts.
std::uint64_t ceil_count(double x) {
  const double c = std::ceil(x - 1e-9 * std::max(1.0, std::abs(x)));
  return c <= 0.0 ? 0 : static_cast<std::uint64_t>(c);
}

struct Candidate {
  Itemset items;
  std::uint64_t count;
};

// Runs body(i, scratch) for i in [0, count) on up to `threads` workers. Each
// worker owns its scratch bitmap.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, std::size_t words, Body&& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    std::vector<std::uint64_t> scratch(words);
    for (std::size_t i = 0; i < count; ++i) body(i, scratch);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      std::vector<std::uint64_t> scratch(words);
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i, scratch);
    });
  }
}

bool lex_less(const Itemset& a, const Itemset& b) {
  return std::lexicographical_compare(a.items().begin(), a.items().end(), b.items().begin(),
                                      b.items().end());
}

}  // namespace

Thresholds Thresholds::defaults_for(std::size_t n) {
  const double f = 1.0 / static_cast<double>(n);
  return {f, f};
}

void Thresholds::validate() const {
  if (!(min_support > 0.0 && min_support <= 1.0))
    throw DomainError("minimum support must lie in (0, 1]");
  if (!(min_confidence > 0.0 && min_confidence <= 1.0))
    throw DomainError("minimum confidence must lie in (0, 1]");
}

void Thresholds::validate(std::size_t n) const {
  validate();
  const double floor = 1.0 / static_cast<double>(n);
  const double slack = 1e-12;
  if (min_support < floor * (1.0 - slack) || min_confidence < floor * (1.0 - slack))
    throw DomainError("thresholds must be at least 1/n = " + std::to_string(floor));
}

std::uint64_t Thresholds::min_support_count(std::size_t n) const {
  return std::max<std::uint64_t>(1, ceil_count(min_support * static_cast<double>(n)));
}

bool Thresholds::confident(std::uint64_t count_ab, std::uint64_t count_a) const {
  return count_ab >= ceil_count(min_confidence * static_cast<double>(count_a));
}

std::vector<FrequentItemset> frequent_itemsets(const TransactionSet& ts,
                                               const Thresholds& thresholds,
                                               std::size_t max_len, unsigned threads) {
  if (max_len < 1) throw DomainError("max_len must be at least 1");
  thresholds.validate();
  const std::uint64_t min_count = thresholds.min_support_count(ts.n());
  const auto n = static_cast<double>(ts.n());

  std::vector<FrequentItemset> out;
  std::vector<Candidate> level;
  for (ItemId id = 0; id < ts.num_items(); ++id)
    if (ts.item_count(id) >= min_count) level.push_back({Itemset{id}, ts.item_count(id)});

  for (std::size_t k = 1; !level.empty(); ++k) {
    for (const auto& c : level)
      out.push_back({c.items, c.count, static_cast<double>(c.count) / n});
    if (k == max_len) break;

    std::unordered_set<Itemset, ItemsetHash> frequent_prev;
    if (k >= 2) {
      frequent_prev.reserve(level.size() * 2);
      for (const auto& c : level) frequent_prev.insert(c.items);
    }

    // Level is sorted lexicographically, so sets sharing a (k-1)-prefix are
    // contiguous. group_end[i] is one past the last set sharing level[i]'s prefix.
    std::vector<std::size_t> group_end(level.size());
    for (std::size_t i = level.size(); i-- > 0;) {
      const auto a = level[i].items.items();
      if (i + 1 < level.size() &&
          std::equal(a.begin(), a.end() - 1, level[i + 1].items.items().begin()))
        group_end[i] = group_end[i + 1];
      else
        group_end[i] = i + 1;
    }

    std::vector<std::vector<Candidate>> joined(level.size());
    parallel_for(level.size(), threads, ts.words(), [&](std::size_t i, std::vector<std::uint64_t>& prefix) {
      if (i + 1 >= group_end[i]) return;
      const auto base = level[i].items.items();
      std::span<const std::uint64_t> prefix_bits;
      if (k == 1) {
        prefix_bits = ts.item_bits(base[0]);
      } else {
        kernels::and_into(prefix, ts.item_bits(base[0]), ts.item_bits(base[1]));
        for (std::size_t b = 2; b < base.size(); ++b) kernels::and_into(prefix, prefix, ts.item_bits(base[b]));
        prefix_bits = prefix;
      }
      std::vector<ItemId> items(base.begin(), base.end());
      items.push_back(0);
      std::vector<ItemId> subset(k);
      for (std::size_t j = i + 1; j < group_end[i]; ++j) {
        const ItemId last = level[j].items.back();
        items.back() = last;
        // Subsets dropping one of the first k-1 items; the two parents are
        // frequent by construction.
        bool pruned = false;
        for (std::size_t drop = 0; drop + 2 < items.size() && !pruned; ++drop) {
          std::size_t w = 0;
          for (std::size_t q = 0; q < items.size(); ++q)
            if (q != drop) subset[w++] = items[q];
          pruned = !frequent_prev.contains(Itemset(subset));
        }
        if (pruned) continue;
        const std::uint64_t count = kernels::and_popcount(prefix_bits, ts.item_bits(last));
        if (count >= min_count) joined[i].push_back({Itemset(items), count});
      }
    });

    std::vector<Candidate> next;
    for (auto& group : joined)
      for (auto& c : group) next.push_back(std::move(c));
    level = std::move(next);
  }
  return out;
}

std::vector<Rule> generate_rules(const std::vector<FrequentItemset>& frequent,
                                 const TransactionSet& ts, const Thresholds& thresholds,
                                 std::size_t max_consequent) {
  thresholds.validate();
  std::unordered_map<Itemset, std::uint64_t, ItemsetHash> counts;
  counts.reserve(frequent.size() * 2);
  for (const auto& f : frequent) counts.emplace(f.items, f.count);

  auto lookup = [&](const Itemset& s) {
    auto it = counts.find(s);
    if (it == counts.end())
      throw DomainError("frequent itemset list is not downward closed");
    return it->second;
  };

  std::vector<Rule> rules;
  std::vector<ItemId> lhs, rhs;
  for (const auto& z : frequent) {
    const std::size_t k = z.items.size();
    if (k < 2) continue;
    if (k >= 63) throw DomainError("itemset too large for bipartition enumeration");
    const auto items = z.items.items();
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      lhs.clear();
      rhs.clear();
      for (std::size_t b = 0; b < k; ++b) (mask >> b & 1U ? lhs : rhs).push_back(items[b]);
      if (max_consequent != 0 && rhs.size() > max_consequent) continue;
      Itemset a(lhs);
      Itemset c(rhs);
      const std::uint64_t count_a = lookup(a);
      if (!thresholds.confident(z.count, count_a)) continue;
      const std::uint64_t count_b = lookup(c);
      rules.push_back(Rule{std::move(a), std::move(c), count_a, count_b, z.count, ts.n(), rules.size()});
    }
  }
  return rules;
}

std::vector<Rule> mine_rules(const TransactionSet& ts, const Thresholds& thresholds,
                             const MiningOptions& options) {
  const auto frequent = frequent_itemsets(ts, thresholds, options.max_len, options.threads);
  return generate_rules(frequent, ts, thresholds, options.max_consequent);
}

void sort_for_presentation(std::vector<Rule>& rules) {
  std::sort(rules.begin(), rules.end(), [](const Rule& x, const Rule& y) {
    // Same n throughout, so counts order supports; confidences compare by
    // cross-multiplication to stay exact.
    if (x.count_ab != y.count_ab) return x.count_ab > y.count_ab;
    const auto cx = x.count_ab * y.count_a;
    const auto cy = y.count_ab * x.count_a;
    if (cx != cy) return cx > cy;
    if (x.antecedent != y.antecedent) return lex_less(x.antecedent, y.antecedent);
    if (x.consequent != y.consequent) return lex_less(x.consequent, y.consequent);
    return x.id < y.id;
  });
}

}  // namespace stdassoc
