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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stdassoc/measures.hpp"
#include "stdassoc/thresholds.hpp"
#include "stdassoc/transactions.hpp"

namespace stdassoc {

struct FrequentItemset {
  Itemset items;
  std::uint64_t count = 0;
  double support = 0.0;
};

struct Rule {
  Itemset antecedent;
  Itemset consequent;
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  std::uint64_t count_ab = 0;
  std::size_t n = 0;
  // Generation ordinal: frequent-itemset order, then bipartition order.
  std::size_t id = 0;

  double p_a() const { return static_cast<double>(count_a) / static_cast<double>(n); }
  double p_b() const { return static_cast<double>(count_b) / static_cast<double>(n); }
  double p_ab() const { return static_cast<double>(count_ab) / static_cast<double>(n); }
  double confidence() const {
    return static_cast<double>(count_ab) / static_cast<double>(count_a);
  }
  SupportTriple triple() const { return {p_a(), p_b(), p_ab()}; }
};

struct MiningOptions {
  std::size_t max_len = 5;
  // 0 means any consequent size; 1 restricts to single-item consequents.
  std::size_t max_consequent = 0;
  // Worker threads for support counting. Output does not depend on it.
  unsigned threads = 1;
};

// Level-wise Apriori. Returns every itemset of size <= max_len whose support
// is >= sigma, sorted by (size, lexicographic ids). Candidates of size k are
// joins of frequent (k-1)-sets sharing their first k-2 items, pruned when any
// (k-1)-subset is infrequent, then counted on the bitmap index.
std::vector<FrequentItemset> frequent_itemsets(const TransactionSet& ts,
                                               const Thresholds& thresholds,
                                               std::size_t max_len = 5,
                                               unsigned threads = 1);

// Every bipartition A ∪ B = Z of every frequent Z with |Z| >= 2 whose
// confidence reaches kappa. frequent must be the complete output of
// frequent_itemsets for the same thresholds.
std::vector<Rule> generate_rules(const std::vector<FrequentItemset>& frequent,
                                 const TransactionSet& ts, const Thresholds& thresholds,
                                 std::size_t max_consequent = 0);

std::vector<Rule> mine_rules(const TransactionSet& ts, const Thresholds& thresholds,
                             const MiningOptions& options = {});

// Presentation order: support desc, confidence desc, antecedent, consequent.
void sort_for_presentation(std::vector<Rule>& rules);

}  // namespace stdassoc
