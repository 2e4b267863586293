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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace stdassoc {

using ItemId = std::uint32_t;

// Dense interning of item labels. Ids are 0..size()-1 in first-seen order.
class ItemCatalog {
 public:
  ItemCatalog() = default;
  explicit ItemCatalog(std::vector<std::string> labels);

  // Returns the existing id or appends a new one. Labels are trimmed; an
  // empty label throws DataError.
  ItemId intern(std::string_view label);
  std::optional<ItemId> find(std::string_view label) const;

  const std::string& name(ItemId id) const { return names_.at(id); }
  std::span<const std::string> names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ItemId> index_;
};

// Strictly ascending, duplicate-free item ids. May be empty.
class Transaction {
 public:
  Transaction() = default;
  // Sorts and collapses duplicates.
  explicit Transaction(std::vector<ItemId> items);

  std::span<const ItemId> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  friend bool operator==(const Transaction&, const Transaction&) = default;

 private:
  std::vector<ItemId> items_;
};

// Strictly ascending, non-empty set of item ids. Ordering is by size first,
// then lexicographic on ids, which is the order the miner emits itemsets in.
class Itemset {
 public:
  // Sorts and collapses duplicates; throws DomainError if empty.
  explicit Itemset(std::vector<ItemId> items);
  Itemset(std::initializer_list<ItemId> items)
      : Itemset(std::vector<ItemId>(items)) {}

  std::span<const ItemId> items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  ItemId operator[](std::size_t i) const { return items_[i]; }
  ItemId back() const { return items_.back(); }
  bool contains(ItemId id) const;
  bool disjoint(const Itemset& other) const;
  Itemset united(const Itemset& other) const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b);

 private:
  struct Presorted {};
  Itemset(Presorted, std::vector<ItemId> items) : items_(std::move(items)) {}

  std::vector<ItemId> items_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept;
};

// Immutable transaction database with a vertical bitmap index: one bit row of
// words() 64-bit words per item, bit t set iff transaction t contains the item.
// Counting is exact integer arithmetic; fractions are formed once per query.
class TransactionSet {
 public:
  // Throws DataError if transactions is empty or references an id outside
  // the catalog.
  TransactionSet(ItemCatalog catalog, std::vector<Transaction> transactions);

  const ItemCatalog& catalog() const { return catalog_; }
  std::span<const Transaction> transactions() const { return transactions_; }
  std::size_t n() const { return transactions_.size(); }
  std::size_t num_items() const { return catalog_.size(); }
  std::size_t words() const { return words_; }

  std::span<const std::uint64_t> item_bits(ItemId id) const {
    return {bits_.data() + static_cast<std::size_t>(id) * words_, words_};
  }
  std::uint64_t item_count(ItemId id) const { return item_counts_.at(id); }

  // Number of transactions containing every item of x. Throws DomainError on
  // an unknown id.
  std::uint64_t count(const Itemset& x) const;

 private:
  ItemCatalog catalog_;
  std::vector<Transaction> transactions_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> item_counts_;
};

// Fraction of transactions containing every item of x.
double support(const TransactionSet& ts, const Itemset& x);

struct RuleSupports {
  double p_a = 0.0;
  double p_b = 0.0;
  double p_ab = 0.0;
  std::size_t n = 0;
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  std::uint64_t count_ab = 0;
};

// Supports of A, B and A∪B. Throws DomainError unless A and B are disjoint.
RuleSupports rule_supports(const TransactionSet& ts, const Itemset& antecedent,
                           const Itemset& consequent);

// Delimiter for basket files: any single printable character, or whitespace
// runs when unset.
struct BasketFormat {
  std::optional<char> delimiter;
};

// One transaction per line. Lines starting with '#' are comments and blank
// lines are skipped, except the directive line "#!empty", which stands for
// an empty transaction. Duplicate items on a line collapse.
TransactionSet parse_basket(std::istream& in, BasketFormat format = {});
TransactionSet parse_basket_file(const std::string& path, BasketFormat format = {});

// Dense 0/1 matrix: header row of item labels, then one row per transaction.
// An all-zero row is an empty transaction.
TransactionSet parse_dense_csv(std::istream& in, char delimiter = ',');
TransactionSet parse_dense_csv_file(const std::string& path, char delimiter = ',');

// Inverse of parse_basket: labels joined by delimiter, "#!empty" for empty
// transactions. Throws DataError if a label contains the delimiter.
void write_basket(std::ostream& out, const TransactionSet& ts, char delimiter = ' ');

}  // namespace stdassoc
