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

#include "stdassoc/transactions.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "stdassoc/errors.hpp"
#include "stdassoc/kernels.hpp"

namespace stdassoc {
namespace {

constexpr std::string_view kEmptyDirective = "#!empty";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename Fn>
void split(std::string_view line, std::optional<char> delimiter, Fn&& on_token) {
  if (!delimiter) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) on_token(line.substr(i, j - i));
      i = j;
    }
    return;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(*delimiter, start);
    const std::string_view tok =
        trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!tok.empty()) on_token(tok);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
}

void sort_unique(std::vector<ItemId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

}  // namespace

ItemCatalog::ItemCatalog(std::vector<std::string> labels) {
  for (const auto& label : labels) {
    const std::size_t before = size();
    intern(label);
    if (size() == before) throw DataError("duplicate item label '" + label + "'");
  }
}

ItemId ItemCatalog::intern(std::string_view label) {
  label = trim(label);
  if (label.empty()) throw DataError("empty item label");
  std::string key(label);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto id = static_cast<ItemId>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<ItemId> ItemCatalog::find(std::string_view label) const {
  auto it = index_.find(std::string(trim(label)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Transaction::Transaction(std::vector<ItemId> items) : items_(std::move(items)) {
  sort_unique(items_);
}

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
  sort_unique(items_);
  if (items_.empty()) throw DomainError("itemset must be non-empty");
}

bool Itemset::contains(ItemId id) const {
  return std::binary_search(items_.begin(), items_.end(), id);
}

bool Itemset::disjoint(const Itemset& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Itemset Itemset::united(const Itemset& other) const {
  std::vector<ItemId> out;
  out.reserve(size() + other.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out));
  return Itemset(Presorted{}, std::move(out));
}

std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                b.items_.begin(), b.items_.end());
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept {
  // FNV-1a over the ids.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (ItemId id : s.items()) {
    h ^= id;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

TransactionSet::TransactionSet(ItemCatalog catalog, std::vector<Transaction> transactions)
    : catalog_(std::move(catalog)), transactions_(std::move(transactions)) {
  if (transactions_.empty()) throw DataError("empty transaction set");
  const std::size_t k = catalog_.size();
  words_ = (transactions_.size() + 63) / 64;
  bits_.assign(k * words_, 0);
  item_counts_.assign(k, 0);
  for (std::size_t t = 0; t < transactions_.size(); ++t) {
    for (ItemId id : transactions_[t].items()) {
      if (id >= k) throw DataError("transaction references unknown item id " + std::to_string(id));
      bits_[static_cast<std::size_t>(id) * words_ + t / 64] |= std::uint64_t{1} << (t % 64);
      ++item_counts_[id];
    }
  }
}

std::uint64_t TransactionSet::count(const Itemset& x) const {
  for (ItemId id : x.items())
    if (id >= num_items()) throw DomainError("unknown item id " + std::to_string(id));
  const auto ids = x.items();
  if (ids.size() == 1) return item_counts_[ids[0]];
  if (ids.size() == 2) return kernels::and_popcount(item_bits(ids[0]), item_bits(ids[1]));
  std::vector<std::uint64_t> scratch(words_);
  kernels::and_into(scratch, item_bits(ids[0]), item_bits(ids[1]));
  for (std::size_t i = 2; i + 1 < ids.size(); ++i)
    kernels::and_into(scratch, scratch, item_bits(ids[i]));
  return kernels::and_popcount(scratch, item_bits(ids.back()));
}

double support(const TransactionSet& ts, const Itemset& x) {
  return static_cast<double>(ts.count(x)) / static_cast<double>(ts.n());
}

RuleSupports rule_supports(const TransactionSet& ts, const Itemset& antecedent,
                           const Itemset& consequent) {
  if (!antecedent.disjoint(consequent))
    throw DomainError("antecedent and consequent must be disjoint");
  RuleSupports out;
  out.n = ts.n();
  out.count_a = ts.count(antecedent);
  out.count_b = ts.count(consequent);
  out.count_ab = ts.count(antecedent.united(consequent));
  const auto n = static_cast<double>(out.n);
  out.p_a = static_cast<double>(out.count_a) / n;
  out.p_b = static_cast<double>(out.count_b) / n;
  out.p_ab = static_cast<double>(out.count_ab) / n;
  return out;
}

TransactionSet parse_basket(std::istream& in, BasketFormat format) {
  if (format.delimiter && !std::isprint(static_cast<unsigned char>(*format.delimiter)))
    throw DataError("delimiter must be a printable character");
  ItemCatalog catalog;
  std::vector<Transaction> transactions;
  std::string line;
  std::vector<ItemId> ids;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view == kEmptyDirective) {
      transactions.emplace_back();
      continue;
    }
    if (view.empty() || view.front() == '#') continue;
    ids.clear();
    split(view, format.delimiter, [&](std::string_view tok) { ids.push_back(catalog.intern(tok)); });
    if (ids.empty()) continue;
    transactions.emplace_back(ids);
  }
  if (in.bad()) throw DataError("I/O error while reading transactions");
  return TransactionSet(std::move(catalog), std::move(transactions));
}

TransactionSet parse_basket_file(const std::string& path, BasketFormat format) {
  auto in = open_or_throw(path);
  return parse_basket(in, format);
}

TransactionSet parse_dense_csv(std::istream& in, char delimiter) {
  std::string line;
  std::optional<ItemCatalog> catalog;
  std::vector<Transaction> transactions;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = view.find(delimiter, start);
      cells.push_back(trim(view.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (!catalog) {
      catalog.emplace(std::vector<std::string>(cells.begin(), cells.end()));
      continue;
    }
    if (cells.size() != catalog->size())
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(catalog->size()) + " cells, got " + std::to_string(cells.size()));
    std::vector<ItemId> ids;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c] == "1") {
        ids.push_back(static_cast<ItemId>(c));
      } else if (cells[c] != "0") {
        throw DataError("line " + std::to_string(line_no) + ": cell '" + std::string(cells[c]) +
                        "' is not 0 or 1");
      }
    }
    transactions.emplace_back(std::move(ids));
  }
  if (in.bad()) throw DataError("I/O error while reading transactions");
  if (!catalog) throw DataError("empty transaction set");
  return TransactionSet(std::move(*catalog), std::move(transactions));
}

TransactionSet parse_dense_csv_file(const std::string& path, char delimiter) {
  auto in = open_or_throw(path);
  return parse_dense_csv(in, delimiter);
}

void write_basket(std::ostream& out, const TransactionSet& ts, char delimiter) {
  const auto& catalog = ts.catalog();
  for (const auto& label : catalog.names()) {
    const bool clash = std::isspace(static_cast<unsigned char>(delimiter))
                           ? std::any_of(label.begin(), label.end(),
                                         [](unsigned char c) { return std::isspace(c); })
                           : label.find(delimiter) != std::string::npos;
    if (clash || label.front() == '#')
      throw DataError("item label '" + label + "' cannot be written with this delimiter");
  }
  for (const auto& t : ts.transactions()) {
    if (t.empty()) {
      out << kEmptyDirective << '\n';
      continue;
    }
    bool first = true;
    for (ItemId id : t.items()) {
      if (!first) out << delimiter;
      out << catalog.name(id);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace stdassoc
