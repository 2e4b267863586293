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

// Rule, comparison and curve tables in CSV and JSON. Both formats carry the
// same content: every float is written with 12 significant digits (JSON
// values are rounded to the same 12 digits), and a run-metadata block travels
// as "# key: value" comment lines (CSV) or a "meta" object (JSON).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stdassoc/measures.hpp"
#include "stdassoc/rankcompare.hpp"
#include "stdassoc/standardize.hpp"
#include "stdassoc/transactions.hpp"

namespace stdassoc {

enum class Format { csv, json };

std::optional<Format> parse_format(std::string_view name);

using Metadata = std::vector<std::pair<std::string, std::string>>;

// "%.12g"; NaN prints as "nan".
std::string format_number(double x);
// x rounded to 12 significant digits.
double round12(double x);

// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

// "{a,b}" with catalog labels.
std::string render_itemset(const Itemset& s, const ItemCatalog& catalog);

struct ScoredRule {
  std::string antecedent;
  std::string consequent;
  SupportTriple triple;
  std::size_t n = 0;
  MeasureReport measures;
  // Row-level failure (invalid triple, thresholds). Measures are unset then.
  std::string error;

  double support() const { return triple.p_ab; }
  double confidence() const { return triple.p_ab / triple.p_a; }
};

struct ScoredTable {
  Metadata meta;
  std::vector<ScoredRule> rows;
};

// Column order: antecedent, consequent, support, confidence, then for each of
// lift, cosine, yule_q, gini: _raw, _lower, _upper, _std, _degenerate; then
// p_a, p_b, n, error.
std::vector<std::string> scored_columns();

void write_scored(std::ostream& out, const ScoredTable& table, Format format);
// Throws DataError on malformed input.
ScoredTable read_scored(std::istream& in, Format format);

struct ComparisonRow {
  Measure measure = Measure::lift;
  std::size_t n_rules = 0;
  std::optional<double> overall;
  // Empty when fewer than 10 rules were available.
  std::optional<std::array<std::optional<double>, 10>> by_decile;
};

void write_comparison(std::ostream& out, const Metadata& meta,
                      const std::vector<ComparisonRow>& rows, Format format);

void write_curve(std::ostream& out, const Metadata& meta, const std::vector<CurvePoint>& points,
                 Format format);

// Minimal RFC 4180 reader: quoted fields may contain the delimiter, quotes
// ("") and newlines. Lines starting with '#' outside a record are returned
// through `comments` (without the leading "# ") when non-null.
std::vector<std::vector<std::string>> read_csv_records(std::istream& in,
                                                       std::vector<std::string>* comments = nullptr);

}  // namespace stdassoc
