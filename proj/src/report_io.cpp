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

#include "stdassoc/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "json.hpp"
#include "stdassoc/errors.hpp"

namespace stdassoc {
namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kRowErrorTag = "rule";

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << csv_field(cells[i]);
  }
  out << '\n';
}

void write_meta_comments(std::ostream& out, const Metadata& meta) {
  for (const auto& [k, v] : meta) out << "# " << k << ": " << v << '\n';
}

json meta_json(const Metadata& meta) {
  json m = json::object();
  for (const auto& [k, v] : meta) m[k] = v;
  return m;
}

json number_json(double x) {
  if (std::isnan(x)) return nullptr;
  return round12(x);
}

json optional_json(const std::optional<double>& x) {
  return x ? number_json(*x) : json(nullptr);
}

std::string optional_text(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

double parse_number(const std::string& s, const char* what) {
  if (s.empty() || s == "nan") return NAN;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw DataError(std::string("bad number '") + s + "' in column " + what);
  return v;
}

double json_number(const json& j) {
  if (j.is_null()) return NAN;
  if (!j.is_number()) throw DataError("expected a number in JSON rule table");
  return j.get<double>();
}

// "lift: msg; gini: msg" <-> per-measure / row-level errors.
std::string join_errors(const ScoredRule& r) {
  std::string out;
  auto add = [&](std::string_view tag, const std::string& msg) {
    if (!out.empty()) out += "; ";
    out += tag;
    out += ": ";
    out += msg;
  };
  if (!r.error.empty()) add(kRowErrorTag, r.error);
  for (const auto& m : r.measures)
    if (!m.ok()) add(measure_name(m.measure), m.error);
  return out;
}

void split_errors(const std::string& joined, ScoredRule& r) {
  std::size_t start = 0;
  while (start < joined.size()) {
    std::size_t end = joined.find("; ", start);
    if (end == std::string::npos) end = joined.size();
    const std::string part = joined.substr(start, end - start);
    const std::size_t colon = part.find(": ");
    if (colon == std::string::npos) throw DataError("malformed error cell '" + joined + "'");
    const std::string tag = part.substr(0, colon);
    const std::string msg = part.substr(colon + 2);
    bool matched = tag == kRowErrorTag;
    if (matched) r.error = msg;
    for (auto& m : r.measures)
      if (measure_name(m.measure) == tag) {
        m.error = msg;
        matched = true;
      }
    if (!matched) throw DataError("unknown error tag '" + tag + "'");
    start = end + 2;
  }
}

void init_measures(MeasureReport& report) {
  for (std::size_t i = 0; i < kMeasures.size(); ++i) report[i].measure = kMeasures[i];
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0" || s.empty()) return false;
  throw DataError("bad boolean '" + s + "'");
}

ScoredTable read_scored_csv(std::istream& in) {
  std::vector<std::string> comments;
  auto records = read_csv_records(in, &comments);
  ScoredTable table;
  for (const auto& c : comments) {
    const std::size_t colon = c.find(": ");
    if (colon == std::string::npos) continue;
    table.meta.emplace_back(c.substr(0, colon), c.substr(colon + 2));
  }
  if (records.empty()) throw DataError("rule table has no header row");
  const auto& header = records.front();
  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  auto need = [&](const std::string& name) {
    auto it = col.find(name);
    if (it == col.end()) throw DataError("rule table lacks column '" + name + "'");
    return it->second;
  };
  auto maybe = [&](const std::string& name) -> std::optional<std::size_t> {
    auto it = col.find(name);
    if (it == col.end()) return std::nullopt;
    return it->second;
  };

  const std::size_t c_ante = need("antecedent"), c_cons = need("consequent");
  const std::size_t c_sup = need("support");
  const std::size_t c_pa = need("p_a"), c_pb = need("p_b");
  const auto c_n = maybe("n");
  const auto c_err = maybe("error");

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size())
      throw DataError("rule table row " + std::to_string(r) + " has " + std::to_string(rec.size()) +
                      " cells, header has " + std::to_string(header.size()));
    ScoredRule row;
    init_measures(row.measures);
    row.antecedent = rec[c_ante];
    row.consequent = rec[c_cons];
    row.triple = {parse_number(rec[c_pa], "p_a"), parse_number(rec[c_pb], "p_b"),
                  parse_number(rec[c_sup], "support")};
    if (c_n) {
      const double n = parse_number(rec[*c_n], "n");
      if (!(n >= 1.0) || n != std::floor(n)) throw DataError("bad transaction count in column n");
      row.n = static_cast<std::size_t>(n);
    }
    for (auto& m : row.measures) {
      const std::string name(measure_name(m.measure));
      if (auto c = maybe(name + "_raw")) m.score.raw = parse_number(rec[*c], "raw");
      if (auto c = maybe(name + "_lower")) m.score.bounds.lower = parse_number(rec[*c], "lower");
      if (auto c = maybe(name + "_upper")) m.score.bounds.upper = parse_number(rec[*c], "upper");
      if (auto c = maybe(name + "_std")) m.score.value = parse_number(rec[*c], "std");
      if (auto c = maybe(name + "_degenerate")) {
        m.score.degenerate = parse_bool(rec[*c]);
        m.score.bounds.degenerate = m.score.degenerate;
      }
    }
    if (c_err) split_errors(rec[*c_err], row);
    table.rows.push_back(std::move(row));
  }
  return table;
}

ScoredTable read_scored_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(std::string("invalid JSON rule table: ") + e.what());
  }
  ScoredTable table;
  try {
    if (doc.contains("meta"))
      for (const auto& [k, v] : doc.at("meta").items()) table.meta.emplace_back(k, v.get<std::string>());
    for (const auto& j : doc.at("rules")) {
      ScoredRule row;
      init_measures(row.measures);
      row.antecedent = j.at("antecedent").get<std::string>();
      row.consequent = j.at("consequent").get<std::string>();
      row.triple = {json_number(j.at("p_a")), json_number(j.at("p_b")), json_number(j.at("support"))};
      if (j.contains("n")) row.n = j.at("n").get<std::size_t>();
      if (j.contains("error")) row.error = j.at("error").get<std::string>();
      if (j.contains("measures")) {
        const auto& ms = j.at("measures");
        for (auto& m : row.measures) {
          const std::string name(measure_name(m.measure));
          if (!ms.contains(name)) continue;
          const auto& mj = ms.at(name);
          if (mj.contains("error")) {
            m.error = mj.at("error").get<std::string>();
            m.score.raw = m.score.bounds.lower = m.score.bounds.upper = m.score.value = NAN;
            continue;
          }
          m.score.raw = json_number(mj.at("raw"));
          m.score.bounds.lower = json_number(mj.at("lower"));
          m.score.bounds.upper = json_number(mj.at("upper"));
          m.score.value = json_number(mj.at("std"));
          m.score.degenerate = m.score.bounds.degenerate = mj.at("degenerate").get<bool>();
        }
      }
      table.rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed JSON rule table: ") + e.what());
  }
  return table;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string render_itemset(const Itemset& s, const ItemCatalog& catalog) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += catalog.name(s[i]);
  }
  out += '}';
  return out;
}

std::vector<std::string> scored_columns() {
  std::vector<std::string> cols{"antecedent", "consequent", "support", "confidence"};
  for (Measure m : kMeasures) {
    const std::string name(measure_name(m));
    for (const char* suffix : {"_raw", "_lower", "_upper", "_std", "_degenerate"})
      cols.push_back(name + suffix);
  }
  for (const char* c : {"p_a", "p_b", "n", "error"}) cols.emplace_back(c);
  return cols;
}

void write_scored(std::ostream& out, const ScoredTable& table, Format format) {
  if (format == Format::csv) {
    write_meta_comments(out, table.meta);
    write_csv_row(out, scored_columns());
    std::vector<std::string> cells;
    for (const auto& r : table.rows) {
      cells.clear();
      cells.push_back(r.antecedent);
      cells.push_back(r.consequent);
      cells.push_back(format_number(r.support()));
      cells.push_back(format_number(r.confidence()));
      for (const auto& m : r.measures) {
        if (!r.error.empty() || !m.ok()) {
          cells.insert(cells.end(), {"nan", "nan", "nan", "nan", ""});
          continue;
        }
        cells.push_back(format_number(m.score.raw));
        cells.push_back(format_number(m.score.bounds.lower));
        cells.push_back(format_number(m.score.bounds.upper));
        cells.push_back(format_number(m.score.value));
        cells.push_back(m.score.degenerate ? "true" : "false");
      }
      cells.push_back(format_number(r.triple.p_a));
      cells.push_back(format_number(r.triple.p_b));
      cells.push_back(std::to_string(r.n));
      cells.push_back(join_errors(r));
      write_csv_row(out, cells);
    }
    return;
  }
  json rules = json::array();
  for (const auto& r : table.rows) {
    json j;
    j["antecedent"] = r.antecedent;
    j["consequent"] = r.consequent;
    j["support"] = number_json(r.support());
    j["confidence"] = number_json(r.confidence());
    json ms = json::object();
    for (const auto& m : r.measures) {
      const std::string name(measure_name(m.measure));
      if (!r.error.empty()) continue;
      if (!m.ok()) {
        ms[name] = {{"error", m.error}};
        continue;
      }
      ms[name] = {{"raw", number_json(m.score.raw)},
                  {"lower", number_json(m.score.bounds.lower)},
                  {"upper", number_json(m.score.bounds.upper)},
                  {"std", number_json(m.score.value)},
                  {"degenerate", m.score.degenerate}};
    }
    j["measures"] = std::move(ms);
    j["p_a"] = number_json(r.triple.p_a);
    j["p_b"] = number_json(r.triple.p_b);
    j["n"] = r.n;
    j["error"] = r.error;
    rules.push_back(std::move(j));
  }
  json doc;
  doc["meta"] = meta_json(table.meta);
  doc["rules"] = std::move(rules);
  out << doc.dump(1) << '\n';
}

ScoredTable read_scored(std::istream& in, Format format) {
  return format == Format::csv ? read_scored_csv(in) : read_scored_json(in);
}

void write_comparison(std::ostream& out, const Metadata& meta,
                      const std::vector<ComparisonRow>& rows, Format format) {
  if (format == Format::csv) {
    write_meta_comments(out, meta);
    std::vector<std::string> header{"measure", "n_rules", "overall"};
    for (int d = 1; d <= 10; ++d) header.push_back("decile_" + std::to_string(d));
    write_csv_row(out, header);
    for (const auto& r : rows) {
      std::vector<std::string> cells{std::string(measure_name(r.measure)), std::to_string(r.n_rules),
                                     optional_text(r.overall)};
      for (int d = 0; d < 10; ++d)
        cells.push_back(r.by_decile ? optional_text((*r.by_decile)[d]) : std::string());
      write_csv_row(out, cells);
    }
    return;
  }
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["measure"] = std::string(measure_name(r.measure));
    j["n_rules"] = r.n_rules;
    j["overall"] = optional_json(r.overall);
    if (r.by_decile) {
      json d = json::array();
      for (const auto& v : *r.by_decile) d.push_back(optional_json(v));
      j["by_decile"] = std::move(d);
    } else {
      j["by_decile"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  json doc;
  doc["meta"] = meta_json(meta);
  doc["comparisons"] = std::move(arr);
  out << doc.dump(1) << '\n';
}

void write_curve(std::ostream& out, const Metadata& meta, const std::vector<CurvePoint>& points,
                 Format format) {
  if (format == Format::csv) {
    write_meta_comments(out, meta);
    write_csv_row(out, {"x", "upper", "lower", "attainable_lower"});
    for (const auto& p : points)
      write_csv_row(out, {format_number(p.x), format_number(p.upper), format_number(p.lower),
                          format_number(p.attainable_lower)});
    return;
  }
  json arr = json::array();
  for (const auto& p : points)
    arr.push_back({{"x", number_json(p.x)},
                   {"upper", number_json(p.upper)},
                   {"lower", number_json(p.lower)},
                   {"attainable_lower", number_json(p.attainable_lower)}});
  json doc;
  doc["meta"] = meta_json(meta);
  doc["points"] = std::move(arr);
  out << doc.dump(1) << '\n';
}

std::vector<std::vector<std::string>> read_csv_records(std::istream& in,
                                                       std::vector<std::string>* comments) {
  std::vector<std::vector<std::string>> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (comments) {
        std::string_view c(line);
        c.remove_prefix(1);
        if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
        comments->emplace_back(c);
      }
      continue;
    }
    std::vector<std::string> rec;
    std::string field;
    bool quoted = false;
    std::size_t i = 0;
    while (true) {
      if (i == line.size()) {
        if (quoted) {
          // Newline inside a quoted field.
          field += '\n';
          if (!std::getline(in, line)) throw DataError("unterminated quoted CSV field");
          if (!line.empty() && line.back() == '\r') line.pop_back();
          i = 0;
          continue;
        }
        rec.push_back(std::move(field));
        break;
      }
      const char c = line[i++];
      if (quoted) {
        if (c == '"') {
          if (i < line.size() && line[i] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        rec.push_back(std::move(field));
        field.clear();
      } else {
        field += c;
      }
    }
    records.push_back(std::move(rec));
  }
  if (in.bad()) throw DataError("I/O error while reading CSV");
  return records;
}

}  // namespace stdassoc
