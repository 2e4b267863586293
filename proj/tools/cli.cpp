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

#include "stdassoc/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "stdassoc/apriori.hpp"
#include "stdassoc/errors.hpp"
#include "stdassoc/kernels.hpp"
#include "stdassoc/randgen.hpp"
#include "stdassoc/rankcompare.hpp"
#include "stdassoc/report_io.hpp"
#include "stdassoc/standardize.hpp"

namespace stdassoc::cli {
namespace {

// Bad flags or flag combinations; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string output;
  std::string format = "csv";
  std::string input_format;
  std::string delimiter;
  std::optional<double> min_support;
  std::optional<double> min_confidence;
  std::size_t max_len = 5;
  std::size_t consequent_size = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool fail_fast = false;
  // generate
  std::size_t transactions = 0;
  std::size_t items = 0;
  double prob = 0.01;
  std::uint64_t seed = 0;
  // curve
  double start = 0.2;
  double stop = 1.0;
  double step = 0.01;
};

Format output_format(const RunConfig& cfg) {
  auto f = parse_format(cfg.format);
  if (!f) throw UsageError("--format must be csv or json");
  return *f;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError("I/O error reading '" + path + "'");
  return buf.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

Format table_input_format(const RunConfig& cfg) {
  if (!cfg.input_format.empty()) {
    auto f = parse_format(cfg.input_format);
    if (!f) throw UsageError("--input-format must be csv or json");
    return *f;
  }
  return ends_with(cfg.input, ".json") ? Format::json : Format::csv;
}

// Runs body with the chosen output stream.
template <typename Body>
void with_output(const RunConfig& cfg, std::ostream& out, Body&& body) {
  if (cfg.output.empty() || cfg.output == "-") {
    body(out);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw DataError("cannot write '" + cfg.output + "'");
  body(file);
  file.flush();
  if (!file) throw DataError("I/O error writing '" + cfg.output + "'");
}

Metadata base_meta(std::string_view command) {
  return {{"tool", "stdassoc"},
          {"version", std::string(kVersion)},
          {"command", std::string(command)}};
}

Thresholds resolve_thresholds(const RunConfig& cfg, std::size_t n, Metadata& meta) {
  Thresholds th = Thresholds::defaults_for(n);
  if (cfg.min_support) th.min_support = *cfg.min_support;
  if (cfg.min_confidence) th.min_confidence = *cfg.min_confidence;
  try {
    th.validate(n);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  meta.emplace_back("min_support", format_number(th.min_support));
  meta.emplace_back("min_support_source", cfg.min_support ? "user" : "default 1/n");
  meta.emplace_back("min_confidence", format_number(th.min_confidence));
  meta.emplace_back("min_confidence_source", cfg.min_confidence ? "user" : "default 1/n");
  return th;
}

void check_threshold_flags(const RunConfig& cfg) {
  for (const auto& [flag, v] : {std::pair{"--min-support", cfg.min_support},
                                std::pair{"--min-confidence", cfg.min_confidence}})
    if (v && !(*v > 0.0 && *v <= 1.0)) throw UsageError(std::string(flag) + " must lie in (0, 1]");
}

void cmd_mine(const RunConfig& cfg, std::ostream& out) {
  check_threshold_flags(cfg);
  if (cfg.max_len < 1) throw UsageError("--max-len must be at least 1");
  const std::string bytes = read_all(cfg.input);
  std::istringstream in(bytes);
  const std::string kind = cfg.input_format.empty() ? "basket" : cfg.input_format;
  std::optional<TransactionSet> ts;
  if (kind == "basket") {
    BasketFormat fmt;
    if (!cfg.delimiter.empty() && cfg.delimiter != "whitespace") {
      if (cfg.delimiter.size() != 1) throw UsageError("--delimiter must be one character or 'whitespace'");
      fmt.delimiter = cfg.delimiter[0];
    }
    ts.emplace(parse_basket(in, fmt));
  } else if (kind == "dense-csv" || kind == "csv") {
    char delim = ',';
    if (!cfg.delimiter.empty()) {
      if (cfg.delimiter.size() != 1) throw UsageError("--delimiter must be one character");
      delim = cfg.delimiter[0];
    }
    ts.emplace(parse_dense_csv(in, delim));
  } else {
    throw UsageError("--input-format must be basket or dense-csv for mine");
  }

  Metadata meta = base_meta("mine");
  meta.emplace_back("input", cfg.input);
  meta.emplace_back("input_fnv1a64", fnv1a64_hex(bytes));
  meta.emplace_back("n_transactions", std::to_string(ts->n()));
  meta.emplace_back("n_items", std::to_string(ts->num_items()));
  const Thresholds th = resolve_thresholds(cfg, ts->n(), meta);
  meta.emplace_back("max_len", std::to_string(cfg.max_len));
  meta.emplace_back("consequent_size", cfg.consequent_size == 0 ? "any" : std::to_string(cfg.consequent_size));
  meta.emplace_back("kernels", std::string(kernels::isa_name(kernels::active().isa)));

  MiningOptions opts;
  opts.max_len = cfg.max_len;
  opts.max_consequent = cfg.consequent_size;
  opts.threads = cfg.threads;
  auto rules = mine_rules(*ts, th, opts);
  sort_for_presentation(rules);
  meta.emplace_back("n_rules", std::to_string(rules.size()));

  ScoredTable table;
  table.meta = std::move(meta);
  table.rows.reserve(rules.size());
  for (const auto& r : rules) {
    ScoredRule row;
    row.antecedent = render_itemset(r.antecedent, ts->catalog());
    row.consequent = render_itemset(r.consequent, ts->catalog());
    row.triple = r.triple();
    row.n = r.n;
    row.measures = score_rule(row.triple, th);
    table.rows.push_back(std::move(row));
  }
  with_output(cfg, out, [&](std::ostream& o) { write_scored(o, table, output_format(cfg)); });
}

// Snaps p back to count/n when p*n is within rounding of an integer, so that
// re-scoring a 12-digit rule table reproduces the miner's arithmetic.
double snap_to_count(double p, std::size_t n) {
  if (n == 0 || std::isnan(p)) return p;
  const double scaled = p * static_cast<double>(n);
  const double c = std::round(scaled);
  if (std::abs(scaled - c) <= 1e-6 * std::max(1.0, c)) return c / static_cast<double>(n);
  return p;
}

void cmd_score(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_threshold_flags(cfg);
  const std::string bytes = read_all(cfg.input);
  std::istringstream in(bytes);
  ScoredTable input = read_scored(in, table_input_format(cfg));

  Metadata meta = base_meta("score");
  meta.emplace_back("input", cfg.input);
  meta.emplace_back("input_fnv1a64", fnv1a64_hex(bytes));
  meta.emplace_back("min_support", cfg.min_support ? format_number(*cfg.min_support) : "default 1/n per row");
  meta.emplace_back("min_confidence",
                    cfg.min_confidence ? format_number(*cfg.min_confidence) : "default 1/n per row");

  ScoredTable table;
  table.meta = std::move(meta);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < input.rows.size(); ++i) {
    const auto& src = input.rows[i];
    ScoredRule row;
    row.antecedent = src.antecedent;
    row.consequent = src.consequent;
    row.n = src.n;
    row.triple = {snap_to_count(src.triple.p_a, src.n), snap_to_count(src.triple.p_b, src.n),
                  snap_to_count(src.triple.p_ab, src.n)};
    for (std::size_t m = 0; m < kMeasures.size(); ++m) row.measures[m].measure = kMeasures[m];
    try {
      if ((!cfg.min_support || !cfg.min_confidence) && src.n == 0)
        throw DomainError("default thresholds need the transaction count n");
      Thresholds th{cfg.min_support.value_or(src.n ? 1.0 / static_cast<double>(src.n) : 0.0),
                    cfg.min_confidence.value_or(src.n ? 1.0 / static_cast<double>(src.n) : 0.0)};
      th.validate();
      row.measures = score_rule(row.triple, th);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    const bool failed = !row.error.empty() ||
                        std::any_of(row.measures.begin(), row.measures.end(),
                                    [](const MeasureScore& s) { return !s.ok(); });
    if (failed) {
      ++failures;
      if (cfg.fail_fast) {
        std::string what = row.error;
        for (const auto& s : row.measures)
          if (!s.ok()) what += (what.empty() ? "" : "; ") + std::string(measure_name(s.measure)) + ": " + s.error;
        throw BoundsViolation("row " + std::to_string(i + 1) + ": " + what);
      }
    }
    table.rows.push_back(std::move(row));
  }
  table.meta.emplace_back("n_rules", std::to_string(table.rows.size()));
  table.meta.emplace_back("rows_with_errors", std::to_string(failures));
  if (failures) err << "warning: " << failures << " row(s) have measure errors; see the error column\n";
  with_output(cfg, out, [&](std::ostream& o) { write_scored(o, table, output_format(cfg)); });
}

void cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string bytes = read_all(cfg.input);
  std::istringstream in(bytes);
  const ScoredTable input = read_scored(in, table_input_format(cfg));

  Metadata meta = base_meta("compare");
  meta.emplace_back("input", cfg.input);
  meta.emplace_back("input_fnv1a64", fnv1a64_hex(bytes));
  meta.emplace_back("excluded", "rows with errors or degenerate bounds");

  std::vector<ComparisonRow> rows;
  for (std::size_t m = 0; m < kMeasures.size(); ++m) {
    ComparisonRow row;
    row.measure = kMeasures[m];
    std::vector<double> raw, std_values;
    for (const auto& r : input.rows) {
      const auto& s = r.measures[m];
      if (!r.error.empty() || !s.ok() || s.score.degenerate) continue;
      if (std::isnan(s.score.raw) || std::isnan(s.score.value)) continue;
      raw.push_back(s.score.raw);
      std_values.push_back(s.score.value);
    }
    row.n_rules = raw.size();
    const std::string name(measure_name(row.measure));
    if (raw.size() >= 2) {
      try {
        row.overall = tau_b(raw, std_values);
      } catch (const DomainError& e) {
        err << "warning: " << name << ": " << e.what() << '\n';
      }
    }
    if (raw.size() >= 10) {
      try {
        row.by_decile = tau_b_by_decile(raw, std_values).by_decile;
      } catch (const DomainError& e) {
        err << "warning: " << name << ": deciles unavailable: " << e.what() << '\n';
      }
    } else {
      err << "warning: " << name << ": fewer than 10 rules, decile section omitted\n";
    }
    rows.push_back(row);
  }
  with_output(cfg, out, [&](std::ostream& o) { write_comparison(o, meta, rows, output_format(cfg)); });
}

void cmd_generate(const RunConfig& cfg, std::ostream& out) {
  RandomSpec spec{cfg.transactions, cfg.items, cfg.prob, cfg.seed};
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const TransactionSet ts = generate(spec, cfg.threads);
  with_output(cfg, out, [&](std::ostream& o) {
    o << "# tool: stdassoc\n# version: " << kVersion << "\n# command: generate\n"
      << "# transactions: " << spec.n_transactions << "\n# items: " << spec.n_items
      << "\n# prob: " << format_number(spec.p) << "\n# seed: " << spec.seed << '\n';
    write_basket(o, ts);
  });
}

void cmd_curve(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.step > 0.0)) throw UsageError("--step must be positive");
  if (!(cfg.start > 0.0 && cfg.start <= cfg.stop && cfg.stop <= 1.0))
    throw UsageError("curve grid must satisfy 0 < start <= stop <= 1");
  const auto count = static_cast<std::size_t>(std::floor((cfg.stop - cfg.start) / cfg.step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  // Grid points are rounded to 12 digits so that x prints exactly and
  // upper/lower are computed from the printed value.
  for (std::size_t i = 0; i < count; ++i)
    grid.push_back(std::min(1.0, round12(cfg.start + static_cast<double>(i) * cfg.step)));
  Metadata meta = base_meta("curve");
  meta.emplace_back("start", format_number(cfg.start));
  meta.emplace_back("stop", format_number(cfg.stop));
  meta.emplace_back("step", format_number(cfg.step));
  const auto points = lift_bound_curve(grid);
  with_output(cfg, out, [&](std::ostream& o) { write_curve(o, meta, points, output_format(cfg)); });
}

void add_common_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format: csv or json")->capture_default_str();
  sub->add_option("--output,-o", cfg.output, "Output path (default: stdout)");
}

void add_thresholds(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--min-support", cfg.min_support, "Minimum support sigma (default 1/n)");
  sub->add_option("--min-confidence", cfg.min_confidence, "Minimum confidence kappa (default 1/n)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Mine association rules and score them with raw and standardized "
               "lift, cosine, Yule's Q and Gini"};
  app.name("stdassoc");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* mine = app.add_subcommand("mine", "Mine rules from a transaction file and score them");
  mine->add_option("input", cfg.input, "Transaction file")->required();
  mine->add_option("--input-format", cfg.input_format, "basket (default) or dense-csv");
  mine->add_option("--delimiter", cfg.delimiter, "Item delimiter: one character or 'whitespace'");
  add_thresholds(mine, cfg);
  mine->add_option("--max-len", cfg.max_len, "Largest itemset size")->capture_default_str();
  mine->add_option("--consequent-size", cfg.consequent_size,
                   "Largest consequent size (0 = any)")->capture_default_str();
  mine->add_option("--threads", cfg.threads, "Counting threads");
  add_common_output(mine, cfg);

  auto* score = app.add_subcommand("score", "Re-score rule rows (p_a, p_b, support, n) under given thresholds");
  score->add_option("input", cfg.input, "Rule table (csv or json)")->required();
  score->add_option("--input-format", cfg.input_format, "csv or json (default: by extension)");
  add_thresholds(score, cfg);
  score->add_flag("--fail-fast", cfg.fail_fast, "Stop with exit code 2 at the first failing row");
  add_common_output(score, cfg);

  auto* compare = app.add_subcommand("compare", "Kendall tau-b between raw and standardized measures");
  compare->add_option("input", cfg.input, "Scored rule table (csv or json)")->required();
  compare->add_option("--input-format", cfg.input_format, "csv or json (default: by extension)");
  add_common_output(compare, cfg);

  auto* gen = app.add_subcommand("generate", "Random transactions with independent items (basket format)");
  gen->add_option("--transactions", cfg.transactions, "Number of transactions")->required();
  gen->add_option("--items", cfg.items, "Number of items")->required();
  gen->add_option("--prob", cfg.prob, "Item inclusion probability")->capture_default_str();
  gen->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  gen->add_option("--threads", cfg.threads, "Generator threads");
  gen->add_option("--output,-o", cfg.output, "Output path (default: stdout)");

  auto* curve = app.add_subcommand("curve", "Lift bounds when P(A) = P(B) over a grid");
  curve->add_option("--start", cfg.start, "First grid point")->capture_default_str();
  curve->add_option("--stop", cfg.stop, "Last grid point")->capture_default_str();
  curve->add_option("--step", cfg.step, "Grid spacing")->capture_default_str();
  add_common_output(curve, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*mine) cmd_mine(cfg, out);
    else if (*score) cmd_score(cfg, out, err);
    else if (*compare) cmd_compare(cfg, out, err);
    else if (*gen) cmd_generate(cfg, out);
    else if (*curve) cmd_curve(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace stdassoc::cli
