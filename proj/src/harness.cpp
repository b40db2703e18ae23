#include "inertia/harness.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "inertia/constructions.hpp"
#include "inertia/fixtures.hpp"
#include "inertia/generators.hpp"
#include "inertia/graph6.hpp"

namespace inertia {

namespace {

constexpr std::size_t kBatch = 512;

void tally(RunStats& stats, const ConjectureReport& report) {
  ++stats.records;
  for (const auto& r : report.results) {
    auto& c = stats.verdicts[r.check_id];
    switch (r.verdict) {
      case Verdict::holds: ++c.holds; break;
      case Verdict::tight: ++c.tight; break;
      case Verdict::violated: ++c.violated; break;
      case Verdict::not_applicable: ++c.not_applicable; break;
    }
  }
  switch (classify(report)) {
    case ViolationKind::none: break;
    case ViolationKind::conjecture: ++stats.conjecture_violations; break;
    case ViolationKind::proven: ++stats.proven_violations; break;
  }
}

class Emitter {
 public:
  Emitter(const ScanConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void record(const ConjectureReport& report, std::optional<std::size_t> line) {
    if (config_.emit == EmitFormat::jsonl) {
      out_ << to_jsonl(report, line, config_.timings) << '\n';
      return;
    }
    if (!header_written_) {
      out_ << csv_header(config_.checks.enabled, config_.timings) << '\n';
      header_written_ = true;
    }
    out_ << to_csv_row(report, line, config_.checks.enabled, config_.timings) << '\n';
  }

  void summary(const nlohmann::ordered_json& body) {
    if (config_.emit == EmitFormat::jsonl) {
      nlohmann::ordered_json j;
      j["summary"] = body;
      out_ << j.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : body.items()) out_ << "# " << key << '=' << value.dump() << '\n';
  }

 private:
  const ScanConfig& config_;
  std::ostream& out_;
  bool header_written_ = false;
};

nlohmann::ordered_json counts_json(const RunStats& stats) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& id : all_check_ids()) {
    auto it = stats.verdicts.find(id);
    if (it == stats.verdicts.end()) continue;
    j[id] = {{"holds", it->second.holds},
             {"tight", it->second.tight},
             {"violated", it->second.violated},
             {"not_applicable", it->second.not_applicable}};
  }
  return j;
}

struct Job {
  std::size_t line = 0;
  std::string text;
  std::optional<ConjectureReport> report;
  std::string error;
};

// Parses and checks one batch in parallel; slots keep input order.
void process(std::vector<Job>& batch, const ScanConfig& config) {
  const auto count = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(config.jobs))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    Job& job = batch[static_cast<std::size_t>(i)];
    try {
      const Graph g = parse_graph_line(job.text, config.max_order);
      job.report = run_all_checks(g, config.checks, job.text);
    } catch (const std::exception& e) {
      job.error = e.what();
    }
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::size_t default_jobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return v;
  }
  return 1;
}

int exit_code_for(const RunStats& stats) {
  if (stats.proven_violations > 0 || stats.operational_errors > 0) return 1;
  if (stats.conjecture_violations > 0) return 2;
  return 0;
}

RunStats cmd_scan(const ScanConfig& config, std::ostream& out, std::ostream& err) {
  RunStats stats;
  Emitter emit(config, out);
  std::size_t line_no = 0;
  bool stop = false;

  for (const auto& input : config.inputs) {
    if (stop) break;
    std::ifstream file;
    std::istream* in = &std::cin;
    if (input != "-") {
      file.open(input);
      if (!file) {
        err << "error: cannot open " << input << '\n';
        ++stats.operational_errors;
        stop = config.fail_fast;
        continue;
      }
      in = &file;
    }

    std::string raw;
    bool more = true;
    while (more && !stop) {
      std::vector<Job> batch;
      while (batch.size() < kBatch && (more = static_cast<bool>(std::getline(*in, raw)))) {
        ++line_no;
        std::string text = trim(raw);
        if (text.empty()) continue;
        batch.push_back({line_no, std::move(text), std::nullopt, {}});
      }
      process(batch, config);
      for (const Job& job : batch) {
        if (!job.report) {
          ++stats.parse_errors;
          err << input << ":" << job.line << ": " << job.error << '\n';
          if (config.fail_fast) {
            ++stats.operational_errors;
            stop = true;
            break;
          }
          continue;
        }
        emit.record(*job.report, job.line);
        tally(stats, *job.report);
        if (config.fail_fast && classify(*job.report) != ViolationKind::none) {
          stop = true;
          break;
        }
      }
    }
  }

  err << "records=" << stats.records << " parse_errors=" << stats.parse_errors
      << " conjecture_violations=" << stats.conjecture_violations
      << " proven_violations=" << stats.proven_violations << '\n';
  stats.exit_code = exit_code_for(stats);
  return stats;
}

RunStats cmd_enumerate(std::size_t max_order, const ScanConfig& config, std::ostream& out,
                       std::ostream& err) {
  if (max_order > kEnumerateMaxOrder)
    throw std::invalid_argument("enumerate is capped at order " +
                                std::to_string(kEnumerateMaxOrder));
  RunStats stats;
  Emitter emit(config, out);
  std::map<std::string, std::vector<std::string>> tight;
  std::vector<std::size_t> per_order;
  bool stop = false;

  for (std::size_t n = 1; n <= max_order && !stop; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    per_order.push_back(static_cast<std::size_t>(total));
    for (std::uint64_t first = 0; first < total && !stop; first += 4096) {
      const std::uint64_t last = std::min<std::uint64_t>(total, first + 4096);
      std::vector<ConjectureReport> reports(last - first);
      const auto count = static_cast<std::ptrdiff_t>(reports.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(static_cast<int>(config.jobs))
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        const Graph g = graph_from_mask(n, first + static_cast<std::uint64_t>(i));
        reports[static_cast<std::size_t>(i)] = run_all_checks(g, config.checks, write_graph6(g));
      }
      for (const auto& report : reports) {
        tally(stats, report);
        for (const auto& r : report.results)
          if (r.verdict == Verdict::tight) tight[r.check_id].push_back(report.graph_id);
        if (classify(report) != ViolationKind::none) {
          emit.record(report, std::nullopt);
          if (config.fail_fast) {
            stop = true;
            break;
          }
        }
      }
    }
  }

  nlohmann::ordered_json body;
  body["command"] = "enumerate";
  body["max_order"] = max_order;
  body["graphs"] = stats.records;
  body["graphs_per_order"] = per_order;
  body["conjecture_violations"] = stats.conjecture_violations;
  body["proven_violations"] = stats.proven_violations;
  body["verdicts"] = counts_json(stats);
  nlohmann::ordered_json tj = nlohmann::ordered_json::object();
  for (const auto& id : config.checks.enabled)
    if (auto it = tight.find(id); it != tight.end()) tj[id] = it->second;
  body["tight"] = tj;
  emit.summary(body);
  err << "graphs=" << stats.records << " conjecture_violations=" << stats.conjecture_violations
      << " proven_violations=" << stats.proven_violations << '\n';
  stats.exit_code = exit_code_for(stats);
  return stats;
}

RunStats cmd_sample(std::size_t n, std::size_t count, const ScanConfig& config,
                    std::ostream& out, std::ostream& err, SampleSummary* summary) {
  if (count == 0) throw std::invalid_argument("sample count must be at least 1");
  if (n > config.max_order) throw OrderOverflow("sample order exceeds maximum order");
  RunStats stats;
  Emitter emit(config, out);
  Rng rng(config.seed);
  SampleSummary sum{n, count, config.seed, 0, 0, 0};
  double plus = 0, minus = 0;
  bool stop = false;

  for (std::size_t first = 0; first < count && !stop; first += kBatch) {
    const std::size_t last = std::min(count, first + kBatch);
    std::vector<Graph> graphs;
    for (std::size_t i = first; i < last; ++i) graphs.push_back(random_graph(n, rng));
    std::vector<ConjectureReport> reports(graphs.size());
    const auto size = static_cast<std::ptrdiff_t>(graphs.size());
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(config.jobs))
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      const auto k = static_cast<std::size_t>(i);
      reports[k] = run_all_checks(graphs[k], config.checks, write_graph6(graphs[k]));
    }
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto& report = reports[k];
      emit.record(report, first + k + 1);
      tally(stats, report);
      if (n > 0) {
        plus += static_cast<double>(report.inertia.n_plus) / static_cast<double>(n);
        minus += static_cast<double>(report.inertia.n_minus) / static_cast<double>(n);
      }
      if (report.inertia.n_zero > 0) ++sum.with_nullity;
      if (config.fail_fast && classify(report) != ViolationKind::none) {
        stop = true;
        break;
      }
    }
  }
  const double done = static_cast<double>(stats.records);
  sum.mean_plus_ratio = plus / done;
  sum.mean_minus_ratio = minus / done;

  nlohmann::ordered_json body;
  body["command"] = "sample";
  body["rng"] = std::string(kRngName);
  body["seed"] = config.seed;
  body["order"] = n;
  body["count"] = stats.records;
  body["mean_n_plus_ratio"] = sum.mean_plus_ratio;
  body["mean_n_minus_ratio"] = sum.mean_minus_ratio;
  body["graphs_with_nullity"] = sum.with_nullity;
  body["conjecture_violations"] = stats.conjecture_violations;
  body["proven_violations"] = stats.proven_violations;
  body["verdicts"] = counts_json(stats);
  emit.summary(body);
  err << "samples=" << stats.records << " conjecture_violations=" << stats.conjecture_violations
      << " proven_violations=" << stats.proven_violations << '\n';
  if (summary) *summary = sum;
  stats.exit_code = exit_code_for(stats);
  return stats;
}

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

std::size_t parse_count(const std::string& word) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size() || word.empty() || word[0] == '-')
    throw std::invalid_argument("expected a non-negative integer, got '" + word + "'");
  return static_cast<std::size_t>(v);
}

Graph operand(const std::vector<std::string>& words, std::size_t from, std::size_t max_order) {
  if (from >= words.size()) throw std::invalid_argument("missing graph operand");
  const std::string& head = words[from];
  if (head.rfind("g6:", 0) == 0) {
    if (from + 1 != words.size()) throw std::invalid_argument("trailing words after g6 literal");
    return parse_graph_line(head.substr(3), max_order);
  }
  std::vector<std::size_t> params;
  for (std::size_t i = from + 1; i < words.size(); ++i) params.push_back(parse_count(words[i]));
  return family(head, params);
}

void check_order(const Graph& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw OrderOverflow("construction has order " + std::to_string(g.order()) +
                        ", above maximum " + std::to_string(max_order));
}

}  // namespace

Graph evaluate_construction(std::string_view pipeline, std::size_t max_order) {
  std::vector<std::string> stages;
  std::size_t pos = 0;
  while (true) {
    const std::size_t bar = pipeline.find('|', pos);
    stages.emplace_back(pipeline.substr(pos, bar == std::string_view::npos ? bar : bar - pos));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  Graph g = operand(split_words(stages.front()), 0, max_order);
  check_order(g, max_order);
  for (std::size_t s = 1; s < stages.size(); ++s) {
    const auto words = split_words(stages[s]);
    if (words.empty()) throw std::invalid_argument("empty pipeline stage");
    const std::string& op = words[0];
    auto no_args = [&] {
      if (words.size() != 1) throw std::invalid_argument(op + " takes no arguments");
    };
    if (op == "complement") {
      no_args();
      g = complement(g);
    } else if (op == "line_graph") {
      no_args();
      if (g.size() > max_order) throw OrderOverflow("line graph would exceed maximum order");
      g = line_graph(g);
    } else if (op == "kl_double") {
      no_args();
      if (2 * g.order() + 2 > max_order) throw OrderOverflow("doubling would exceed maximum order");
      g = kotlov_lovasz_double(g);
    } else if (op == "reduce") {
      no_args();
      g = reduce(g);
    } else if (op == "add_twin") {
      if (words.size() < 2 || words.size() > 3 || (words.size() == 3 && words[2] != "closed" &&
                                                   words[2] != "open"))
        throw std::invalid_argument("usage: add_twin <vertex> [open|closed]");
      const std::size_t v = parse_count(words[1]);
      if (v >= g.order()) throw std::invalid_argument("add_twin vertex out of range");
      g = add_twin(g, static_cast<Vertex>(v), words.size() == 3 && words[2] == "closed");
    } else if (op == "join" || op == "union" || op == "tensor") {
      const Graph h = operand(words, 1, max_order);
      const std::size_t order = op == "tensor" ? g.order() * h.order() : g.order() + h.order();
      if (order > max_order) throw OrderOverflow(op + " would exceed maximum order");
      g = op == "join" ? join(g, h) : op == "union" ? disjoint_union(g, h) : tensor_product(g, h);
    } else {
      throw std::invalid_argument("unknown transform '" + op + "'");
    }
    check_order(g, max_order);
  }
  return g;
}

int cmd_construct(const std::vector<std::string>& pipelines, std::size_t max_order,
                  std::ostream& out, std::ostream& err) {
  int status = 0;
  for (const auto& p : pipelines) {
    try {
      out << write_graph6(evaluate_construction(p, max_order)) << '\n';
    } catch (const std::exception& e) {
      err << "error: " << p << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

namespace {

bool enabled(const ScanConfig& config, const std::string& id) {
  const auto& ids = config.checks.enabled;
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::size_t compare_expectations(const ConjectureReport& report,
                                 const std::optional<Inertia>& expected_inertia,
                                 const std::vector<std::string>& expect_tight,
                                 const ScanConfig& config, std::ostream& err) {
  std::size_t failures = 0;
  if (expected_inertia && report.inertia != *expected_inertia) {
    std::ostringstream os;
    os << report.inertia << " expected " << *expected_inertia;
    err << "FAIL " << report.graph_id << ": inertia " << os.str() << '\n';
    ++failures;
  }
  for (const auto& id : expect_tight) {
    if (!enabled(config, id)) continue;
    const CheckResult* r = report.find(id);
    if (!r || r->verdict != Verdict::tight) {
      err << "FAIL " << report.graph_id << ": " << id << " is "
          << (r ? to_string(r->verdict) : "missing") << ", expected tight\n";
      ++failures;
    }
  }
  return failures;
}

}  // namespace

RunStats cmd_fixtures(const ScanConfig& config, std::ostream& out, std::ostream& err) {
  RunStats stats;
  Emitter emit(config, out);
  std::size_t failures = 0;

  const FixtureTable* table = nullptr;
  try {
    table = &builtin_fixture_table();
  } catch (const FixtureTableError& e) {
    err << "error: fixture table: " << e.what() << '\n';
    ++stats.operational_errors;
  }
  if (table) {
    for (const auto& f : table->entries) {
      const ConjectureReport report =
          run_spectrum_checks(f.name, f.spectrum, config.checks.enabled);
      emit.record(report, std::nullopt);
      tally(stats, report);
      failures += compare_expectations(report, f.expected_inertia, f.expect_tight, config, err);
    }
  }
  for (const auto& f : graph_fixtures()) {
    const ConjectureReport report = run_all_checks(f.graph, config.checks, f.name);
    emit.record(report, std::nullopt);
    tally(stats, report);
    failures += compare_expectations(report, f.expected_inertia, f.expect_tight, config, err);
  }

  nlohmann::ordered_json body;
  body["command"] = "fixtures";
  body["fixtures"] = stats.records;
  body["expectation_failures"] = failures;
  body["conjecture_violations"] = stats.conjecture_violations;
  body["proven_violations"] = stats.proven_violations;
  emit.summary(body);
  stats.operational_errors += failures;
  stats.exit_code = exit_code_for(stats);
  return stats;
}

}  // namespace inertia
