#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "inertia/checks.hpp"
#include "inertia/report_io.hpp"

namespace inertia {

/// Largest order accepted by the labeled sweep.
inline constexpr std::size_t kEnumerateMaxOrder = 7;

/// Environment variable supplying the default worker count.
inline constexpr const char* kJobsEnv = "INERTIA_JOBS";

/// Worker count from the environment, or 1.
std::size_t default_jobs();

struct ScanConfig {
  std::vector<std::string> inputs{"-"};  // "-" reads standard input
  CheckOptions checks;
  EmitFormat emit = EmitFormat::jsonl;
  bool fail_fast = false;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  std::size_t max_order = kDefaultMaxOrder;
  bool timings = false;
};

/// Verdict tallies per check id.
struct VerdictCounts {
  std::size_t holds = 0, tight = 0, violated = 0, not_applicable = 0;
};

struct RunStats {
  std::size_t records = 0;
  std::size_t parse_errors = 0;
  std::size_t conjecture_violations = 0;
  std::size_t proven_violations = 0;
  std::size_t operational_errors = 0;
  std::map<std::string, VerdictCounts> verdicts;
  int exit_code = 0;
};

/// Exit codes: 0 clean, 2 a conjecture check was violated, 1 a proven check was
/// violated or an operational error occurred.
int exit_code_for(const RunStats& stats);

RunStats cmd_scan(const ScanConfig& config, std::ostream& out, std::ostream& err);

/// Every labeled graph of order 1..max_order. Records are emitted only for graphs
/// with a violated verdict; the closing summary lists the tight graphs per check.
RunStats cmd_enumerate(std::size_t max_order, const ScanConfig& config, std::ostream& out,
                       std::ostream& err);

struct SampleSummary {
  std::size_t order = 0, count = 0;
  std::uint64_t seed = 0;
  double mean_plus_ratio = 0, mean_minus_ratio = 0;
  std::size_t with_nullity = 0;
};

/// `count` graphs from G(n, 1/2) drawn from one engine seeded with `config.seed`.
RunStats cmd_sample(std::size_t n, std::size_t count, const ScanConfig& config,
                    std::ostream& out, std::ostream& err, SampleSummary* summary = nullptr);

/// Evaluates a pipeline such as "complete 2 | kl_double | complement".
/// Stages: a family with parameters or "g6:<text>", then transforms complement,
/// line_graph, kl_double, reduce, add_twin <v> [closed], and join/tensor/union
/// followed by an operand (family or g6 literal). Throws std::invalid_argument.
Graph evaluate_construction(std::string_view pipeline, std::size_t max_order = kDefaultMaxOrder);

int cmd_construct(const std::vector<std::string>& pipelines, std::size_t max_order,
                  std::ostream& out, std::ostream& err);

/// Runs fixture checks and compares them with the recorded expectations.
RunStats cmd_fixtures(const ScanConfig& config, std::ostream& out, std::ostream& err);

}  // namespace inertia
