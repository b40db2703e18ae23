#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "inertia/bigint.hpp"
#include "inertia/cycles.hpp"
#include "inertia/graph.hpp"
#include "inertia/inertia_triple.hpp"
#include "inertia/reduction.hpp"
#include "inertia/spectrum_spec.hpp"

namespace inertia {

enum class Verdict { holds, tight, violated, not_applicable };

std::string_view to_string(Verdict v);

/// Outcome of one inequality lhs <= rhs, or of a group of them in `parts`.
///
/// Integer checks fill lhs/rhs/margin exactly. The energy check is real-valued:
/// it fills real_lhs/real_rhs instead and decides with a float tolerance.
struct CheckResult {
  std::string check_id;
  Verdict verdict = Verdict::not_applicable;
  BigInt lhs = 0;
  BigInt rhs = 0;
  BigInt margin = 0;
  std::optional<double> real_lhs;
  std::optional<double> real_rhs;
  /// A proven theorem; a violation means a bug, not a discovery.
  bool proven = false;
  std::string note;
  std::vector<CheckResult> parts;
};

namespace check_id {
inline constexpr std::string_view main = "main";
inline constexpr std::string_view signature_form = "signature_form";
inline constexpr std::string_view line_graph = "line_graph";
inline constexpr std::string_view ma_yang_li = "ma_yang_li";
inline constexpr std::string_view torgasev = "torgasev";
inline constexpr std::string_view mohammadian_order = "mohammadian_order";
inline constexpr std::string_view rank_order = "rank_order";
inline constexpr std::string_view absolute_bound = "absolute_bound";
inline constexpr std::string_view weaker = "weaker";
inline constexpr std::string_view energy = "energy";
inline constexpr std::string_view tree_laplacian = "tree_laplacian";
inline constexpr std::string_view cograph_inertia = "cograph_inertia";
inline constexpr std::string_view self_complementary = "self_complementary";
}  // namespace check_id

/// Every check id in canonical report order.
const std::vector<std::string>& all_check_ids();

/// Splits "a,b,c" (or "all") into validated ids. Throws std::invalid_argument.
std::vector<std::string> parse_check_list(std::string_view text);

CheckResult inequality(std::string_view id, BigInt lhs, BigInt rhs, bool proven,
                       std::string note = {});
CheckResult not_applicable(std::string_view id, std::string note, bool proven = false);
/// Worst verdict over the parts: violated, then tight, then holds.
CheckResult combine(std::string_view id, std::vector<CheckResult> parts, std::string note = {});

// Inertia-level checks.
CheckResult check_main(const Inertia& i);
CheckResult check_signature_form(const Inertia& i);
CheckResult check_weaker_conjecture(const Inertia& i);

// Graph-level checks; those needing inertia compute it when not supplied.
CheckResult check_weaker_conjecture(const Graph& g);
CheckResult check_line_graph_conjecture(const Graph& g);
CheckResult check_ma_yang_li(const Graph& g, const Inertia& i,
                             std::size_t cycle_limit = kDefaultCycleLimit);
CheckResult check_ma_yang_li(const Graph& g);
CheckResult check_torgasev(std::size_t order, const Inertia& i, bool reduced);
CheckResult check_torgasev(const Graph& g);
CheckResult check_mohammadian_order(std::size_t order, const Inertia& i, bool reduced);
CheckResult check_mohammadian_order(const Graph& g);
CheckResult check_rank_order(std::size_t order, const Inertia& i, bool reduced);
CheckResult check_rank_order(const Graph& g);
CheckResult check_absolute_bound(const SpectrumSpec& s);
/// Graph form: applies to primitive strongly regular graphs (connected, with a
/// connected complement), with multiplicities derived from the parameters.
CheckResult check_absolute_bound(const Graph& g);
CheckResult check_energy(const Graph& g, const Inertia& i);
CheckResult check_tree_laplacian(const Graph& g);
CheckResult check_cograph_inertia(const Graph& g, const Inertia& i);
CheckResult check_self_complementary(const Graph& g, const Inertia& i,
                                     std::size_t limit = kDefaultIsomorphismLimit);

/// m(r) of the rank/order bound: 2^((r+2)/2) - 2 for even r, 5*2^((r-3)/2) - 2 for odd r >= 3.
BigInt rank_order_bound(std::size_t rank);

/// Parameters (n, k, lambda, mu) of a primitive strongly regular graph.
struct SrgParameters {
  std::size_t n, k, lambda, mu;
};
std::optional<SrgParameters> strongly_regular_parameters(const Graph& g);

struct CheckOptions {
  std::vector<std::string> enabled = all_check_ids();
  std::size_t exact_limit = 512;
  bool allow_approximate = false;
  std::size_t cycle_limit = kDefaultCycleLimit;
  std::size_t isomorphism_limit = kDefaultIsomorphismLimit;
};

struct ConjectureReport {
  std::string graph_id;
  std::size_t order = 0;
  std::optional<std::size_t> size;  // absent for spectrum fixtures
  Inertia inertia;
  std::optional<bool> reduced;      // absent for spectrum fixtures
  bool approximate = false;
  std::vector<CheckResult> results;
  std::chrono::nanoseconds elapsed{0};

  const CheckResult* find(std::string_view id) const;
};

/// Computes inertia once and runs every enabled check. Failures inside a checker
/// are recorded as not_applicable with the error in `note`.
ConjectureReport run_all_checks(const Graph& g, const CheckOptions& options = {},
                                std::string graph_id = {});

/// Spectrum-level subset: main, signature_form, weaker, absolute_bound. Other
/// enabled ids are recorded not_applicable.
ConjectureReport run_spectrum_checks(const std::string& name, const SpectrumSpec& s,
                                     const std::vector<std::string>& enabled = all_check_ids());

enum class ViolationKind { none, conjecture, proven };

/// Most severe violation in a report, looking through parts.
ViolationKind classify(const ConjectureReport& report);

}  // namespace inertia
