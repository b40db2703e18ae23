#include "inertia/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "inertia/constructions.hpp"
#include "inertia/exact_inertia.hpp"
#include "inertia/float_spectrum.hpp"

namespace inertia {

namespace {

BigInt big(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }
BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

int severity(Verdict v) {
  switch (v) {
    case Verdict::violated: return 3;
    case Verdict::tight: return 2;
    case Verdict::holds: return 1;
    case Verdict::not_applicable: return 0;
  }
  return 0;
}

CheckResult real_inequality(std::string_view id, double lhs, double rhs, double tolerance,
                            std::string note = {}) {
  CheckResult r;
  r.check_id = std::string(id);
  r.real_lhs = lhs;
  r.real_rhs = rhs;
  r.proven = true;
  r.note = std::move(note);
  const double margin = rhs - lhs;
  if (margin < -tolerance)
    r.verdict = Verdict::violated;
  else if (margin <= tolerance)
    r.verdict = Verdict::tight;
  else
    r.verdict = Verdict::holds;
  return r;
}

// Table of maximum order n(k) and maximum n+(k) for reduced graphs with n- = k.
struct TorgasevRow {
  std::size_t max_order, max_plus;
};
constexpr TorgasevRow kTorgasev[] = {{2, 1}, {6, 3}, {14, 6}};

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::tight: return "tight";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids{
      std::string(check_id::main),           std::string(check_id::signature_form),
      std::string(check_id::line_graph),     std::string(check_id::ma_yang_li),
      std::string(check_id::torgasev),       std::string(check_id::mohammadian_order),
      std::string(check_id::rank_order),     std::string(check_id::absolute_bound),
      std::string(check_id::weaker),         std::string(check_id::energy),
      std::string(check_id::tree_laplacian), std::string(check_id::cograph_inertia),
      std::string(check_id::self_complementary)};
  return ids;
}

std::vector<std::string> parse_check_list(std::string_view text) {
  if (text == "all") return all_check_ids();
  std::set<std::string> wanted;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string id(text.substr(pos, comma - pos));
    if (!id.empty()) {
      const auto& ids = all_check_ids();
      if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw std::invalid_argument("unknown check id '" + id + "'");
      wanted.insert(id);
    }
    pos = comma + 1;
  }
  if (wanted.empty()) throw std::invalid_argument("empty check list");
  std::vector<std::string> out;
  for (const auto& id : all_check_ids())
    if (wanted.count(id)) out.push_back(id);
  return out;
}

CheckResult inequality(std::string_view id, BigInt lhs, BigInt rhs, bool proven,
                       std::string note) {
  CheckResult r;
  r.check_id = std::string(id);
  r.margin = rhs - lhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.proven = proven;
  r.note = std::move(note);
  const int s = sgn(r.margin);
  r.verdict = s < 0 ? Verdict::violated : (s == 0 ? Verdict::tight : Verdict::holds);
  return r;
}

CheckResult not_applicable(std::string_view id, std::string note, bool proven) {
  CheckResult r;
  r.check_id = std::string(id);
  r.verdict = Verdict::not_applicable;
  r.proven = proven;
  r.note = std::move(note);
  return r;
}

CheckResult combine(std::string_view id, std::vector<CheckResult> parts, std::string note) {
  CheckResult r;
  r.check_id = std::string(id);
  r.note = std::move(note);
  r.proven = !parts.empty() &&
             std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.proven; });
  const CheckResult* lead = nullptr;
  for (const auto& p : parts) {
    if (p.verdict == Verdict::not_applicable) continue;
    if (!lead || severity(p.verdict) > severity(lead->verdict) ||
        (severity(p.verdict) == severity(lead->verdict) && !p.real_lhs && !lead->real_lhs &&
         p.margin < lead->margin))
      lead = &p;
  }
  if (lead) {
    r.verdict = lead->verdict;
    r.lhs = lead->lhs;
    r.rhs = lead->rhs;
    r.margin = lead->margin;
    r.real_lhs = lead->real_lhs;
    r.real_rhs = lead->real_rhs;
  }
  r.parts = std::move(parts);
  return r;
}

CheckResult check_main(const Inertia& i) {
  return inequality(check_id::main, 2 * big(i.n_plus), big(i.n_minus) * (big(i.n_minus) + 1),
                    false);
}

CheckResult check_signature_form(const Inertia& i) {
  return inequality(check_id::signature_form, big(i.signature()),
                    big(i.n_minus) * (big(i.n_minus) - 1) / 2, false);
}

CheckResult check_weaker_conjecture(const Inertia& i) {
  const BigInt rest = big(i.dimension() - i.n_plus);
  return inequality(check_id::weaker, 2 * big(i.dimension()), rest * (rest + 3), false);
}

CheckResult check_weaker_conjecture(const Graph& g) {
  return check_weaker_conjecture(graph_inertia(g));
}

CheckResult check_line_graph_conjecture(const Graph& g) {
  if (!is_connected(g))
    return not_applicable(check_id::line_graph, "graph is disconnected");
  const Graph lg = line_graph(g);
  const IntSymMatrix a = adjacency_matrix(lg);
  const Inertia li = inertia(a);
  const Inertia at_minus_two = shifted_inertia(a, Rational(-2));

  std::vector<CheckResult> parts;
  parts.push_back(inequality("conjecture", big(li.n_plus), big(li.n_minus) + 1, false,
                             "n+(L) <= n-(L) + 1"));
  parts.push_back(inequality("lambda_min_floor", big(at_minus_two.n_minus), 0, true,
                             "eigenvalues of A(L) below -2"));
  parts.push_back(inequality("minus_two_multiplicity",
                             big(static_cast<std::int64_t>(g.size()) -
                                 static_cast<std::int64_t>(g.order())),
                             big(at_minus_two.n_zero), true, "m - n <= mult(-2)"));
  CheckResult r = combine(check_id::line_graph, std::move(parts));
  r.note = "L(G) inertia (" + std::to_string(li.n_plus) + "," + std::to_string(li.n_zero) +
           "," + std::to_string(li.n_minus) + ")";
  return r;
}

CheckResult check_ma_yang_li(const Graph& g, const Inertia& i, std::size_t cycle_limit) {
  if (g.order() > cycle_limit)
    return not_applicable(check_id::ma_yang_li,
                          "order " + std::to_string(g.order()) + " above cycle limit " +
                              std::to_string(cycle_limit));
  const CycleCounts c = count_cycles_mod4(g, cycle_limit);
  const BigInt s = big(i.signature());
  std::vector<CheckResult> parts;
  parts.push_back(inequality("lower", -big(static_cast<std::size_t>(c.c3)), s, false,
                             "-c3 <= s"));
  parts.push_back(inequality("upper", s, big(static_cast<std::size_t>(c.c5)), false,
                             "s <= c5"));
  parts.push_back(inequality("odd_cycles", abs(s), big(static_cast<std::size_t>(c.c1)), true,
                             "|s| <= c1"));
  return combine(check_id::ma_yang_li, std::move(parts),
                 "c1=" + std::to_string(c.c1) + " c3=" + std::to_string(c.c3) +
                     " c5=" + std::to_string(c.c5));
}

CheckResult check_ma_yang_li(const Graph& g) { return check_ma_yang_li(g, graph_inertia(g)); }

CheckResult check_torgasev(std::size_t order, const Inertia& i, bool reduced) {
  if (!reduced) return not_applicable(check_id::torgasev, "graph is not reduced", true);
  if (i.n_minus < 1 || i.n_minus > 3)
    return not_applicable(check_id::torgasev, "table covers n- in {1,2,3}", true);
  const TorgasevRow row = kTorgasev[i.n_minus - 1];
  std::vector<CheckResult> parts;
  parts.push_back(inequality("order", big(order), big(row.max_order), true, "n <= n(k)"));
  parts.push_back(inequality("n_plus", big(i.n_plus), big(row.max_plus), true, "n+ <= n+(k)"));
  return combine(check_id::torgasev, std::move(parts));
}

CheckResult check_torgasev(const Graph& g) {
  return check_torgasev(g.order(), graph_inertia(g), is_reduced(g));
}

CheckResult check_mohammadian_order(std::size_t order, const Inertia& i, bool reduced) {
  if (!reduced) return not_applicable(check_id::mohammadian_order, "graph is not reduced");
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2, i.n_minus + 1);
  return inequality(check_id::mohammadian_order, big(order), bound - 2, false);
}

CheckResult check_mohammadian_order(const Graph& g) {
  return check_mohammadian_order(g.order(), graph_inertia(g), is_reduced(g));
}

BigInt rank_order_bound(std::size_t rank) {
  if (rank < 2) throw std::invalid_argument("rank/order bound needs rank >= 2");
  BigInt p;
  if (rank % 2 == 0) {
    mpz_ui_pow_ui(p.get_mpz_t(), 2, (rank + 2) / 2);
    return p - 2;
  }
  mpz_ui_pow_ui(p.get_mpz_t(), 2, (rank - 3) / 2);
  return 5 * p - 2;
}

CheckResult check_rank_order(std::size_t order, const Inertia& i, bool reduced) {
  if (!reduced) return not_applicable(check_id::rank_order, "graph is not reduced");
  if (i.rank() < 2) return not_applicable(check_id::rank_order, "rank below 2");
  return inequality(check_id::rank_order, big(order), rank_order_bound(i.rank()), false);
}

CheckResult check_rank_order(const Graph& g) {
  return check_rank_order(g.order(), graph_inertia(g), is_reduced(g));
}

namespace {

CheckResult absolute_bound_from(std::size_t n, const BigInt& f, const BigInt& g,
                                std::string note) {
  std::vector<CheckResult> parts;
  parts.push_back(inequality("f", 2 * big(n), f * (f + 3), true, "2n <= f(f+3)"));
  parts.push_back(inequality("g", 2 * big(n), g * (g + 3), true, "2n <= g(g+3)"));
  return combine(check_id::absolute_bound, std::move(parts), std::move(note));
}

}  // namespace

CheckResult check_absolute_bound(const SpectrumSpec& s) {
  s.validate();
  if (s.pairs.size() != 3 || s.pairs[0].second != 1)
    return not_applicable(check_id::absolute_bound,
                          "needs three distinct eigenvalues with a simple largest", true);
  return absolute_bound_from(s.order, big(s.pairs[1].second), big(s.pairs[2].second),
                             "f=" + std::to_string(s.pairs[1].second) +
                                 " g=" + std::to_string(s.pairs[2].second));
}

std::optional<SrgParameters> strongly_regular_parameters(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || g.size() == 0 || !is_connected(g)) return std::nullopt;
  const std::size_t k = g.degree(0);
  if (k == n - 1) return std::nullopt;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  std::optional<std::size_t> lambda, mu;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < g.words(); ++w)
        common += static_cast<std::size_t>(std::popcount(g.row(u)[w] & g.row(v)[w]));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot)
        slot = common;
      else if (*slot != common)
        return std::nullopt;
    }
  // mu == k is complete multipartite, where the bound does not apply.
  if (!lambda || !mu || *mu == k) return std::nullopt;
  return SrgParameters{n, k, *lambda, *mu};
}

CheckResult check_absolute_bound(const Graph& g) {
  const auto p = strongly_regular_parameters(g);
  if (!p)
    return not_applicable(check_id::absolute_bound,
                          "not a primitive strongly regular graph", true);
  const BigInt n1 = big(p->n - 1);
  const BigInt diff = big(static_cast<std::int64_t>(p->lambda) - static_cast<std::int64_t>(p->mu));
  const BigInt disc = diff * diff + 4 * (big(p->k) - big(p->mu));
  const BigInt trace_term = 2 * big(p->k) + n1 * diff;
  BigInt f;
  if (trace_term == 0) {
    f = n1 / 2;
  } else {
    BigInt root = sqrt(disc);
    if (root * root != disc)
      return not_applicable(check_id::absolute_bound, "irrational eigenvalues with f != g",
                            true);
    BigInt num = n1 * root - trace_term;
    if (num % (2 * root) != 0)
      return not_applicable(check_id::absolute_bound, "infeasible multiplicities", true);
    f = num / (2 * root);
  }
  const BigInt gmult = n1 - f;
  return absolute_bound_from(p->n, f, gmult,
                             "srg(" + std::to_string(p->n) + "," + std::to_string(p->k) + "," +
                                 std::to_string(p->lambda) + "," + std::to_string(p->mu) +
                                 ") f=" + f.get_str() + " g=" + gmult.get_str());
}

CheckResult check_energy(const Graph& g, const Inertia& i) {
  if (g.order() == 0) return not_applicable(check_id::energy, "empty graph", true);
  const EnergyReport e = check_energy_bounds(g, i);
  std::vector<CheckResult> parts;
  parts.push_back(real_inequality("lower", e.lower_bound, e.energy, kEnergyTolerance,
                                  "n+ + n- <= E"));
  parts.push_back(real_inequality("upper", e.energy, e.upper_bound, kEnergyTolerance,
                                  "E <= 2|lambda_min| n-"));
  parts.push_back(real_inequality("lemma", static_cast<double>(i.n_plus), e.lemma_rhs,
                                  kEnergyTolerance, "n+ <= n-(2|lambda_min| - 1)"));
  char buf[64];
  std::snprintf(buf, sizeof buf, "energy=%.12g", e.energy);
  return combine(check_id::energy, std::move(parts), buf);
}

CheckResult check_tree_laplacian(const Graph& g) {
  if (!is_tree(g)) return not_applicable(check_id::tree_laplacian, "graph is not a tree", true);
  const std::size_t count =
      count_eigenvalues_in_interval(laplacian_matrix(g), Rational(0), Rational(2), true, false);
  return inequality(check_id::tree_laplacian, big((g.order() + 1) / 2), big(count), true,
                    "ceil(n/2) <= #Laplacian eigenvalues in [0,2)");
}

CheckResult check_cograph_inertia(const Graph& g, const Inertia& i) {
  if (!is_cograph(g))
    return not_applicable(check_id::cograph_inertia, "graph contains an induced P4", true);
  std::vector<CheckResult> parts;
  parts.push_back(inequality("inertia", big(i.n_plus), big(i.n_minus), true, "n+ <= n-"));
  const std::size_t gap = count_eigenvalues_in_interval(adjacency_matrix(g), Rational(-1),
                                                        Rational(0), false, false);
  parts.push_back(inequality("gap", big(gap), 0, true, "no eigenvalues in (-1,0)"));
  return combine(check_id::cograph_inertia, std::move(parts));
}

CheckResult check_self_complementary(const Graph& g, const Inertia& i, std::size_t limit) {
  const std::size_t n = g.order();
  if (4 * g.size() != n * (n ? n - 1 : 0))
    return not_applicable(check_id::self_complementary, "not self-complementary", true);
  if (n > limit)
    return not_applicable(check_id::self_complementary,
                          "order above isomorphism limit " + std::to_string(limit), true);
  if (!is_self_complementary(g, limit))
    return not_applicable(check_id::self_complementary, "not self-complementary", true);
  return inequality(check_id::self_complementary, big(i.n_plus), big(i.n_minus) + 1, true,
                    "n+ <= n- + 1");
}

const CheckResult* ConjectureReport::find(std::string_view id) const {
  for (const auto& r : results)
    if (r.check_id == id) return &r;
  return nullptr;
}

ConjectureReport run_all_checks(const Graph& g, const CheckOptions& options,
                                std::string graph_id) {
  const auto started = std::chrono::steady_clock::now();
  ConjectureReport report;
  report.graph_id = std::move(graph_id);
  report.order = g.order();
  report.size = g.size();

  if (g.order() > options.exact_limit && options.allow_approximate) {
    const FloatSpectrum fs = float_spectrum(adjacency_matrix(g));
    report.inertia = approximate_inertia(fs, 10 * fs.residual_bound + 1e-9);
    report.approximate = true;
  } else {
    report.inertia = graph_inertia(g);
  }
  const Inertia& in = report.inertia;
  const bool reduced = is_reduced(g);
  report.reduced = reduced;

  for (const auto& id : options.enabled) {
    try {
      if (id == check_id::main)
        report.results.push_back(check_main(in));
      else if (id == check_id::signature_form)
        report.results.push_back(check_signature_form(in));
      else if (id == check_id::weaker)
        report.results.push_back(check_weaker_conjecture(in));
      else if (id == check_id::line_graph)
        report.results.push_back(check_line_graph_conjecture(g));
      else if (id == check_id::ma_yang_li)
        report.results.push_back(check_ma_yang_li(g, in, options.cycle_limit));
      else if (id == check_id::torgasev)
        report.results.push_back(check_torgasev(g.order(), in, reduced));
      else if (id == check_id::mohammadian_order)
        report.results.push_back(check_mohammadian_order(g.order(), in, reduced));
      else if (id == check_id::rank_order)
        report.results.push_back(check_rank_order(g.order(), in, reduced));
      else if (id == check_id::absolute_bound)
        report.results.push_back(check_absolute_bound(g));
      else if (id == check_id::energy)
        report.results.push_back(check_energy(g, in));
      else if (id == check_id::tree_laplacian)
        report.results.push_back(check_tree_laplacian(g));
      else if (id == check_id::cograph_inertia)
        report.results.push_back(check_cograph_inertia(g, in));
      else if (id == check_id::self_complementary)
        report.results.push_back(check_self_complementary(g, in, options.isomorphism_limit));
      else
        report.results.push_back(not_applicable(id, "unknown check"));
    } catch (const std::exception& e) {
      report.results.push_back(not_applicable(id, std::string("error: ") + e.what()));
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

ConjectureReport run_spectrum_checks(const std::string& name, const SpectrumSpec& s,
                                     const std::vector<std::string>& enabled) {
  const auto started = std::chrono::steady_clock::now();
  ConjectureReport report;
  report.graph_id = name;
  report.order = s.order;
  report.inertia = inertia_from_spectrum(s);
  for (const auto& id : enabled) {
    if (id == check_id::main)
      report.results.push_back(check_main(report.inertia));
    else if (id == check_id::signature_form)
      report.results.push_back(check_signature_form(report.inertia));
    else if (id == check_id::weaker)
      report.results.push_back(check_weaker_conjecture(report.inertia));
    else if (id == check_id::absolute_bound)
      report.results.push_back(check_absolute_bound(s));
    else
      report.results.push_back(not_applicable(id, "needs a graph, fixture is spectrum-only"));
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

namespace {

ViolationKind worst(const CheckResult& r) {
  ViolationKind out = ViolationKind::none;
  if (r.parts.empty()) {
    if (r.verdict == Verdict::violated)
      out = r.proven ? ViolationKind::proven : ViolationKind::conjecture;
    return out;
  }
  for (const auto& p : r.parts) out = std::max(out, worst(p));
  return out;
}

}  // namespace

ViolationKind classify(const ConjectureReport& report) {
  ViolationKind out = ViolationKind::none;
  for (const auto& r : report.results) out = std::max(out, worst(r));
  return out;
}

}  // namespace inertia
