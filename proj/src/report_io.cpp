#include "inertia/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace inertia {

namespace {

using Json = nlohmann::ordered_json;

Json number(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json result_json(const CheckResult& r) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.verdict != Verdict::not_applicable) {
    if (r.real_lhs) {
      j["lhs"] = *r.real_lhs;
      j["rhs"] = *r.real_rhs;
      j["margin"] = *r.real_rhs - *r.real_lhs;
      j["approximate"] = true;
    } else {
      j["lhs"] = number(r.lhs);
      j["rhs"] = number(r.rhs);
      j["margin"] = number(r.margin);
    }
  }
  j["proven"] = r.proven;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.parts.empty()) {
    Json parts = Json::object();
    for (const auto& p : r.parts) parts[p.check_id] = result_json(p);
    j["parts"] = std::move(parts);
  }
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string margin_text(const CheckResult& r) {
  if (r.verdict == Verdict::not_applicable) return "";
  if (r.real_lhs) {
    std::ostringstream os;
    os.precision(12);
    os << (*r.real_rhs - *r.real_lhs);
    return os.str();
  }
  return r.margin.get_str();
}

}  // namespace

std::string to_jsonl(const ConjectureReport& report, std::optional<std::size_t> line,
                     bool timings) {
  Json j;
  if (line) j["line"] = *line;
  j["graph"] = report.graph_id;
  j["order"] = report.order;
  if (report.size) j["size"] = *report.size;
  j["inertia"] = {{"n_plus", report.inertia.n_plus},
                  {"n_zero", report.inertia.n_zero},
                  {"n_minus", report.inertia.n_minus}};
  j["signature"] = report.inertia.signature();
  j["rank"] = report.inertia.rank();
  if (report.reduced) j["reduced"] = *report.reduced;
  j["approximate"] = report.approximate;
  Json results = Json::object();
  for (const auto& r : report.results) results[r.check_id] = result_json(r);
  j["results"] = std::move(results);
  if (timings)
    j["elapsed_us"] =
        std::chrono::duration_cast<std::chrono::microseconds>(report.elapsed).count();
  return j.dump();
}

std::string csv_header(const std::vector<std::string>& checks, bool timings) {
  std::string out = "line,graph,order,size,n_plus,n_zero,n_minus,signature,rank,reduced,approximate";
  for (const auto& id : checks) out += "," + id + "_verdict," + id + "_margin";
  if (timings) out += ",elapsed_us";
  return out;
}

std::string to_csv_row(const ConjectureReport& report, std::optional<std::size_t> line,
                       const std::vector<std::string>& checks, bool timings) {
  std::ostringstream os;
  if (line) os << *line;
  os << ',' << csv_escape(report.graph_id) << ',' << report.order << ',';
  if (report.size) os << *report.size;
  os << ',' << report.inertia.n_plus << ',' << report.inertia.n_zero << ','
     << report.inertia.n_minus << ',' << report.inertia.signature() << ','
     << report.inertia.rank() << ',';
  if (report.reduced) os << (*report.reduced ? "true" : "false");
  os << ',' << (report.approximate ? "true" : "false");
  for (const auto& id : checks) {
    const CheckResult* r = report.find(id);
    if (r)
      os << ',' << to_string(r->verdict) << ',' << margin_text(*r);
    else
      os << ",,";
  }
  if (timings)
    os << ','
       << std::chrono::duration_cast<std::chrono::microseconds>(report.elapsed).count();
  return os.str();
}

}  // namespace inertia
