#include "inertia/fixtures.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>

#include "inertia/constructions.hpp"

namespace inertia {

namespace {

using nlohmann::json;

constexpr std::string_view kBuiltinTable =
#include "spectra_table.inc"
    ;

SpectrumValue parse_value(const json& v) {
  if (v.is_string()) return SpectrumValue(parse_rational(v.get<std::string>()));
  if (v.is_number_integer()) return SpectrumValue(Rational(v.get<long>()));
  if (v.is_object()) {
    const auto d = v.at("d").get<long>();
    if (d < 0) throw FixtureTableError("negative radicand");
    return SpectrumValue(parse_rational(v.at("a").get<std::string>()),
                         parse_rational(v.at("b").get<std::string>()),
                         static_cast<unsigned long>(d));
  }
  throw FixtureTableError("unsupported eigenvalue encoding: " + v.dump());
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

FixtureTable load_fixture_table(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FixtureTableError(std::string("fixture table is not valid JSON: ") + e.what());
  }
  try {
    const json& entries = doc.at("entries");
    const std::string recorded = doc.at("checksum").get<std::string>();
    const std::string actual = fnv1a_hex(entries.dump());
    if (recorded != actual)
      throw FixtureTableError("fixture table checksum mismatch: recorded " + recorded +
                              ", computed " + actual);

    FixtureTable table;
    table.version = doc.at("version").get<int>();
    for (const json& e : entries) {
      SpectrumFixture f;
      f.name = e.at("name").get<std::string>();
      f.citation = e.at("citation").get<std::string>();
      f.spectrum.order = e.at("order").get<std::size_t>();
      for (const json& pair : e.at("spectrum"))
        f.spectrum.pairs.emplace_back(parse_value(pair.at(0)), pair.at(1).get<std::size_t>());
      f.spectrum.validate();
      if (e.contains("expect_inertia")) {
        const auto t = e.at("expect_inertia").get<std::vector<std::size_t>>();
        if (t.size() != 3) throw FixtureTableError("expect_inertia must have three entries");
        f.expected_inertia = Inertia{t[0], t[1], t[2]};
      }
      if (e.contains("expect_tight"))
        f.expect_tight = e.at("expect_tight").get<std::vector<std::string>>();
      table.entries.push_back(std::move(f));
    }
    return table;
  } catch (const json::exception& e) {
    throw FixtureTableError(std::string("malformed fixture table: ") + e.what());
  } catch (const InvalidSpectrum& e) {
    throw FixtureTableError(std::string("invalid fixture spectrum: ") + e.what());
  }
}

std::string_view builtin_fixture_table_text() { return kBuiltinTable; }

const FixtureTable& builtin_fixture_table() {
  static const FixtureTable table = load_fixture_table(kBuiltinTable);
  return table;
}

std::vector<GraphFixture> graph_fixtures() {
  const std::vector<std::string> k2_tight{"main",      "signature_form",    "weaker",
                                          "torgasev",  "mohammadian_order", "rank_order"};
  const std::vector<std::string> c5_tight{"main",          "signature_form", "weaker",
                                          "line_graph",    "ma_yang_li",     "torgasev",
                                          "absolute_bound", "self_complementary"};
  const std::vector<std::string> h_tight{"main", "signature_form", "torgasev"};

  std::vector<GraphFixture> out;
  out.push_back({"K2", complete_graph(2), Inertia{1, 0, 1}, k2_tight});
  out.push_back({"C5", cycle_graph(5), Inertia{3, 0, 2}, c5_tight});
  out.push_back({"H1", h1_graph(), Inertia{6, 0, 3}, h_tight});
  out.push_back({"H2", h2_graph(), Inertia{6, 0, 3}, h_tight});
  out.push_back({"Paley(5)", paley_graph(5), Inertia{3, 0, 2}, c5_tight});
  out.push_back({"Paley(13)", paley_graph(13), Inertia{7, 0, 6}, {"self_complementary"}});
  // T(k) spectrum: (2k-4)^1, (k-4)^(k-1), (-2)^(k(k-3)/2).
  for (std::size_t k = 4; k <= 9; ++k) {
    const std::size_t minus = k * (k - 3) / 2;
    const Inertia expected = k == 4 ? Inertia{1, k - 1, minus} : Inertia{k, 0, minus};
    out.push_back({"T(" + std::to_string(k) + ")", triangular_graph(k), expected, {}});
  }
  return out;
}

}  // namespace inertia
