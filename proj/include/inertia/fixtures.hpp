#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "inertia/graph.hpp"
#include "inertia/inertia_triple.hpp"
#include "inertia/spectrum_spec.hpp"

namespace inertia {

/// Spectrum-only fixture (graphs too large or too awkward to build).
struct SpectrumFixture {
  std::string name;
  SpectrumSpec spectrum;
  std::string citation;
  std::optional<Inertia> expected_inertia;
  std::vector<std::string> expect_tight;
};

struct FixtureTable {
  int version = 0;
  std::vector<SpectrumFixture> entries;
};

class FixtureTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// FNV-1a 64-bit, lowercase hex.
std::string fnv1a_hex(std::string_view bytes);

/// Parses a table document {version, checksum, entries}. The checksum covers the
/// compact, key-sorted serialisation of `entries`. Throws FixtureTableError.
FixtureTable load_fixture_table(std::string_view json_text);

/// The table compiled into the library from data/spectra.json.
const FixtureTable& builtin_fixture_table();
std::string_view builtin_fixture_table_text();

/// Buildable graph fixture with the inertia and tight checks it must reproduce.
struct GraphFixture {
  std::string name;
  Graph graph;
  std::optional<Inertia> expected_inertia;
  std::vector<std::string> expect_tight;
};

/// K2, C5, H1, H2, Paley(5), Paley(13) and triangular T(4)..T(9).
std::vector<GraphFixture> graph_fixtures();

}  // namespace inertia
