#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inertia/checks.hpp"

namespace inertia {

enum class EmitFormat { jsonl, csv };

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
/// Timing is included only on request so that default output is reproducible.
std::string to_jsonl(const ConjectureReport& report, std::optional<std::size_t> line,
                     bool timings = false);

std::string csv_header(const std::vector<std::string>& checks, bool timings = false);
std::string to_csv_row(const ConjectureReport& report, std::optional<std::size_t> line,
                       const std::vector<std::string>& checks, bool timings = false);

}  // namespace inertia
