#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "inertia/graph.hpp"

namespace inertia {

/// Malformed graph6/sparse6 input; `offset()` is the byte offset within the line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing CR/LF are tolerated.
Graph parse_graph6(std::string_view line, std::size_t max_order = kDefaultMaxOrder);

/// Decodes one sparse6 line (':' prefix, optional ">>sparse6<<" header). Loops and
/// repeated edges are rejected since Graph is simple.
Graph parse_sparse6(std::string_view line, std::size_t max_order = kDefaultMaxOrder);

/// Dispatches on the leading ':' to sparse6, otherwise graph6.
Graph parse_graph_line(std::string_view line, std::size_t max_order = kDefaultMaxOrder);

/// Canonical graph6 encoding with the shortest size prefix.
std::string write_graph6(const Graph& g);

/// Largest order representable by the graph6 size field.
inline constexpr std::size_t kGraph6MaxOrder = (std::size_t{1} << 36) - 1;

}  // namespace inertia
