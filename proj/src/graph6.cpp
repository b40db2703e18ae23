#include "inertia/graph6.hpp"

#include <cstdint>
#include <vector>

namespace inertia {

namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxChar = 126;

struct Cursor {
  std::string_view text;  // without header/line ending
  std::size_t base = 0;   // offset of text[0] in the original line

  std::size_t at(std::size_t i) const { return base + i; }
};

Cursor strip(std::string_view line, std::string_view header) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::size_t base = 0;
  if (line.starts_with(header)) {
    line.remove_prefix(header.size());
    base = header.size();
  }
  return {line, base};
}

void check_printable(const Cursor& c, std::size_t from) {
  for (std::size_t i = from; i < c.text.size(); ++i) {
    auto ch = static_cast<unsigned char>(c.text[i]);
    if (ch < kBias || ch > kMaxChar)
      throw ParseError("character " + std::to_string(ch) + " outside printable range 63..126",
                       c.at(i));
  }
}

// Reads the size field starting at `pos`; advances `pos` past it.
std::size_t read_order(const Cursor& c, std::size_t& pos, std::size_t max_order) {
  auto byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= c.text.size()) throw ParseError("truncated length header", c.at(i));
    return static_cast<unsigned char>(c.text[i]) - kBias;
  };
  const std::size_t start = pos;
  std::uint64_t n = byte(pos);
  if (n < 63) {
    pos += 1;
  } else if (pos + 1 < c.text.size() && byte(pos + 1) == 63) {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(pos + i);
    pos += 8;
  } else {
    n = 0;
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | byte(pos + i);
    pos += 4;
  }
  if (n > max_order)
    throw ParseError("order " + std::to_string(n) + " exceeds maximum " +
                         std::to_string(max_order),
                     c.at(start));
  return static_cast<std::size_t>(n);
}

void write_order(std::string& out, std::size_t n) {
  if (n > kGraph6MaxOrder)
    throw OrderOverflow("order " + std::to_string(n) + " not representable in graph6");
  auto put = [&](std::size_t value, int groups) {
    for (int g = groups - 1; g >= 0; --g)
      out.push_back(static_cast<char>(kBias + ((value >> (6 * g)) & 63)));
  };
  if (n < 63) {
    put(n, 1);
  } else if (n < 258048) {
    out.push_back(static_cast<char>(kMaxChar));
    put(n, 3);
  } else {
    out.push_back(static_cast<char>(kMaxChar));
    out.push_back(static_cast<char>(kMaxChar));
    put(n, 6);
  }
}

}  // namespace

Graph parse_graph6(std::string_view line, std::size_t max_order) {
  Cursor c = strip(line, ">>graph6<<");
  if (c.text.empty()) throw ParseError("empty graph6 line", c.at(0));
  check_printable(c, 0);
  std::size_t pos = 0;
  const std::size_t n = read_order(c, pos, max_order);

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n ? n - 1 : 0) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  const std::size_t found = c.text.size() - pos;
  if (found != expected)
    throw ParseError("expected " + std::to_string(expected) + " data bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(found),
                     c.at(found < expected ? c.text.size() : pos + expected));

  GraphBuilder b(n, max_order);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      auto chunk = static_cast<unsigned char>(c.text[pos + k / 6]) - kBias;
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    auto last = static_cast<unsigned char>(c.text.back()) - kBias;
    const unsigned pad = 6 - bits % 6;
    if (last & ((1U << pad) - 1))
      throw ParseError("nonzero padding bits", c.at(c.text.size() - 1));
  }
  return std::move(b).build();
}

Graph parse_sparse6(std::string_view line, std::size_t max_order) {
  Cursor c = strip(line, ">>sparse6<<");
  if (c.text.empty() || c.text.front() != ':')
    throw ParseError("sparse6 line must start with ':'", c.at(0));
  check_printable(c, 1);
  std::size_t pos = 1;
  const std::size_t n = read_order(c, pos, max_order);

  unsigned width = 0;
  while ((std::size_t{1} << width) < n) ++width;

  const std::size_t total_bits = (c.text.size() - pos) * 6;
  std::size_t bit = 0;
  auto next_bit = [&]() -> unsigned {
    auto chunk = static_cast<unsigned char>(c.text[pos + bit / 6]) - kBias;
    unsigned out = (chunk >> (5 - bit % 6)) & 1U;
    ++bit;
    return out;
  };

  GraphBuilder b(n, max_order);
  std::size_t v = 0;
  while (bit + 1 + width <= total_bits) {
    const std::size_t where = c.at(pos + bit / 6);
    const unsigned flag = next_bit();
    std::size_t x = 0;
    for (unsigned i = 0; i < width; ++i) x = (x << 1) | next_bit();
    if (flag) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw ParseError("sparse6 loop at vertex " + std::to_string(v), where);
      if (b.adjacent(x, v))
        throw ParseError("sparse6 repeated edge {" + std::to_string(x) + "," +
                             std::to_string(v) + "}",
                         where);
      b.add_edge(x, v);
    }
  }
  return std::move(b).build();
}

Graph parse_graph_line(std::string_view line, std::size_t max_order) {
  if (line.starts_with(">>sparse6<<") || line.starts_with(":"))
    return parse_sparse6(line, max_order);
  return parse_graph6(line, max_order);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  write_order(out, n);
  unsigned chunk = 0;
  unsigned filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + chunk));
        chunk = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(kBias + (chunk << (6 - filled))));
  return out;
}

}  // namespace inertia
