#include "inertia/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>

namespace inertia {

namespace {

using RowKey = std::vector<std::uint64_t>;

RowKey row_key(const Graph& g, Vertex v, bool closed) {
  RowKey key(g.row(v), g.row(v) + g.words());
  if (closed) key[v >> 6] |= std::uint64_t{1} << (v & 63);
  return key;
}

std::vector<VertexSet> classes_by(const Graph& g, bool closed) {
  std::map<RowKey, std::size_t> index;
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto [it, fresh] = index.try_emplace(row_key(g, v, closed), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

// Joint 1-WL colouring of g and h; colours are comparable across the two graphs.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Graph& g,
                                                                     const Graph& h) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cg(n), ch(n);
  for (Vertex v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    auto signature = [](const Graph& x, const std::vector<std::size_t>& c, Vertex v) {
      Signature s{c[v], {}};
      for (Vertex w : x.neighbours(v)) s.second.push_back(c[w]);
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::map<Signature, std::size_t> ids;
    std::vector<Signature> sg(n), sh(n);
    for (Vertex v = 0; v < n; ++v) {
      sg[v] = signature(g, cg, v);
      sh[v] = signature(h, ch, v);
      ids.try_emplace(sg[v], 0);
      ids.try_emplace(sh[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {cg, ch};
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h, std::vector<std::size_t> cg,
                    std::vector<std::size_t> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)), map_(g.order(), kNone),
        used_(g.order(), false) {
    order_vertices();
  }

  std::vector<Vertex> run() {
    if (extend(0)) return map_;
    return {};
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  // Rarest colour first, then grow along edges so adjacency constraints bite early.
  void order_vertices() {
    const std::size_t n = g_.order();
    std::map<std::size_t, std::size_t> freq;
    for (auto c : cg_) ++freq[c];
    std::vector<bool> placed(n, false);
    while (order_.size() < n) {
      Vertex best = kNone;
      std::size_t best_links = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (Vertex w : order_) links += g_.adjacent(v, w);
        if (best == kNone || links > best_links ||
            (links == best_links && freq[cg_[v]] < freq[cg_[best]])) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < h_.order(); ++w) {
      if (used_[w] || ch_[w] != cg_[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex u = order_[k];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = kNone;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> cg_, ch_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
};

}  // namespace

TwinClasses twin_classes(const Graph& g) {
  return {classes_by(g, false), classes_by(g, true)};
}

bool is_reduced(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return false;
  for (const auto& c : classes_by(g, false))
    if (c.size() > 1) return false;
  return true;
}

Subgraph reduce_mapped(const Graph& g) {
  Subgraph current{g, VertexSet(g.order())};
  std::iota(current.origin.begin(), current.origin.end(), Vertex{0});
  while (!is_reduced(current.graph)) {
    VertexSet drop;
    for (const auto& c : classes_by(current.graph, false))
      if (c.size() > 1) drop.push_back(c.back());
    for (Vertex v = 0; v < current.graph.order(); ++v)
      if (current.graph.degree(v) == 0) drop.push_back(v);
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());

    VertexSet keep;
    for (Vertex v = 0, d = 0; v < current.graph.order(); ++v) {
      if (d < drop.size() && drop[d] == v) {
        ++d;
        continue;
      }
      keep.push_back(v);
    }
    Subgraph next = induced_subgraph_mapped(current.graph, keep);
    for (auto& o : next.origin) o = current.origin[o];
    current = std::move(next);
  }
  return current;
}

Graph reduce(const Graph& g) { return reduce_mapped(g).graph; }

bool is_cograph(const Graph& g) {
  const auto n = static_cast<std::ptrdiff_t>(g.order());
  std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic) if (n >= 64)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    if (found.load(std::memory_order_relaxed)) continue;
    for (Vertex b = a + 1; b < g.order(); ++b)
      for (Vertex c = b + 1; c < g.order(); ++c)
        for (Vertex d = c + 1; d < g.order(); ++d) {
          const Vertex q[4] = {static_cast<Vertex>(a), b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          if (edges != 3) continue;
          std::sort(deg, deg + 4);
          // Three edges with degrees 1,1,2,2 form an induced P4.
          if (deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2)
            found.store(true, std::memory_order_relaxed);
        }
  }
  return !found.load();
}

std::vector<Vertex> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return {};
  if (g.order() == 0) return {};
  auto dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return {};
  auto [cg, ch] = refine(g, h);
  auto sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return {};
  return IsomorphismSearch(g, h, std::move(cg), std::move(ch)).run();
}

bool is_self_complementary(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > limit)
    throw LimitExceeded("self-complementarity test limited to order " + std::to_string(limit) +
                        ", graph has order " + std::to_string(n));
  if (n <= 1) return true;
  if (4 * g.size() != n * (n - 1)) return false;
  return !find_isomorphism(g, complement(g)).empty();
}

}  // namespace inertia
