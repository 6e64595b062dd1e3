#include "turan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "turan/parallel.hpp"

namespace turan {
namespace {

struct PairTable {
  // pairs[b] is the vertex pair stored at edge-mask bit b.
  std::array<std::pair<int, int>, pair_count(kMaxGraphVertices)> pairs{};

  constexpr PairTable() {
    int b = 0;
    for (int j = 1; j < kMaxGraphVertices; ++j) {
      for (int i = 0; i < j; ++i) pairs[b++] = {i, j};
    }
  }
};

constexpr PairTable kPairs{};

constexpr int pair_bit(int i, int j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxGraphVertices) {
    throw std::out_of_range("graph must have 0.." + std::to_string(kMaxGraphVertices) +
                            " vertices, got " + std::to_string(n));
  }
}

// Injective homomorphisms of a disjoint union of paths (all of order >= 2)
// into the graph given by `adj`. Plain backtracking over the path vertices in
// layout order.
class PathPlacer {
 public:
  PathPlacer(const std::uint32_t* adj, int n, const std::vector<int>& orders)
      : adj_(adj), all_((1U << n) - 1), orders_(orders) {}

  std::uint64_t count() const { return place(0, 0, -1, 0); }

 private:
  std::uint64_t place(std::size_t comp, int pos, int prev, std::uint32_t used) const {
    const std::uint32_t candidates = (pos == 0 ? all_ : adj_[prev]) & ~used;
    const bool last_of_path = pos + 1 == orders_[comp];
    if (last_of_path && comp + 1 == orders_.size()) {
      return static_cast<std::uint64_t>(std::popcount(candidates));
    }
    std::uint64_t total = 0;
    for (std::uint32_t rest = candidates; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t now_used = used | (1U << v);
      total += last_of_path ? place(comp + 1, 0, -1, now_used) : place(comp, pos + 1, v, now_used);
    }
    return total;
  }

  const std::uint32_t* adj_;
  std::uint32_t all_;
  const std::vector<int>& orders_;
};

struct ForestLayout {
  std::vector<int> paths;  // components of order >= 2
  int isolated = 0;
  int path_vertices = 0;

  explicit ForestLayout(const LinearForest& forest) {
    for (int o : forest.components()) {
      if (o == 1) {
        ++isolated;
      } else {
        paths.push_back(o);
        path_vertices += o;
      }
    }
  }
};

std::uint64_t falling_u64(int n, int r) {
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 0; i < r; ++i) out *= static_cast<std::uint64_t>(n - i);
  return out;
}

// With at most 16 host vertices every count fits in 64 bits (16! < 2^45).
std::uint64_t homs_u64(const ForestLayout& layout, const std::uint32_t* adj, int n) {
  if (layout.path_vertices + layout.isolated > n) return 0;
  const std::uint64_t path_homs =
      layout.paths.empty() ? 1 : PathPlacer(adj, n, layout.paths).count();
  if (path_homs == 0) return 0;
  // Isolated vertices may take any vertex the paths left free.
  return path_homs * falling_u64(n - layout.path_vertices, layout.isolated);
}

bool has_clique(const std::uint32_t* adj, std::uint32_t candidates, int needed) {
  if (needed == 0) return true;
  if (std::popcount(candidates) < needed) return false;
  for (std::uint32_t rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    // Only extend with higher-numbered vertices so each clique is tried once.
    const std::uint32_t higher = rest & ~((2U << v) - 1);
    if (has_clique(adj, adj[v] & higher, needed - 1)) return true;
  }
  return false;
}

}  // namespace

SmallGraph::SmallGraph(int n) : n_(n) { check_vertex_count(n); }

SmallGraph SmallGraph::from_edge_mask(int n, std::uint64_t mask) {
  SmallGraph g(n);
  const int bits = pair_count(n);
  if (bits < 64 && (mask >> bits) != 0) {
    throw std::invalid_argument("edge mask has bits beyond the vertex pairs of n");
  }
  for (; mask != 0; mask &= mask - 1) {
    const auto [i, j] = kPairs.pairs[std::countr_zero(mask)];
    g.add_edge(i, j);
  }
  return g;
}

void SmallGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u] |= 1U << v;
  adj_[v] |= 1U << u;
}

int SmallGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t SmallGraph::edge_mask() const {
  if (pair_count(n_) > 64) throw std::out_of_range("edge mask needs more than 64 bits");
  std::uint64_t mask = 0;
  for (const auto& [u, v] : edges()) mask |= std::uint64_t{1} << pair_bit(u, v);
  return mask;
}

std::string SmallGraph::graph6() const {
  std::string out(1, static_cast<char>(n_ + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

SmallGraph SmallGraph::from_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty graph6 string");
  const int n = static_cast<unsigned char>(text[0]) - 63;
  check_vertex_count(n);
  const int bits = pair_count(n);
  if (static_cast<int>(text.size()) != 1 + (bits + 5) / 6) {
    throw std::invalid_argument("graph6 string has wrong length for n = " + std::to_string(n));
  }
  SmallGraph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if (byte < 0 || byte > 63) throw std::invalid_argument("graph6 byte out of range");
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

SmallGraph SmallGraph::without_vertices(std::uint32_t removed) const {
  std::array<int, kMaxGraphVertices> relabel{};
  int kept = 0;
  for (int v = 0; v < n_; ++v) relabel[v] = ((removed >> v) & 1U) ? -1 : kept++;
  SmallGraph g(kept);
  for (const auto& [u, v] : edges()) {
    if (relabel[u] >= 0 && relabel[v] >= 0) g.add_edge(relabel[u], relabel[v]);
  }
  return g;
}

SmallGraph explicit_multipartite(const PartSizes& parts, int cap) {
  const int n = parts.n();
  if (n > std::min(cap, kMaxGraphVertices)) {
    throw std::out_of_range("host has " + std::to_string(n) + " vertices, explicit cap is " +
                            std::to_string(std::min(cap, kMaxGraphVertices)));
  }
  std::vector<int> block(n);
  int v = 0;
  for (int p = 0; p < parts.k(); ++p) {
    for (int c = 0; c < parts[p]; ++c) block[v++] = p;
  }
  SmallGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (block[a] != block[b]) g.add_edge(a, b);
    }
  }
  return g;
}

SmallGraph forest_graph(const LinearForest& forest, int cap) {
  const int n = forest.total_vertices();
  if (n > std::min(cap, kMaxGraphVertices)) {
    throw std::out_of_range("forest has too many vertices for an explicit graph");
  }
  SmallGraph g(n);
  int v = 0;
  for (int order : forest.components()) {
    for (int p = 1; p < order; ++p) g.add_edge(v + p - 1, v + p);
    v += order;
  }
  return g;
}

Count count_injective_homs_explicit(const LinearForest& forest, const SmallGraph& g) {
  std::array<std::uint32_t, kMaxGraphVertices> adj{};
  for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  return Count(homs_u64(ForestLayout(forest), adj.data(), g.n()));
}

Count count_copies_explicit(const LinearForest& forest, const SmallGraph& g) {
  const Count homs = count_injective_homs_explicit(forest, g);
  const Count aut = aut_order(forest);
  if (homs % aut != 0) throw std::logic_error("explicit count not divisible by automorphisms");
  return homs / aut;
}

bool is_clique_free(const SmallGraph& g, int r) {
  if (r < 2) throw std::invalid_argument("is_clique_free: r must be >= 2");
  std::array<std::uint32_t, kMaxGraphVertices> adj{};
  for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
  const std::uint32_t all = g.n() == 0 ? 0U : ((1U << g.n()) - 1);
  return !has_clique(adj.data(), all, r);
}

namespace {

struct ShardResult {
  std::uint64_t best = 0;
  bool any = false;
  std::vector<std::uint64_t> witness_masks;
  std::uint64_t clique_free = 0;
};

}  // namespace

ExtremalResult extremal_search(const LinearForest& forest, int n, int k,
                               const SearchOptions& options) {
  if (k < 1) throw std::invalid_argument("extremal_search: k must be >= 1");
  if (n < 0) throw std::invalid_argument("extremal_search: n must be >= 0");
  const int cap = std::min(options.cap, kHardExhaustiveCap);
  if (n > cap) {
    throw std::out_of_range("exhaustive search refused: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  }
  if (options.witness_cap < 0) throw std::invalid_argument("witness cap must be >= 0");

  const ForestLayout layout(forest);
  const int bits = pair_count(n);
  const std::uint64_t total = std::uint64_t{1} << bits;
  constexpr std::uint64_t kShardSize = std::uint64_t{1} << 14;
  const std::uint64_t shards = std::max<std::uint64_t>(1, total / kShardSize);
  const std::uint64_t shard_size = total / shards;
  const auto witness_cap = static_cast<std::size_t>(options.witness_cap);

  auto scan = [&](std::size_t shard) {
    ShardResult r;
    std::array<std::uint32_t, kMaxGraphVertices> adj{};
    const std::uint32_t all = n == 0 ? 0U : ((1U << n) - 1);
    const std::uint64_t lo = shard * shard_size;
    const std::uint64_t hi = lo + shard_size;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      adj.fill(0);
      for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        const auto [i, j] = kPairs.pairs[std::countr_zero(m)];
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
      if (has_clique(adj.data(), all, k + 1)) continue;
      ++r.clique_free;
      const std::uint64_t homs = homs_u64(layout, adj.data(), n);
      if (!r.any || homs > r.best) {
        r.any = true;
        r.best = homs;
        r.witness_masks.clear();
      }
      if (homs == r.best && r.witness_masks.size() < witness_cap) r.witness_masks.push_back(mask);
    }
    return r;
  };
  const auto results = parallel_map(static_cast<std::size_t>(shards), options.workers, scan);

  ExtremalResult out;
  out.n = n;
  out.k = k;
  out.forest = forest;
  out.graphs_scanned = total;
  std::uint64_t best = 0;
  bool any = false;
  for (const auto& r : results) {
    out.clique_free_graphs += r.clique_free;
    if (r.any && (!any || r.best > best)) {
      best = r.best;
      any = true;
    }
  }
  // Shards cover ascending mask ranges, so concatenating in shard order keeps
  // the smallest masks first.
  std::vector<std::uint64_t> masks;
  for (const auto& r : results) {
    if (!r.any || r.best != best) continue;
    for (auto m : r.witness_masks) {
      if (masks.size() < witness_cap) masks.push_back(m);
    }
  }
  for (auto m : masks) out.witnesses.push_back(SmallGraph::from_edge_mask(n, m));

  const Count aut = aut_order(forest);
  out.max_count = Count(best) / aut;
  out.turan_count =
      count_copies_explicit(forest, explicit_multipartite(turan_parts(n, k), kMaxGraphVertices));
  return out;
}

}  // namespace turan
