#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/count.hpp"
#include "turan/forest.hpp"
#include "turan/multipartite.hpp"

namespace turan {

inline constexpr int kMaxGraphVertices = 16;
inline constexpr int kDefaultGraphCap = 10;
inline constexpr int kDefaultExhaustiveCap = 7;
inline constexpr int kHardExhaustiveCap = 8;
inline constexpr int kDefaultWitnessCap = 10;

/// Simple undirected graph on at most kMaxGraphVertices vertices, one
/// adjacency bitmask per vertex.
///
/// Edge masks (as used by the exhaustive search) number the vertex pairs
/// column by column: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... which is
/// the same bit order graph6 uses for the upper triangle.
class SmallGraph {
 public:
  explicit SmallGraph(int n = 0);

  static SmallGraph from_edge_mask(int n, std::uint64_t mask);

  /// Standard graph6 (n <= 62): one byte n+63, then the upper-triangle bits
  /// in edge-mask order packed six per byte, most significant first, padded
  /// with zeros, each byte offset by 63.
  static SmallGraph from_graph6(std::string_view text);
  std::string graph6() const;

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  std::uint32_t neighbors(int v) const { return adj_[v]; }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  std::uint64_t edge_mask() const;

  /// Induced subgraph on all vertices except those in `removed`, relabelled
  /// in increasing order.
  SmallGraph without_vertices(std::uint32_t removed) const;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int n_;
  std::array<std::uint32_t, kMaxGraphVertices> adj_{};
};

/// Number of vertex pairs, i.e. bits in an edge mask.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Vertices in consecutive blocks, one block per part; edges between blocks.
SmallGraph explicit_multipartite(const PartSizes& parts, int cap = kDefaultGraphCap);

/// The forest drawn explicitly: paths laid out consecutively.
SmallGraph forest_graph(const LinearForest& forest, int cap = kMaxGraphVertices);

/// Backtracking count of injective homomorphisms of the forest into g.
Count count_injective_homs_explicit(const LinearForest& forest, const SmallGraph& g);

Count count_copies_explicit(const LinearForest& forest, const SmallGraph& g);

/// True iff g has no clique on r vertices (r >= 2).
bool is_clique_free(const SmallGraph& g, int r);

struct SearchOptions {
  int cap = kDefaultExhaustiveCap;
  int workers = 1;
  int witness_cap = kDefaultWitnessCap;
};

struct ExtremalResult {
  int n = 0;
  int k = 0;
  LinearForest forest;
  Count max_count = 0;
  Count turan_count = 0;
  /// Graphs attaining max_count, smallest edge masks first.
  std::vector<SmallGraph> witnesses;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t clique_free_graphs = 0;
};

/// ex(n, forest, K_{k+1}) by scanning all 2^(n choose 2) labelled graphs.
/// Throws std::out_of_range when n exceeds options.cap (or the hard limit).
ExtremalResult extremal_search(const LinearForest& forest, int n, int k,
                               const SearchOptions& options = {});

}  // namespace turan
