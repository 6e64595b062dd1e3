#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/count.hpp"
#include "turan/forest.hpp"

namespace turan {

/// Part cardinalities |A_1|, ..., |A_k| of a complete multipartite host.
///
/// The list is kept exactly as given (zeros and order included) because the
/// balancing moves address parts by index. Counting only depends on
/// canonical(): non-increasing, zeros stripped.
class PartSizes {
 public:
  PartSizes() = default;
  explicit PartSizes(std::vector<int> sizes);

  /// "a1,a2,..." with nonnegative entries.
  static PartSizes parse(std::string_view text);

  std::string str() const;
  std::span<const int> sizes() const { return sizes_; }
  int operator[](std::size_t i) const { return sizes_[i]; }
  int k() const { return static_cast<int>(sizes_.size()); }
  int n() const;
  int max_part() const;

  PartSizes canonical() const;

  friend auto operator<=>(const PartSizes&, const PartSizes&) = default;
  friend bool operator==(const PartSizes&, const PartSizes&) = default;

 private:
  std::vector<int> sizes_;
};

/// Parses the Turán shorthand "n/k".
std::pair<int, int> parse_turan_shorthand(std::string_view text);

/// n mod k parts of size ceil(n/k) followed by the rest of size floor(n/k).
PartSizes turan_parts(int n, int k);

/// Injective homomorphisms of the forest into the complete multipartite
/// graph with the given parts (forest edges must land between distinct parts).
Count count_injective_homs(const LinearForest& forest, const PartSizes& parts);

/// N(H, G): injective homomorphisms divided by aut_order(forest).
Count count_copies(const LinearForest& forest, const PartSizes& parts);

Count count_copies_turan(const LinearForest& forest, int n, int k);

/// All partitions of n into at most k positive parts, non-increasing, in
/// descending lexicographic order. n = 0 yields the single empty partition.
std::vector<PartSizes> partitions_at_most(int n, int k);

}  // namespace turan
