#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turan/count.hpp"

namespace turan {

/// A linear forest: a disjoint union of paths, stored as the multiset of path
/// orders (vertex counts) in non-increasing order.
///
/// The empty forest is a legal value (it has exactly one copy in every host);
/// parse() rejects it, so it only arises from the component edits below.
class LinearForest {
 public:
  LinearForest() = default;

  /// Throws std::invalid_argument if any order is < 1.
  explicit LinearForest(std::vector<int> orders);

  /// Parses "5,3,1" (whitespace ignored, any order). Must be nonempty.
  static LinearForest parse(std::string_view text);

  /// Canonical text form, e.g. "5,3,1". Empty forest prints as "".
  std::string str() const;

  std::span<const int> components() const { return orders_; }
  bool empty() const { return orders_.empty(); }
  int component_count() const { return static_cast<int>(orders_.size()); }
  int total_vertices() const;
  int total_edges() const;
  int multiplicity(int order) const;

  friend auto operator<=>(const LinearForest&, const LinearForest&) = default;
  friend bool operator==(const LinearForest&, const LinearForest&) = default;

 private:
  std::vector<int> orders_;
};

/// Order of the automorphism group of the forest's graph:
/// 2^(#components with order >= 2) times the product of multiplicity! over
/// distinct orders.
Count aut_order(const LinearForest& forest);

/// Replaces one P_order (order odd, >= 3) by P_{order-1}.
LinearForest delete_odd_endpoint(const LinearForest& forest, int order);

/// Removes the last two vertices of one P_order (order even, >= 2). A P_2
/// disappears entirely.
LinearForest delete_even_end_pair(const LinearForest& forest, int order);

/// Removes one P_1 component.
LinearForest delete_isolated(const LinearForest& forest);

/// Every linear forest with 1..max_vertices vertices, ordered by vertex count
/// and then lexicographically (descending) on the canonical form.
std::vector<LinearForest> all_forests(int max_vertices);

}  // namespace turan
