#include "turan/forest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "turan/text.hpp"

namespace turan {

LinearForest::LinearForest(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int o : orders_) {
    if (o < 1) throw std::invalid_argument("path order must be >= 1, got " + std::to_string(o));
  }
  std::sort(orders_.begin(), orders_.end(), std::greater<>());
}

LinearForest LinearForest::parse(std::string_view text) {
  return LinearForest(parse_int_list(text));
}

std::string LinearForest::str() const { return join_ints(orders_); }

int LinearForest::total_vertices() const {
  return std::accumulate(orders_.begin(), orders_.end(), 0);
}

int LinearForest::total_edges() const { return total_vertices() - component_count(); }

int LinearForest::multiplicity(int order) const {
  return static_cast<int>(std::count(orders_.begin(), orders_.end(), order));
}

Count aut_order(const LinearForest& forest) {
  Count out = 1;
  const auto comps = forest.components();
  std::size_t i = 0;
  while (i < comps.size()) {
    std::size_t j = i;
    while (j < comps.size() && comps[j] == comps[i]) ++j;
    const int mult = static_cast<int>(j - i);
    out *= factorial(mult);
    // Each nontrivial path can also be reversed independently.
    if (comps[i] >= 2) out <<= mult;
    i = j;
  }
  return out;
}

namespace {

std::vector<int> replace_one(const LinearForest& forest, int order, int replacement) {
  std::vector<int> orders(forest.components().begin(), forest.components().end());
  auto it = std::find(orders.begin(), orders.end(), order);
  if (it == orders.end()) {
    throw std::invalid_argument("forest " + forest.str() + " has no component of order " +
                                std::to_string(order));
  }
  if (replacement > 0) {
    *it = replacement;
  } else {
    orders.erase(it);
  }
  return orders;
}

}  // namespace

LinearForest delete_odd_endpoint(const LinearForest& forest, int order) {
  if (order % 2 == 0) throw std::invalid_argument("delete_odd_endpoint: order must be odd");
  if (order < 3) {
    throw std::invalid_argument("delete_odd_endpoint: order must be >= 3 (use delete_isolated)");
  }
  return LinearForest(replace_one(forest, order, order - 1));
}

LinearForest delete_even_end_pair(const LinearForest& forest, int order) {
  if (order % 2 != 0 || order < 2) {
    throw std::invalid_argument("delete_even_end_pair: order must be even and >= 2");
  }
  return LinearForest(replace_one(forest, order, order - 2));
}

LinearForest delete_isolated(const LinearForest& forest) {
  return LinearForest(replace_one(forest, 1, 0));
}

std::vector<LinearForest> all_forests(int max_vertices) {
  std::vector<LinearForest> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  for (int t = 1; t <= max_vertices; ++t) rec(t, t);
  return out;
}

}  // namespace turan
