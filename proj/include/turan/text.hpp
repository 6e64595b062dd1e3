#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace turan {

/// Parses a comma-separated list of nonnegative integers; whitespace is
/// ignored. Throws std::invalid_argument on malformed input or an empty list.
std::vector<int> parse_int_list(std::string_view text);

std::string join_ints(const std::vector<int>& values);

/// Inclusive integer range, written "a..b" or a single value "a".
struct IntRange {
  int lo = 0;
  int hi = 0;

  static IntRange parse(std::string_view text);
  std::string str() const;
  bool contains(int v) const { return lo <= v && v <= hi; }

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

}  // namespace turan
