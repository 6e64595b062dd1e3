#include "turan/text.hpp"

#include <charconv>
#include <stdexcept>

namespace turan {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  }
  return out;
}

int parse_nonnegative(std::string_view token, std::string_view whole) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last || value < 0) {
    throw std::invalid_argument("malformed integer '" + std::string(token) + "' in '" +
                                std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty integer list");
  std::vector<int> out;
  std::string_view rest = s;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_nonnegative(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

IntRange IntRange::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto dots = s.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_nonnegative(s, text);
  } else {
    r.lo = parse_nonnegative(std::string_view(s).substr(0, dots), text);
    r.hi = parse_nonnegative(std::string_view(s).substr(dots + 2), text);
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::string IntRange::str() const {
  if (lo == hi) return std::to_string(lo);
  return std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace turan
