#include "turan/multipartite.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "turan/text.hpp"

namespace turan {

PartSizes::PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (int s : sizes_) {
    if (s < 0) throw std::invalid_argument("part size must be >= 0, got " + std::to_string(s));
  }
}

PartSizes PartSizes::parse(std::string_view text) { return PartSizes(parse_int_list(text)); }

std::string PartSizes::str() const { return join_ints(sizes_); }

int PartSizes::n() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

int PartSizes::max_part() const {
  return sizes_.empty() ? 0 : *std::max_element(sizes_.begin(), sizes_.end());
}

PartSizes PartSizes::canonical() const {
  std::vector<int> s;
  for (int v : sizes_) {
    if (v > 0) s.push_back(v);
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  return PartSizes(std::move(s));
}

std::pair<int, int> parse_turan_shorthand(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("Turán shorthand must look like n/k, got '" + std::string(text) + "'");
  }
  const auto n = parse_int_list(text.substr(0, slash));
  const auto k = parse_int_list(text.substr(slash + 1));
  if (n.size() != 1 || k.size() != 1) {
    throw std::invalid_argument("Turán shorthand must look like n/k, got '" + std::string(text) + "'");
  }
  if (k[0] < 1) throw std::invalid_argument("Turán graph needs k >= 1");
  return {n[0], k[0]};
}

PartSizes turan_parts(int n, int k) {
  if (k < 1) throw std::invalid_argument("turan_parts: k must be >= 1");
  if (n < 0) throw std::invalid_argument("turan_parts: n must be >= 0");
  std::vector<int> sizes(k, n / k);
  for (int i = 0; i < n % k; ++i) ++sizes[i];
  return PartSizes(std::move(sizes));
}

namespace {

struct Overflow {};

// 128-bit accumulator that refuses to wrap. The DP runs on this first and
// falls back to cpp_int when a count outgrows it.
struct Checked128 {
  unsigned __int128 v = 0;

  Checked128() = default;
  Checked128(std::uint64_t x) : v(x) {}

  Checked128& operator+=(const Checked128& o) {
    if (__builtin_add_overflow(v, o.v, &v)) throw Overflow{};
    return *this;
  }
  friend Checked128 operator*(Checked128 a, std::uint64_t b) {
    unsigned __int128 out;
    if (__builtin_mul_overflow(a.v, static_cast<unsigned __int128>(b), &out)) throw Overflow{};
    Checked128 r;
    r.v = out;
    return r;
  }
  Count to_count() const {
    Count hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) + Count(static_cast<std::uint64_t>(v));
  }
};

struct BigNum {
  Count v = 0;

  BigNum() = default;
  BigNum(std::uint64_t x) : v(x) {}

  BigNum& operator+=(const BigNum& o) {
    v += o.v;
    return *this;
  }
  friend BigNum operator*(BigNum a, std::uint64_t b) {
    a.v *= b;
    return a;
  }
  Count to_count() const { return v; }
};

// Forward DP over the forest's vertices laid out path by path. A state is
// the per-part used counts plus the part of the previously placed vertex
// (kNoPart at a component boundary). Placing a vertex in part j multiplies
// by the number of still-free vertices of j; j may not equal the previous
// part since consecutive path vertices must be adjacent.
template <class Num>
Count run_dp(const std::vector<int>& paths, const std::vector<int>& sizes) {
  const auto k = static_cast<std::uint16_t>(sizes.size());
  const std::uint16_t kNoPart = k;
  using Key = std::vector<std::uint16_t>;  // used[0..k-1], prev

  Key start(k + 1, 0);
  start[k] = kNoPart;
  std::map<Key, Num> layer;
  layer.emplace(std::move(start), Num(1));

  for (int order : paths) {
    for (int pos = 0; pos < order; ++pos) {
      const bool last_in_path = pos + 1 == order;
      std::map<Key, Num> next;
      for (const auto& [key, ways] : layer) {
        const std::uint16_t prev = key[k];
        for (std::uint16_t j = 0; j < k; ++j) {
          if (j == prev) continue;
          const int free = sizes[j] - key[j];
          if (free <= 0) continue;
          Key nk = key;
          ++nk[j];
          nk[k] = last_in_path ? kNoPart : j;
          next[std::move(nk)] += ways * static_cast<std::uint64_t>(free);
        }
      }
      layer = std::move(next);
      if (layer.empty()) return 0;
    }
  }

  Num total = 0;
  for (const auto& [key, ways] : layer) total += ways;
  return total.to_count();
}

}  // namespace

Count count_injective_homs(const LinearForest& forest, const PartSizes& parts) {
  const PartSizes host = parts.canonical();
  const int n = host.n();
  const int t = forest.total_vertices();
  if (t > n) return 0;

  // Isolated vertices go last in canonical order and can take any free
  // vertex, so they contribute a falling factorial.
  std::vector<int> paths;
  int isolated = 0;
  for (int o : forest.components()) {
    if (o == 1) {
      ++isolated;
    } else {
      paths.push_back(o);
    }
  }
  const int path_vertices = t - isolated;
  const std::vector<int> sizes(host.sizes().begin(), host.sizes().end());

  Count homs;
  if (paths.empty()) {
    homs = 1;
  } else {
    try {
      homs = run_dp<Checked128>(paths, sizes);
    } catch (const Overflow&) {
      homs = run_dp<BigNum>(paths, sizes);
    }
  }
  return homs * falling_factorial(n - path_vertices, isolated);
}

Count count_copies(const LinearForest& forest, const PartSizes& parts) {
  const Count homs = count_injective_homs(forest, parts);
  const Count aut = aut_order(forest);
  if (homs % aut != 0) {
    throw std::logic_error("injective homomorphism count " + to_string(homs) +
                           " not divisible by automorphism count " + to_string(aut));
  }
  return homs / aut;
}

Count count_copies_turan(const LinearForest& forest, int n, int k) {
  return count_copies(forest, turan_parts(n, k));
}

std::vector<PartSizes> partitions_at_most(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("partitions_at_most: negative argument");
  std::vector<PartSizes> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == k) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace turan
