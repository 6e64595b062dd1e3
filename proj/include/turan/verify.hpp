#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "turan/forest.hpp"
#include "turan/multipartite.hpp"
#include "turan/oracle.hpp"
#include "turan/text.hpp"

namespace turan {

enum class Verdict { holds, counterexample };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Outcome of one verifier run.
///
/// JSON schema (keys sorted, counts as decimal strings):
///   {claim, params, verdict, maximizers[], counterexample?, instances_checked, observed}
/// `observed` carries the per-instance numbers the verdict was derived from.
struct VerificationReport {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::holds;
  std::vector<std::string> maximizers;
  std::optional<nlohmann::json> counterexample;
  std::uint64_t instances_checked = 0;
  nlohmann::json observed = nlohmann::json::object();

  bool holds() const { return verdict == Verdict::holds; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

namespace claims {
inline constexpr const char* kMultipartiteMax = "multipartite-max";
inline constexpr const char* kBalance = "balance";
inline constexpr const char* kOddIdentity = "odd-identity";
inline constexpr const char* kEvenIdentity = "even-identity";
inline constexpr const char* kIsolatedIdentity = "isolated-identity";
inline constexpr const char* kConjecture = "conjecture";
}  // namespace claims

struct VerifyOptions {
  /// Hosts with at most this many vertices are also counted by the
  /// backtracking oracle; a disagreement throws std::logic_error.
  int oracle_cap = kDefaultGraphCap;
};

/// Sweeps every partition of n into at most k parts and checks that the
/// Turán partition attains the largest copy count. All maximizers are listed.
VerificationReport verify_multipartite_max(const LinearForest& forest, int n, int k,
                                           const VerifyOptions& options = {});

/// Moves floor((sizes[j] - sizes[i]) / 2) vertices from part j to part i.
/// Requires sizes[i] < sizes[j] - 1.
PartSizes balancing_move(const PartSizes& parts, std::size_t i, std::size_t j);

/// Checks that every applicable balancing move does not decrease the copy
/// count, and that repeatedly balancing the smallest against the largest
/// part ends at the Turán partition within n moves.
VerificationReport verify_balancing_monotone(const LinearForest& forest, const PartSizes& parts,
                                             const VerifyOptions& options = {});

/// Odd-component extension: ratio N(H1)·x·(n - |V(H1)|) / N(H) over all
/// complete bipartite hosts K_{a,b}, a + b = n in n_range, must be constant.
VerificationReport verify_odd_extension_identity(const LinearForest& forest, int order,
                                                 IntRange n_range,
                                                 const VerifyOptions& options = {});

/// Even-component extension: ratio S / N(H) with S summing, over host edges
/// uv, the copies of H2 avoiding u and v times the ways to attach uv.
VerificationReport verify_even_extension_identity(const LinearForest& forest, int order,
                                                  IntRange n_range,
                                                  const VerifyOptions& options = {});

/// N(H)·(#P1 in H) = N(H - P1)·(n - |V(H)| + 1) on all bipartite hosts.
VerificationReport verify_isolated_identity(const LinearForest& forest, IntRange n_range,
                                            const VerifyOptions& options = {});

/// Exhaustive check that ex(n, H, K_{k+1}) = N(H, T(n,k)).
VerificationReport verify_conjecture(const LinearForest& forest, int n, int k,
                                     const SearchOptions& options = {});

/// Largest odd component order >= 3, or nullopt.
std::optional<int> default_odd_order(const LinearForest& forest);
/// Largest even component order, or nullopt.
std::optional<int> default_even_order(const LinearForest& forest);

}  // namespace turan
