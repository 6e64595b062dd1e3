#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace turan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

enum class Format { human, json, csv };

struct RunConfig {
  std::string subcommand;
  std::string claim;  // verify only
  std::string forest;
  std::optional<std::string> parts;
  std::optional<std::string> turan;
  std::optional<std::string> n_range;
  std::optional<std::string> k_range;
  std::optional<int> order;
  Format format = Format::human;
  int cap = 7;
  int workers = 1;
  int witnesses = 10;
};

/// Parses and runs one command line. Environment variables TURAN_FORMAT,
/// TURAN_WORKERS, TURAN_CAP and TURAN_WITNESSES supply defaults for the
/// matching flags. Returns 0 (computed / verified), 1 (counterexample) or
/// 2 (usage or input error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turan::cli
