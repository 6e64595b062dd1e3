#include "turan/cli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/forest.hpp"
#include "turan/multipartite.hpp"
#include "turan/oracle.hpp"
#include "turan/parallel.hpp"
#include "turan/text.hpp"
#include "turan/verify.hpp"

namespace turan::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// One "key: value" line per field, nested objects flattened with dots.
void print_human(std::ostream& out, const json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_human(out, value, name);
    } else if (value.is_array()) {
      bool flat = true;
      for (const auto& e : value) flat = flat && !e.is_structured();
      if (flat) {
        std::string line;
        for (std::size_t i = 0; i < value.size(); ++i) line += (i ? " " : "") + scalar_text(value[i]);
        out << name << ": " << line << '\n';
      } else {
        out << name << ": " << value.dump() << '\n';
      }
    } else {
      out << name << ": " << scalar_text(value) << '\n';
    }
  }
}

LinearForest forest_arg(const RunConfig& cfg) {
  if (cfg.forest.empty()) throw UsageError("--forest is required");
  return LinearForest::parse(cfg.forest);
}

IntRange range_arg(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw UsageError(std::string(flag) + " is required");
  return IntRange::parse(*text);
}

PartSizes host_arg(const RunConfig& cfg) {
  if (cfg.parts && cfg.turan) throw UsageError("give either --parts or --turan, not both");
  if (cfg.parts) return PartSizes::parse(*cfg.parts);
  if (cfg.turan) {
    const auto [n, k] = parse_turan_shorthand(*cfg.turan);
    return turan_parts(n, k);
  }
  throw UsageError("a host is required: --parts a,b,... or --turan n/k");
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const LinearForest forest = forest_arg(cfg);
  const PartSizes parts = host_arg(cfg);
  const Count homs = count_injective_homs(forest, parts);
  const Count aut = aut_order(forest);
  const Count copies = homs / aut;
  const json row = {{"forest", forest.str()},
                    {"parts", parts.str()},
                    {"injective_homs", to_string(homs)},
                    {"aut", to_string(aut)},
                    {"copies", to_string(copies)}};
  switch (cfg.format) {
    case Format::json:
      out << row.dump(2) << '\n';
      break;
    case Format::csv:
      out << "forest,parts,injective_homs,aut,copies\n"
          << csv_field(forest.str()) << ',' << csv_field(parts.str()) << ',' << to_string(homs)
          << ',' << to_string(aut) << ',' << to_string(copies) << '\n';
      break;
    case Format::human:
      print_human(out, row);
      break;
  }
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const LinearForest forest = forest_arg(cfg);
  const IntRange ns = range_arg(cfg.n_range, "--n");
  const IntRange ks = range_arg(cfg.k_range, "--k");
  if (ks.lo < 1) throw UsageError("--k must be >= 1");
  std::vector<std::pair<int, int>> tuples;
  for (int n = ns.lo; n <= ns.hi; ++n) {
    for (int k = ks.lo; k <= ks.hi; ++k) tuples.emplace_back(n, k);
  }
  const auto counts = parallel_map(tuples.size(), cfg.workers, [&](std::size_t i) {
    return count_copies_turan(forest, tuples[i].first, tuples[i].second);
  });

  json rows = json::array();
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    rows.push_back({{"n", tuples[i].first},
                    {"k", tuples[i].second},
                    {"forest", forest.str()},
                    {"count", to_string(counts[i])}});
  }
  switch (cfg.format) {
    case Format::json:
      out << rows.dump(2) << '\n';
      break;
    case Format::csv:
      out << "n,k,forest,count\n";
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        out << tuples[i].first << ',' << tuples[i].second << ',' << csv_field(forest.str()) << ','
            << to_string(counts[i]) << '\n';
      }
      break;
    case Format::human:
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << '\n';
        print_human(out, rows[i]);
      }
      break;
  }
  return kExitOk;
}

void emit_reports(const std::vector<VerificationReport>& reports, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(r);
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "claim,params,verdict,instances_checked,maximizers\n";
      for (const auto& r : reports) {
        std::string maxs;
        for (std::size_t i = 0; i < r.maximizers.size(); ++i) maxs += (i ? " " : "") + r.maximizers[i];
        out << r.claim << ',' << csv_field(r.params.dump()) << ',' << to_string(r.verdict) << ','
            << r.instances_checked << ',' << csv_field(maxs) << '\n';
      }
      break;
    case Format::human:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i) out << '\n';
        json head = {{"claim", r.claim},
                     {"params", r.params},
                     {"verdict", to_string(r.verdict)},
                     {"instances_checked", r.instances_checked},
                     {"maximizers", r.maximizers}};
        print_human(out, head);
        // Scalars only; the per-instance tables are in the JSON output.
        for (const auto& [key, value] : r.observed.items()) {
          if (!value.is_structured()) out << "observed." << key << ": " << scalar_text(value) << '\n';
        }
        if (r.counterexample) out << "counterexample: " << r.counterexample->dump() << '\n';
      }
      break;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const LinearForest forest = forest_arg(cfg);
  const SearchOptions search{cfg.cap, cfg.workers, cfg.witnesses};
  std::vector<VerificationReport> reports;

  auto grid = [&] {
    const IntRange ns = range_arg(cfg.n_range, "--n");
    const IntRange ks = range_arg(cfg.k_range, "--k");
    if (ks.lo < 1) throw UsageError("--k must be >= 1");
    std::vector<std::pair<int, int>> tuples;
    for (int n = ns.lo; n <= ns.hi; ++n) {
      for (int k = ks.lo; k <= ks.hi; ++k) tuples.emplace_back(n, k);
    }
    return tuples;
  };

  const std::string& claim = cfg.claim;
  if (claim == claims::kMultipartiteMax) {
    const auto tuples = grid();
    reports = parallel_map(tuples.size(), cfg.workers, [&](std::size_t i) {
      return verify_multipartite_max(forest, tuples[i].first, tuples[i].second);
    });
  } else if (claim == claims::kBalance) {
    reports.push_back(verify_balancing_monotone(forest, host_arg(cfg)));
  } else if (claim == claims::kOddIdentity) {
    const auto order = cfg.order ? cfg.order : default_odd_order(forest);
    if (!order) throw UsageError("forest " + forest.str() + " has no odd component of order >= 3");
    reports.push_back(verify_odd_extension_identity(forest, *order, range_arg(cfg.n_range, "--n")));
  } else if (claim == claims::kEvenIdentity) {
    const auto order = cfg.order ? cfg.order : default_even_order(forest);
    if (!order) throw UsageError("forest " + forest.str() + " has no even component");
    reports.push_back(verify_even_extension_identity(forest, *order, range_arg(cfg.n_range, "--n")));
  } else if (claim == claims::kIsolatedIdentity) {
    reports.push_back(verify_isolated_identity(forest, range_arg(cfg.n_range, "--n")));
  } else if (claim == claims::kConjecture) {
    // The scan itself is parallel; tuples run one after another.
    for (const auto& [n, k] : grid()) reports.push_back(verify_conjecture(forest, n, k, search));
  } else {
    throw UsageError("unknown claim '" + claim + "'");
  }

  emit_reports(reports, cfg.format, out);
  for (const auto& r : reports) {
    if (!r.holds()) return kExitCounterexample;
  }
  return kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const LinearForest forest = forest_arg(cfg);
  const IntRange ns = range_arg(cfg.n_range, "--n");
  const IntRange ks = range_arg(cfg.k_range, "--k");
  if (ns.lo != ns.hi || ks.lo != ks.hi) throw UsageError("search takes a single --n and --k");
  const ExtremalResult r = extremal_search(forest, ns.lo, ks.lo, {cfg.cap, cfg.workers, cfg.witnesses});
  json witnesses = json::array();
  for (const auto& g : r.witnesses) witnesses.push_back(g.graph6());
  const json doc = {{"forest", forest.str()},
                    {"n", r.n},
                    {"k", r.k},
                    {"max_count", to_string(r.max_count)},
                    {"turan_count", to_string(r.turan_count)},
                    {"graphs_scanned", r.graphs_scanned},
                    {"clique_free_graphs", r.clique_free_graphs},
                    {"witnesses", witnesses}};
  if (cfg.format == Format::json) {
    out << doc.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "forest,n,k,max_count,turan_count,graphs_scanned\n"
        << csv_field(forest.str()) << ',' << r.n << ',' << r.k << ',' << to_string(r.max_count)
        << ',' << to_string(r.turan_count) << ',' << r.graphs_scanned << '\n';
  } else {
    print_human(out, doc);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.workers = default_workers();
  std::string format = "human";

  CLI::App app{"Exact linear-forest counting in complete multipartite graphs and Turán checks",
               "turan"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--forest", cfg.forest, "Linear forest as path orders, e.g. 5,3,1");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->envname("TURAN_FORMAT");
    sub->add_option("--workers", cfg.workers, "Worker threads")
        ->check(CLI::Range(1, 1024))
        ->envname("TURAN_WORKERS");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n_range, "Vertex count or range a..b");
    sub->add_option("--k", cfg.k_range, "Part count or range a..b");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Exhaustive search cap on n")
        ->check(CLI::Range(0, kHardExhaustiveCap))
        ->envname("TURAN_CAP");
    sub->add_option("--witnesses", cfg.witnesses, "Witness graphs to keep")
        ->check(CLI::Range(0, 1000000))
        ->envname("TURAN_WITNESSES");
  };
  auto add_host = [&](CLI::App* sub) {
    sub->add_option("--parts", cfg.parts, "Part sizes a1,a2,...");
    sub->add_option("--turan", cfg.turan, "Turán host n/k");
  };

  CLI::App* count = app.add_subcommand("count", "Count copies of a forest in a multipartite host");
  add_common(count);
  add_host(count);

  CLI::App* verify = app.add_subcommand("verify", "Check a claim and print a report");
  verify->add_option("claim", cfg.claim, "Claim to verify")
      ->required()
      ->check(CLI::IsMember({claims::kMultipartiteMax, claims::kBalance, claims::kOddIdentity,
                             claims::kEvenIdentity, claims::kIsolatedIdentity, claims::kConjecture}));
  add_common(verify);
  add_host(verify);
  add_grid(verify);
  add_search(verify);
  verify->add_option("--order", cfg.order, "Component order for the identity checks");

  CLI::App* table = app.add_subcommand("table", "Tabulate copies in T(n,k)");
  add_common(table);
  add_grid(table);

  CLI::App* search = app.add_subcommand("search", "Exhaustive ex(n, H, K_{k+1}) search");
  add_common(search);
  add_grid(search);
  add_search(search);

  std::vector<const char*> argv{"turan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::human;
  try {
    std::ostringstream buffer;
    int status = kExitUsage;
    if (*count) {
      cfg.subcommand = "count";
      status = cmd_count(cfg, buffer);
    } else if (*verify) {
      cfg.subcommand = "verify";
      status = cmd_verify(cfg, buffer);
    } else if (*table) {
      cfg.subcommand = "table";
      status = cmd_table(cfg, buffer);
    } else if (*search) {
      cfg.subcommand = "search";
      status = cmd_search(cfg, buffer);
    }
    out << buffer.str();
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace turan::cli
