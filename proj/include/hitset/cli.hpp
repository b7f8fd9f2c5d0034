#pragma once

// Command-line surface. Front ends build a RunConfig and call run_command.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hitset/badness.hpp"
#include "hitset/driver.hpp"

namespace hitset {

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;  // gen ehs hs mhs minnotmc classify sample matchings count
  std::string input;    // hypergraph file (graph file for matchings)
  std::string output;   // gen and minnotmc write here; empty = stdout
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::optional<std::size_t> cutoff;
  BadnessMode badness = BadnessMode::Auto;
  Grade grade = Grade::First;
  bool feasibility = true;
  bool reduce = false;
  OutputFormat format = OutputFormat::Text;
  std::string mnmc_cache;
  std::size_t workers = 0;  // 0 = one per hardware thread
  Signature signature;      // gen
  std::size_t count = 10;   // sample: number of sets
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnresolved = 3;

// Runs one subcommand; results go to `out`, warnings and diagnostics to `err`.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hitset
