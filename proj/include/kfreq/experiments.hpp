#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kfreq/classify.hpp"

namespace kfreq {

inline constexpr const char* kVersion = "0.1.0";

// Process exit codes, one per error class.
enum class ExitCode : int {
  Ok = 0,
  Internal = 1,
  Usage = 2,
  Input = 3,
  Limit = 4,
  Output = 5,
  NotHamiltonian = 6,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> instance_path;
  std::optional<std::pair<int, std::uint64_t>> random;  // n, seed
  std::optional<std::string> perturb;                   // magnitude or "auto"
  std::optional<int> i;
  std::optional<std::pair<int, int>> i_range;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  std::optional<std::string> tour_path;
  std::string out_dir = ".";
  bool exhaustive = false;
  int workers = 1;
  bool residual_corrected = false;
  int repeats = 1;
  int cap = kDefaultExactCap;
  std::optional<int> n;                // analytics / idsolve
  std::string mode = "decrement";      // sparsify: decrement | threshold
  std::string rule = "f_lb";           // threshold: f_lb | fixed | kth
  double value = 0;
  int k = 1;
  bool ohc_only = false;               // sample: only OHC edges
  std::vector<std::string> argv;       // recorded in provenance lines
};

struct RunResult {
  std::vector<std::string> files;
  std::string summary;  // human-readable, printed to stdout
};

// Parses "a..b" into an inclusive range.
std::pair<int, int> parse_range(const std::string& text);
// Parses "n,seed".
std::pair<int, std::uint64_t> parse_random_spec(const std::string& text);

// Builds the instance named by the config (exactly one source).
Instance load_instance(const RunConfig& cfg);

// `# kfreq <version>, seed=<seed>, flags=<argv>` line.
std::string provenance_line(const RunConfig& cfg);

RunResult cmd_freqgraph(const RunConfig& cfg);
RunResult cmd_trajectory(const RunConfig& cfg);
RunResult cmd_sample(const RunConfig& cfg);
RunResult cmd_analytics(const RunConfig& cfg);
RunResult cmd_sparsify(const RunConfig& cfg);
RunResult cmd_solve(const RunConfig& cfg);
RunResult cmd_idsolve(const RunConfig& cfg);

RunResult run_command(const RunConfig& cfg);

// Maps an in-flight exception to its exit code.
ExitCode classify_error(const std::exception& e);

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kfreq
