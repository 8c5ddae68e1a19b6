#ifndef FLATMETRIC_TOOLS_COMMANDS_HPP
#define FLATMETRIC_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flatmetric/bench.hpp"
#include "flatmetric/discretize.hpp"
#include "flatmetric/distance.hpp"

namespace flatmetric::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitBackendMismatch = 4;

struct DistArgs {
  std::string file_a;
  std::string file_b;
  Metric metric = Metric::Flat;
  std::optional<Backend> backend;
  bool trace = false;
};

struct ApproxArgs {
  std::vector<std::string> source;  // kind followed by its parameters
  std::size_t n = 0;
  std::string out;
  bool midpoint = false;
};

struct SelftestArgs {
  std::size_t cap = 12;
  std::size_t cases = 500;
  double h = 1e-3;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  // Test hook, not reachable from the command line.
  std::function<double(double)> perturb_flat;
};

int cmd_dist(const DistArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);
int cmd_approx(const ApproxArgs& args, std::ostream& out, std::ostream& err);
int cmd_selftest(const SelftestArgs& args, std::ostream& out, std::ostream& err);

// `1k,2k,1.6e5,1M` -> sizes. Throws std::invalid_argument.
std::vector<std::size_t> parse_size_list(const std::string& text);

// Builds a source from `uniform A B MASS`, `step FILE [A B]` or `table FILE`.
// Throws ParseError for unreadable files and std::invalid_argument for a
// malformed spec.
IntervalMeasureSource parse_source_spec(const std::vector<std::string>& tokens);

// Full command line (argv[0] included).
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace flatmetric::cli

#endif  // FLATMETRIC_TOOLS_COMMANDS_HPP
