#ifndef FLATMETRIC_BENCH_HPP
#define FLATMETRIC_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flatmetric/distance.hpp"
#include "flatmetric/measure.hpp"

namespace flatmetric {

// clustered: positions i.i.d. uniform on [-1, 1].
// spread:    consecutive gaps 2 + uniform[0, 1), so no two atoms interact.
enum class Distribution { Clustered, Spread };

std::string_view to_string(Distribution distribution);
std::optional<Distribution> parse_distribution(std::string_view name);

struct MeasurePair {
  DiscreteMeasure mu;
  DiscreteMeasure nu;
};

/// mt19937_64 with explicit bit-to-double maps; the standard distributions
/// are implementation-defined, this keeps instances identical everywhere.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed);

  double uniform01();           // [0, 1)
  double mass();                // (0, 1]
  double uniform(double lo, double hi);
  bool coin();
  std::size_t below(std::size_t bound);  // [0, bound)

 private:
  std::mt19937_64 engine_;
};

// n atoms with masses in (0, 1], each assigned to mu or nu by a fair coin.
MeasurePair generate_instance(std::size_t n, Distribution distribution, std::uint64_t seed);
MeasurePair generate_instance(std::size_t n, Distribution distribution, InstanceRng& rng);

struct BenchRecord {
  std::size_t n = 0;
  Backend backend = Backend::Tree;
  Distribution distribution = Distribution::Clustered;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  double value = 0.0;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t reps = 1;
  Distribution distribution = Distribution::Clustered;
  std::vector<Backend> backends{Backend::Array, Backend::Tree};
  std::uint64_t seed = 1;
  double tolerance = 1e-9;  // relative, for the cross-backend check
};

class BackendMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// For each size and repetition, generates the instance with seed
/// `config.seed + rep`, times flat_distance for every backend (one discarded
/// warm-up call per size and backend) and hands each record to `sink`.
/// Throws BackendMismatch if backends disagree beyond tolerance * (1 + value).
void run_bench(const BenchConfig& config, const std::function<void(const BenchRecord&)>& sink);

std::string bench_csv_header();
std::string to_csv(const BenchRecord& record);

}  // namespace flatmetric

#endif  // FLATMETRIC_BENCH_HPP
