#include "flatmetric/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "flatmetric/flat.hpp"
#include "flatmetric/measure_io.hpp"

namespace flatmetric {

std::string_view to_string(Distribution distribution) {
  return distribution == Distribution::Clustered ? "clustered" : "spread";
}

std::optional<Distribution> parse_distribution(std::string_view name) {
  if (name == "clustered") return Distribution::Clustered;
  if (name == "spread") return Distribution::Spread;
  return std::nullopt;
}

InstanceRng::InstanceRng(std::uint64_t seed) : engine_(seed) {}

double InstanceRng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double InstanceRng::mass() { return 1.0 - uniform01(); }

double InstanceRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

bool InstanceRng::coin() { return (engine_() >> 63) != 0; }

std::size_t InstanceRng::below(std::size_t bound) {
  return static_cast<std::size_t>(uniform01() * static_cast<double>(bound));
}

MeasurePair generate_instance(std::size_t n, Distribution distribution, InstanceRng& rng) {
  std::vector<Atom> mu;
  std::vector<Atom> nu;
  double position = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (distribution == Distribution::Clustered) {
      position = rng.uniform(-1.0, 1.0);
    } else if (i > 0) {
      position += 2.0 + rng.uniform01();
    }
    const double mass = rng.mass();
    (rng.coin() ? mu : nu).push_back({position, mass});
  }
  return {canonicalize(mu), canonicalize(nu)};
}

MeasurePair generate_instance(std::size_t n, Distribution distribution, std::uint64_t seed) {
  InstanceRng rng(seed);
  return generate_instance(n, distribution, rng);
}

void run_bench(const BenchConfig& config, const std::function<void(const BenchRecord&)>& sink) {
  using Clock = std::chrono::steady_clock;
  if (config.sizes.empty()) throw std::invalid_argument("bench needs at least one size");
  if (config.reps == 0) throw std::invalid_argument("bench needs at least one repetition");
  if (config.backends.empty()) throw std::invalid_argument("bench needs at least one backend");

  for (std::size_t n : config.sizes) {
    bool warmed_up = false;
    for (std::size_t rep = 0; rep < config.reps; ++rep) {
      const std::uint64_t seed = config.seed + rep;
      const MeasurePair pair = generate_instance(n, config.distribution, seed);
      const SignedAtomList delta = difference(pair.mu, pair.nu);
      if (!warmed_up) {
        for (Backend backend : config.backends) flat_distance(delta, FlatOptions{backend, {}, false});
        warmed_up = true;
      }

      std::optional<double> reference;
      for (Backend backend : config.backends) {
        const FlatOptions options{backend, {}, false};
        const auto start = Clock::now();
        const double value = flat_distance(delta, options);
        const auto stop = Clock::now();

        BenchRecord record{n, backend, config.distribution, seed,
                           std::chrono::duration<double>(stop - start).count(), value};
        // A sub-resolution measurement is reported as one clock tick.
        if (record.seconds <= 0.0) {
          record.seconds = std::chrono::duration<double>(Clock::duration(1)).count();
        }
        if (reference && std::abs(*reference - value) > config.tolerance * (1.0 + *reference)) {
          throw BackendMismatch("backends disagree for n=" + std::to_string(n) +
                                " seed=" + std::to_string(seed) + ": " + format_real(*reference) +
                                " vs " + format_real(value));
        }
        if (!reference) reference = value;
        sink(record);
      }
    }
  }
}

std::string bench_csv_header() { return "n,backend,distribution,seed,seconds,value"; }

std::string to_csv(const BenchRecord& record) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.9g", record.seconds);
  return std::to_string(record.n) + ',' + std::string(to_string(record.backend)) + ',' +
         std::string(to_string(record.distribution)) + ',' + std::to_string(record.seed) + ',' +
         seconds + ',' + format_real(record.value);
}

}  // namespace flatmetric
