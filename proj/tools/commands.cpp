#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flatmetric/flat.hpp"
#include "flatmetric/measure_io.hpp"
#include "flatmetric/selftest.hpp"
#include "flatmetric/wasserstein.hpp"

namespace flatmetric::cli {

namespace {

std::vector<std::string> split_tokens(const std::vector<std::string>& raw) {
  std::vector<std::string> tokens;
  for (const std::string& chunk : raw) {
    std::istringstream in(chunk);
    for (std::string token; in >> token;) tokens.push_back(token);
  }
  return tokens;
}

double parse_real(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid number '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(value)) {
    throw std::invalid_argument("invalid number '" + token + "'");
  }
  return value;
}

}  // namespace

int cmd_dist(const DistArgs& args, std::ostream& out, std::ostream& err) {
  if (args.backend && args.metric != Metric::Flat) {
    err << "error: --backend only applies to --metric flat\n";
    return kExitUsage;
  }
  if (args.trace && args.metric != Metric::Flat) {
    err << "error: --trace only applies to --metric flat\n";
    return kExitUsage;
  }

  DiscreteMeasure mu;
  DiscreteMeasure nu;
  try {
    mu = read_measure_file(args.file_a);
    nu = read_measure_file(args.file_b);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  DistanceValue result;
  switch (args.metric) {
    case Metric::W1:
      result = w1_distance(mu, nu);
      break;
    case Metric::W1Normalized:
      result = normalized_w1(mu, nu);
      break;
    case Metric::W1Centralized:
      result = centralized_w1(mu, nu);
      break;
    case Metric::FlatUpper:
      result = flat_upper_bound(mu, nu);
      break;
    case Metric::Radon:
      result = {radon_distance(mu, nu), Metric::Radon, std::nullopt};
      break;
    case Metric::Flat: {
      FlatOptions options;
      options.backend = args.backend.value_or(Backend::Tree);
      if (args.trace) {
        options.trace = [&err](std::size_t k, const ConcaveEnvelope& env) {
          err << format_trace_line(k, env) << '\n';
        };
      }
      result = flat_distance(mu, nu, options);
      break;
    }
  }
  out << format_real(result.value) << '\n';
  return kExitOk;
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err) {
  try {
    out << bench_csv_header() << '\n';
    run_bench(config, [&out](const BenchRecord& record) { out << to_csv(record) << '\n'; });
  } catch (const BackendMismatch& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kExitBackendMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

IntervalMeasureSource parse_source_spec(const std::vector<std::string>& raw) {
  const std::vector<std::string> tokens = split_tokens(raw);
  if (tokens.empty()) throw std::invalid_argument("empty source spec");
  const std::string& kind = tokens[0];
  if (kind == "uniform") {
    if (tokens.size() != 4) throw std::invalid_argument("usage: uniform A B MASS");
    return uniform_source(parse_real(tokens[1]), parse_real(tokens[2]), parse_real(tokens[3]));
  }
  if (kind == "step") {
    if (tokens.size() != 2 && tokens.size() != 4) {
      throw std::invalid_argument("usage: step FILE [A B]");
    }
    const DiscreteMeasure mu = read_measure_file(tokens[1]);
    if (tokens.size() == 4) return step_source(mu, parse_real(tokens[2]), parse_real(tokens[3]));
    if (mu.empty()) throw std::invalid_argument("step source is empty; give A B explicitly");
    return step_source(mu, mu.atoms().front().position, mu.atoms().back().position);
  }
  if (kind == "table") {
    if (tokens.size() != 2) throw std::invalid_argument("usage: table FILE");
    std::ifstream in(tokens[1]);
    if (!in) throw ParseError(tokens[1], 0, "cannot open file");
    return table_source(parse_columns(in, tokens[1]));
  }
  throw std::invalid_argument("unknown source kind '" + kind + "'");
}

int cmd_approx(const ApproxArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n == 0) {
    err << "error: --n must be positive\n";
    return kExitUsage;
  }
  try {
    const IntervalMeasureSource source = parse_source_spec(args.source);
    const DiscreteMeasure approx = discretize(
        source, args.n, args.midpoint ? AtomPlacement::Midpoint : AtomPlacement::RightEndpoint);
    write_measure_file(args.out, approx);
    out << "wrote " << approx.size() << " atoms to " << args.out << " (W1 error bound "
        << format_real(discretization_error_bound(source, args.n)) << ")\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InvalidCdf& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  return kExitOk;
}

int cmd_selftest(const SelftestArgs& args, std::ostream& out, std::ostream& err) {
  SelftestConfig config;
  config.cap = args.cap;
  config.cases = args.cases;
  config.h = args.h;
  config.seed = args.seed;
  config.perturb_flat = args.perturb_flat;
  if (!(config.h > 0.0)) {
    err << "error: --h must be positive\n";
    return kExitUsage;
  }
  if (config.cap > 16) {
    err << "error: --cap is limited to 16 atoms\n";
    return kExitUsage;
  }

  out << "selftest: " << config.cases << " cases, cap " << config.cap << ", h "
      << format_real(config.h) << ", seed " << config.seed << '\n';
  const SelftestReport report = run_selftest(config);
  std::size_t total = 0;
  for (const auto& [property, count] : report.checks) {
    out << "  " << property << ": " << count << '\n';
    total += count;
  }
  if (report.passed()) {
    out << "PASS (" << total << " checks)\n";
    return kExitOk;
  }

  const Counterexample& failure = *report.failure;
  out << "FAIL: " << failure.property << ": " << failure.detail << '\n';
  const std::filesystem::path dir(args.out_dir);
  const std::string path_mu = (dir / "counterexample_mu.txt").string();
  const std::string path_nu = (dir / "counterexample_nu.txt").string();
  try {
    write_measure_file(path_mu, failure.mu);
    write_measure_file(path_nu, failure.nu);
    out << "counterexample written to " << path_mu << " and " << path_nu << '\n';
  } catch (const std::exception& e) {
    err << "warning: " << e.what() << '\n';
  }
  out << "# mu\n";
  write_measure(out, failure.mu);
  out << "# nu\n";
  write_measure(out, failure.nu);
  return kExitCheckFailed;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) throw std::invalid_argument("empty entry in size list");
    double factor = 1.0;
    const char suffix = item.back();
    if (suffix == 'k' || suffix == 'K') factor = 1e3;
    if (suffix == 'm' || suffix == 'M') factor = 1e6;
    if (factor != 1.0) item.pop_back();
    const double value = parse_real(item) * factor;
    if (!(value >= 1.0) || value != std::floor(value)) {
      throw std::invalid_argument("invalid size '" + item + "'");
    }
    sizes.push_back(static_cast<std::size_t>(value));
  }
  if (sizes.empty()) throw std::invalid_argument("size list is empty");
  return sizes;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wasserstein-type and flat distances between discrete measures on the line"};
  app.require_subcommand(1);

  std::string metric_name;
  std::string backend_name;
  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "distance between two measure files");
  dist_cmd->add_option("file_a", dist.file_a, "first measure")->required();
  dist_cmd->add_option("file_b", dist.file_b, "second measure")->required();
  dist_cmd->add_option("--metric", metric_name,
                       "w1 | w1-normalized | w1-centralized | flat | flat-upper | radon")
      ->required();
  dist_cmd->add_option("--backend", backend_name, "array | tree (flat only, default tree)");
  dist_cmd->add_flag("--trace", dist.trace, "print the envelope after every atom to stderr");

  std::string sizes_text;
  std::string distribution_name = "clustered";
  std::string bench_backends = "array,tree";
  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "time the flat backends on random instances (CSV)");
  bench_cmd->add_option("--n", sizes_text, "comma-separated sizes, k/M suffixes allowed")->required();
  bench_cmd->add_option("--reps", bench.reps, "instances per size")->capture_default_str();
  bench_cmd->add_option("--dist", distribution_name, "clustered | spread")->capture_default_str();
  bench_cmd->add_option("--backend", bench_backends, "comma-separated backends")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "base seed; instance seed is seed + rep")
      ->capture_default_str();

  ApproxArgs approx;
  auto* approx_cmd = app.add_subcommand("approx", "discretize a measure on an interval");
  approx_cmd->add_option("--source", approx.source, "uniform A B MASS | step FILE [A B] | table FILE")
      ->required()
      ->expected(1, -1);
  approx_cmd->add_option("--n", approx.n, "number of cells")->required();
  approx_cmd->add_option("--out", approx.out, "output measure file")->required();
  approx_cmd->add_flag("--midpoint", approx.midpoint, "place atoms at cell midpoints");

  SelftestArgs selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "check all metrics against the oracles");
  selftest_cmd->set_help_flag("--help", "print this help and exit");
  selftest_cmd->add_option("--cap", selftest.cap, "max atoms per instance")->capture_default_str();
  selftest_cmd->add_option("--cases", selftest.cases, "number of random instances")
      ->capture_default_str();
  selftest_cmd->add_option("--h", selftest.h, "oracle grid step")->capture_default_str();
  selftest_cmd->add_option("--seed", selftest.seed, "random seed")->capture_default_str();
  selftest_cmd->add_option("--out-dir", selftest.out_dir, "where to write counterexamples")
      ->capture_default_str();

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& arg : argv) raw.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*dist_cmd) {
    const auto metric = parse_metric(metric_name);
    if (!metric) {
      err << "error: unknown metric '" << metric_name << "'\n";
      return kExitUsage;
    }
    dist.metric = *metric;
    if (!backend_name.empty()) {
      dist.backend = parse_backend(backend_name);
      if (!dist.backend) {
        err << "error: unknown backend '" << backend_name << "'\n";
        return kExitUsage;
      }
    }
    return cmd_dist(dist, out, err);
  }
  if (*bench_cmd) {
    try {
      bench.sizes = parse_size_list(sizes_text);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    const auto distribution = parse_distribution(distribution_name);
    if (!distribution) {
      err << "error: unknown distribution '" << distribution_name << "'\n";
      return kExitUsage;
    }
    bench.distribution = *distribution;
    bench.backends.clear();
    std::istringstream names(bench_backends);
    for (std::string name; std::getline(names, name, ',');) {
      const auto backend = parse_backend(name);
      if (!backend) {
        err << "error: unknown backend '" << name << "'\n";
        return kExitUsage;
      }
      bench.backends.push_back(*backend);
    }
    return cmd_bench(bench, out, err);
  }
  if (*approx_cmd) return cmd_approx(approx, out, err);
  return cmd_selftest(selftest, out, err);
}

}  // namespace flatmetric::cli
