#include "flatmetric/measure_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace flatmetric {

ParseError::ParseError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      source_(std::move(source)),
      line_(line) {}

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

bool parse_double(const std::string& token, double& out) {
  // strtod accepts "inf"/"nan"; those are rejected later by the finiteness check.
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end != token.c_str() && *end == '\0';
}

// Calls row(line_no, first, second) for every data line.
template <class RowFn>
void for_each_row(std::istream& in, const std::string& source, RowFn&& row) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string lhs;
    std::string rhs;
    std::string extra;
    fields >> lhs >> rhs;
    if (rhs.empty()) throw ParseError(source, line_no, "expected two columns, got '" + line + "'");
    if (fields >> extra) throw ParseError(source, line_no, "unexpected trailing field '" + extra + "'");
    double x = 0.0;
    double y = 0.0;
    if (!parse_double(lhs, x)) throw ParseError(source, line_no, "invalid number '" + lhs + "'");
    if (!parse_double(rhs, y)) throw ParseError(source, line_no, "invalid number '" + rhs + "'");
    if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError(source, line_no, "non-finite value");
    row(line_no, x, y);
  }
}

}  // namespace

std::vector<std::pair<double, double>> parse_columns(std::istream& in, const std::string& source) {
  std::vector<std::pair<double, double>> rows;
  for_each_row(in, source, [&](std::size_t, double x, double y) { rows.emplace_back(x, y); });
  return rows;
}

std::vector<Atom> parse_atoms(std::istream& in, const std::string& source) {
  std::vector<Atom> atoms;
  for_each_row(in, source, [&](std::size_t line_no, double position, double mass) {
    if (mass < 0.0) throw ParseError(source, line_no, "negative mass " + format_real(mass));
    atoms.push_back({position, mass});
  });
  return atoms;
}

DiscreteMeasure parse_measure(std::istream& in, const std::string& source) {
  return canonicalize(parse_atoms(in, source));
}

DiscreteMeasure read_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_measure(in, path);
}

void write_measure(std::ostream& out, const DiscreteMeasure& mu) {
  for (const Atom& atom : mu.atoms()) {
    out << format_real(atom.position) << ' ' << format_real(atom.mass) << '\n';
  }
}

void write_measure_file(const std::string& path, const DiscreteMeasure& mu) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_measure(out, mu);
}

}  // namespace flatmetric
