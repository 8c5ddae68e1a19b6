#ifndef FLATMETRIC_MEASURE_IO_HPP
#define FLATMETRIC_MEASURE_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flatmetric/measure.hpp"

namespace flatmetric {

// Raised for malformed measure text; line() is 1-based, 0 when the error is
// not tied to a line (e.g. the file could not be opened).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Rows of two whitespace-separated reals; blank lines and `#` comment lines
// are skipped. Values must be finite.
std::vector<std::pair<double, double>> parse_columns(std::istream& in,
                                                     const std::string& source = "<stream>");

// Text format: one `<position> <mass>` pair per line, whitespace separated.
// Blank lines and lines whose first non-blank character is '#' are skipped.
std::vector<Atom> parse_atoms(std::istream& in, const std::string& source = "<stream>");

// parse_atoms followed by canonicalize; NonFiniteInput/NegativeMass are
// reported as ParseError carrying the offending line.
DiscreteMeasure parse_measure(std::istream& in, const std::string& source = "<stream>");

DiscreteMeasure read_measure_file(const std::string& path);

// Writes the canonical form with 17 significant digits, which round-trips
// doubles exactly.
void write_measure(std::ostream& out, const DiscreteMeasure& mu);

void write_measure_file(const std::string& path, const DiscreteMeasure& mu);

std::string format_real(double value);

}  // namespace flatmetric

#endif  // FLATMETRIC_MEASURE_IO_HPP
