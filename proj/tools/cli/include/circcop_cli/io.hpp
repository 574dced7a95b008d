#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circcop/sampling.hpp"

namespace circcop::cli {

/// Parses a radian value: a decimal ("1.25", "-3e-2") or a rational multiple
/// of pi ("pi", "-pi/2", "5pi/4", "2*pi/3", "0.5pi").
[[nodiscard]] std::optional<double> parse_angle_expr(std::string_view text);

/// Shortest-safe round-trip form: printf %.17g.
[[nodiscard]] std::string format_double(double x);

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::string_view kCsvHeader = "theta,phi";

/// `# meta: ...` line, `theta,phi` header, then one row per pair; LF endings.
void write_csv(std::ostream& os, const SampleSet& sample);

/// Reads the format written by write_csv. Comment lines (leading '#') and
/// blank lines are skipped; a completely empty input holds no points.
[[nodiscard]] std::vector<AnglePair> read_csv(std::istream& is);

/// Scatter of the pairs on [0, 2pi)^2 with ticks at multiples of pi/2.
void write_svg(std::ostream& os, const std::vector<AnglePair>& pairs, std::string_view title = {});

}  // namespace circcop::cli
