#include "circcop_cli/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace circcop::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// The whole of `s` as a finite double, or nothing.
std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(x)) return std::nullopt;
  return x;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::optional<double> parse_angle_expr(std::string_view text) {
  text = trim(text);
  const auto pos = text.find("pi");
  if (pos == std::string_view::npos) return parse_number(text);

  double sign = 1.0;
  std::string_view coef = text.substr(0, pos);
  if (!coef.empty() && (coef.front() == '-' || coef.front() == '+')) {
    sign = coef.front() == '-' ? -1.0 : 1.0;
    coef.remove_prefix(1);
  }
  if (!coef.empty() && coef.back() == '*') {
    coef.remove_suffix(1);
    if (coef.empty()) return std::nullopt;
  }
  double c = 1.0;
  if (!coef.empty()) {
    if (coef.front() == '-' || coef.front() == '+') return std::nullopt;
    const auto parsed = parse_number(coef);
    if (!parsed) return std::nullopt;
    c = *parsed;
  }

  std::string_view rest = text.substr(pos + 2);
  double den = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    const auto parsed = parse_number(rest.substr(1));
    if (!parsed || *parsed == 0.0 || rest[1] == '-' || rest[1] == '+') return std::nullopt;
    den = *parsed;
  }
  return sign * c * kPi / den;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const SampleSet& sample) {
  const SimulationParams& p = sample.meta;
  os << "# meta: gamma=" << format_double(p.gamma) << " a=" << format_double(p.a)
     << " b=" << format_double(p.b) << " rho_f=" << format_double(p.rho_f)
     << " mu_f=" << format_double(p.mu_f) << " rho_g=" << format_double(p.rho_g)
     << " mu_g=" << format_double(p.mu_g) << " n=" << p.n << " seed=" << p.seed << '\n';
  os << kCsvHeader << '\n';
  for (const auto& [theta, phi] : sample.pairs) {
    os << format_double(theta.value()) << ',' << format_double(phi.value()) << '\n';
  }
}

std::vector<AnglePair> read_csv(std::istream& is) {
  std::vector<AnglePair> out;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (!header) {
      if (s != kCsvHeader) {
        throw CsvError(lineno, "expected header '" + std::string(kCsvHeader) + "'");
      }
      header = true;
      continue;
    }
    const auto comma = s.find(',');
    if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
      throw CsvError(lineno, "expected two comma-separated fields");
    }
    const auto theta = parse_number(trim(s.substr(0, comma)));
    const auto phi = parse_number(trim(s.substr(comma + 1)));
    if (!theta || !phi) throw CsvError(lineno, "fields must be finite numbers");
    out.emplace_back(Angle(*theta), Angle(*phi));
  }
  if (is.bad()) throw CsvError(lineno, "read error");
  return out;
}

void write_svg(std::ostream& os, const std::vector<AnglePair>& pairs, std::string_view title) {
  constexpr double left = 60.0;
  constexpr double top = 30.0;
  constexpr double side = 440.0;
  constexpr double width = left + side + 30.0;
  constexpr double height = top + side + 50.0;
  auto x_of = [](double theta) { return left + side * theta / kTwoPi; };
  auto y_of = [](double phi) { return top + side - side * phi / kTwoPi; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!title.empty()) os << "<title>" << xml_escape(title) << "</title>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << side << "\" height=\"" << side
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  static constexpr const char* labels[] = {"0", "π/2", "π", "3π/2", "2π"};
  os << "<g font-family=\"sans-serif\" font-size=\"12\" stroke=\"black\">\n";
  for (int k = 0; k <= 4; ++k) {
    const double t = k * kPi / 2.0;
    const std::string x = fixed(x_of(t));
    const std::string y = fixed(y_of(t));
    os << "<line x1=\"" << x << "\" y1=\"" << top + side << "\" x2=\"" << x << "\" y2=\""
       << top + side + 6 << "\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << top + side + 20 << "\" text-anchor=\"middle\" "
       << "stroke=\"none\">" << labels[k] << "</text>\n";
    os << "<line x1=\"" << left - 6 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
       << "\"/>\n";
    os << "<text x=\"" << left - 10 << "\" y=\"" << y << "\" text-anchor=\"end\" "
       << "dominant-baseline=\"middle\" stroke=\"none\">" << labels[k] << "</text>\n";
  }
  os << "<text x=\"" << left + side / 2 << "\" y=\"" << height - 8
     << "\" text-anchor=\"middle\" stroke=\"none\">θ</text>\n";
  os << "<text x=\"16\" y=\"" << top + side / 2 << "\" text-anchor=\"middle\" "
     << "stroke=\"none\">φ</text>\n";
  os << "</g>\n";

  os << "<g fill=\"black\" fill-opacity=\"0.6\">\n";
  for (const auto& [theta, phi] : pairs) {
    os << "<circle cx=\"" << fixed(x_of(theta.value())) << "\" cy=\"" << fixed(y_of(phi.value()))
       << "\" r=\"1.6\"/>\n";
  }
  os << "</g>\n</svg>\n";
}

}  // namespace circcop::cli
