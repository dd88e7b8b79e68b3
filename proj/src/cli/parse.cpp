#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "qmesh/cli.hpp"
#include "qmesh/errors.hpp"

namespace qmesh::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

double to_real(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::size_t to_count(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::filesystem::path default_output_dir() {
  if (const char* dir = std::getenv("QMESH_OUT_DIR"); dir && *dir) return dir;
  return ".";
}

std::vector<double> parse_real_values(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw UsageError("empty value list");
  if (const auto dots = spec.find(".."); dots != std::string_view::npos) {
    const auto colon = spec.find(':', dots);
    if (colon == std::string_view::npos) throw UsageError("real range needs a step: a..b:step");
    const double a = to_real(spec.substr(0, dots));
    const double b = to_real(spec.substr(dots + 2, colon - dots - 2));
    const double step = to_real(spec.substr(colon + 1));
    if (!(step > 0.0)) throw UsageError("range step must be positive");
    if (b < a) throw UsageError("range end lies below its start");
    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 10'000'000) throw UsageError("range has too many points");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(std::min(a + static_cast<double>(i) * step, b));
    }
    return out;
  }
  std::vector<double> out;
  for (auto part : split(spec, ',')) out.push_back(to_real(part));
  return out;
}

std::vector<std::size_t> parse_count_values(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw UsageError("empty value list");
  if (const auto dots = spec.find(".."); dots != std::string_view::npos) {
    const std::size_t a = to_count(spec.substr(0, dots));
    const std::size_t b = to_count(spec.substr(dots + 2));
    if (b < a) throw UsageError("range end lies below its start");
    if (b - a > 10'000'000) throw UsageError("range has too many points");
    std::vector<std::size_t> out;
    for (std::size_t n = a; n <= b; ++n) out.push_back(n);
    return out;
  }
  std::vector<std::size_t> out;
  for (auto part : split(spec, ',')) out.push_back(to_count(part));
  return out;
}

ClusterParams parse_tau(std::string_view spec) {
  const auto parts = split(spec, ',');
  if (parts.size() != 4) throw UsageError("tau needs four comma-separated values");
  ClusterParams c;
  for (std::size_t i = 0; i < 4; ++i) c.tau[i] = to_real(parts[i]);
  c.validate();
  return c;
}

Channel parse_channel(std::string_view name) {
  if (name == "amp") return Channel::AmplitudeDamping;
  if (name == "phase") return Channel::PhaseDamping;
  throw UsageError("channel must be amp or phase");
}

std::string_view quantity_name(Quantity q) {
  return q == Quantity::SuccessProb ? "psuc" : "fidelity";
}

Quantity parse_quantity(std::string_view name) {
  if (name == "psuc") return Quantity::SuccessProb;
  if (name == "fidelity") return Quantity::Fidelity;
  throw UsageError("quantity must be psuc or fidelity");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc()) throw InternalError("number formatting failed");
  return std::string(buf, ptr);
}

}  // namespace qmesh::cli
