#pragma once

#include <algorithm>
#include <charconv>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fockvar {

// 64-bit FNV-1a, hex encoded. Used to give every verification case a short
// stable identifier derived from its canonical input description.
inline std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Shortest round-trip text for a double; used in canonical case inputs.
inline std::string to_text(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string to_text(std::complex<double> z) {
  return "(" + to_text(z.real()) + "," + to_text(z.imag()) + ")";
}

// One checked instance of a property. A case with no rhs is a pure
// measurement (a reported constant) and always passes.
struct CaseRecord {
  std::string inputs;
  double lhs = 0.0;
  std::optional<double> rhs;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> extras;

  std::optional<double> margin() const {
    if (!rhs) return std::nullopt;
    return *rhs - lhs;
  }
  bool passed() const {
    const auto m = margin();
    return !m || *m >= -tolerance;
  }
};

inline CaseRecord bound_case(std::string inputs, double lhs, double rhs, double tolerance) {
  return CaseRecord{std::move(inputs), lhs, rhs, tolerance, {}};
}

inline CaseRecord measurement(std::string inputs, double value) {
  return CaseRecord{std::move(inputs), value, std::nullopt, 0.0, {}};
}

struct VerificationReport {
  std::string property;
  std::string anchor;
  std::vector<CaseRecord> cases;
  std::optional<double> measured;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : cases)
      if (!c.passed()) return false;
    return true;
  }

  // Smallest margin over bound cases, +inf when there are none.
  double worst_margin() const {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& c : cases)
      if (const auto m = c.margin()) worst = std::min(worst, *m);
    return worst;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.passed() ? 0 : 1;
    return n;
  }
};

}  // namespace fockvar
