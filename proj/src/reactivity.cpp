#include "patchcap/reactivity.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include "patchcap/errors.hpp"

namespace patchcap {

Reactivity::Reactivity(double value) {
  if (std::isnan(value) || value < 0.0) {
    throw DomainError("reactivity must be nonnegative, got " + std::to_string(value));
  }
  if (std::isinf(value)) {
    infinite_ = true;
  } else {
    value_ = value;
  }
}

double Reactivity::value() const {
  if (infinite_) throw DomainError("finite value requested from infinite reactivity");
  return value_;
}

Reactivity Reactivity::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw DomainError("reactivity scale factor must be positive and finite");
  }
  if (infinite_) return infinite();
  return Reactivity(value_ * factor);
}

std::string Reactivity::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

Reactivity Reactivity::parse(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity" || lower == "+inf") return infinite();
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw DomainError("cannot parse reactivity '" + text + "'");
  }
  return Reactivity(v);
}

}  // namespace patchcap
