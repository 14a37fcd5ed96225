#pragma once

#include <limits>
#include <string>

namespace patchcap {

/// Nonnegative reactivity that may take the distinguished value "infinite"
/// (a perfectly absorbing patch). Formulas branch on is_infinite() instead of
/// relying on IEEE arithmetic with a huge float.
class Reactivity {
 public:
  constexpr Reactivity() = default;
  /// Throws DomainError for negative or NaN values. +inf maps to infinite().
  explicit Reactivity(double value);

  static constexpr Reactivity infinite() {
    Reactivity r;
    r.infinite_ = true;
    return r;
  }
  static constexpr Reactivity zero() { return Reactivity{}; }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0.0; }

  /// Finite value; DomainError if infinite.
  double value() const;
  /// Finite value, or +inf for the infinite reactivity (for printing/sorting).
  constexpr double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  /// Multiplies a finite reactivity by a positive factor; infinite stays infinite.
  Reactivity scaled(double factor) const;

  /// "inf" or the shortest round-trip decimal representation.
  std::string to_string() const;
  /// Accepts "inf", "infinity", "Inf" or a decimal number.
  static Reactivity parse(const std::string& text);

  friend constexpr bool operator==(const Reactivity& a, const Reactivity& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const Reactivity& a, const Reactivity& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(const Reactivity& a, const Reactivity& b) {
    return !(b < a);
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace patchcap
