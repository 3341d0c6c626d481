#pragma once

#include <limits>
#include <stdexcept>

namespace hdc {

/// A nonnegative quantity that may be the +infinity sentinel. The sentinel
/// is a tag, never a floating-point infinity inside arithmetic.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr explicit ExtendedReal(double v) : value_(v) {}
  static constexpr ExtendedReal infinity() {
    ExtendedReal e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  double value() const {
    if (infinite_) throw std::logic_error("value() of the infinity sentinel");
    return value_;
  }

  /// a <= b + tol, with every finite value below the sentinel.
  static bool leq(ExtendedReal a, ExtendedReal b, double tol = 0.0) {
    if (b.infinite_) return true;
    if (a.infinite_) return false;
    return a.value_ <= b.value_ + tol;
  }
  /// b - a, infinite when b is.
  static ExtendedReal slack(ExtendedReal a, ExtendedReal b) {
    if (b.infinite_) return infinity();
    if (a.infinite_) return ExtendedReal(-std::numeric_limits<double>::max());
    return ExtendedReal(b.value_ - a.value_);
  }

  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace hdc
