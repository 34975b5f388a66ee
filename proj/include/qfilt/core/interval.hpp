#pragma once

namespace qfilt {

/// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const noexcept { return !(lo <= hi); }
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
  double width() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  double clamp(double x) const noexcept { return x < lo ? lo : (x > hi ? hi : x); }
};

}  // namespace qfilt
