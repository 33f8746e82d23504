#pragma once

#include <cstdint>
#include <compare>

namespace wsn {

// Simulation timestamp with fixed-point microsecond resolution.
// Integer representation keeps event ordering platform-independent.
class SimTime {
 public:
  constexpr SimTime() = default;

  static constexpr SimTime from_usec(std::int64_t us) { return SimTime(us); }
  static constexpr SimTime from_seconds(double s) {
    return SimTime(static_cast<std::int64_t>(s * 1e6 + (s >= 0 ? 0.5 : -0.5)));
  }
  static constexpr SimTime zero() { return SimTime(0); }

  constexpr std::int64_t usec() const { return us_; }
  constexpr double seconds() const { return static_cast<double>(us_) / 1e6; }

  constexpr auto operator<=>(const SimTime&) const = default;

  constexpr SimTime operator+(SimTime o) const { return SimTime(us_ + o.us_); }
  constexpr SimTime operator-(SimTime o) const { return SimTime(us_ - o.us_); }

 private:
  explicit constexpr SimTime(std::int64_t us) : us_(us) {}
  std::int64_t us_ = 0;
};

}  // namespace wsn
