#pragma once

#include <functional>

namespace evauth {

class Clock {
 public:
  virtual ~Clock() = default;
  virtual double now_s() const = 0;
  virtual void sleep_s(double seconds) = 0;
};

// Simulated time. Sleeping returns instantly after advancing the clock and
// notifying the observer, so a harness can keep co-simulated components
// (typically the energy meter) in step with whoever is sleeping.
class SimulatedClock : public Clock {
 public:
  double now_s() const override { return now_; }

  void sleep_s(double seconds) override { advance(seconds); }

  void advance(double seconds) {
    if (seconds <= 0.0) return;
    now_ += seconds;
    if (on_advance_) on_advance_(seconds);
  }

  void set_on_advance(std::function<void(double)> fn) { on_advance_ = std::move(fn); }

 private:
  double now_ = 0.0;
  std::function<void(double)> on_advance_;
};

class WallClock : public Clock {
 public:
  double now_s() const override;
  void sleep_s(double seconds) override;
};

}  // namespace evauth
