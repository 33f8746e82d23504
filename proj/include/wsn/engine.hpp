#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsn/sim_time.hpp"

namespace wsn {

struct EventHandle {
  std::uint64_t seq = 0;
};

struct TraceRecord {
  SimTime time;
  std::uint64_t seq;
  int target;  // node id, or -1 for harness-level events
  std::string kind;
};

// Thrown when a run exceeds its wall-clock budget.
struct RunTimeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Discrete-event engine. Events execute in (fire_at, seq) order; seq is the
// insertion counter, so simultaneous events fire in scheduling order.
class Engine {
 public:
  SimTime now() const { return now_; }

  EventHandle schedule(SimTime fire_at, int target, std::string kind,
                       std::function<void()> action);

  // True iff the event was still pending and has been removed.
  bool cancel(EventHandle h);

  // Executes every event with fire_at <= t_end; afterwards now() == t_end.
  // Returns the number of events executed.
  std::size_t run_until(SimTime t_end);

  void set_trace_enabled(bool on) { trace_enabled_ = on; }
  const std::vector<TraceRecord>& trace() const { return trace_; }

  // Optional cooperative wall-clock limit, checked periodically.
  void set_wall_deadline(double wall_seconds);

 private:
  struct Item {
    SimTime fire_at;
    std::uint64_t seq;
    int target;
    std::string kind;
    std::function<void()> action;
    bool operator>(const Item& o) const {
      if (fire_at != o.fire_at) return fire_at > o.fire_at;
      return seq > o.seq;
    }
  };

  SimTime now_ = SimTime::zero();
  std::uint64_t next_seq_ = 0;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue_;
  std::set<std::uint64_t> pending_;
  bool trace_enabled_ = false;
  std::vector<TraceRecord> trace_;
  double wall_deadline_ = 0;  // 0 = unlimited; epoch seconds otherwise
};

// Renders a trace as tab-separated lines: time seq target kind.
std::string format_trace(const std::vector<TraceRecord>& trace);

}  // namespace wsn
