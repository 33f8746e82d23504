#include "wsn/engine.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>

namespace wsn {

namespace {
double wall_now() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}
}  // namespace

EventHandle Engine::schedule(SimTime fire_at, int target, std::string kind,
                             std::function<void()> action) {
  if (fire_at < now_) {
    throw std::invalid_argument("schedule: event in the past (fire_at " +
                                std::to_string(fire_at.usec()) + "us < clock " +
                                std::to_string(now_.usec()) + "us)");
  }
  std::uint64_t seq = next_seq_++;
  pending_.insert(seq);
  queue_.push(Item{fire_at, seq, target, std::move(kind), std::move(action)});
  return EventHandle{seq};
}

bool Engine::cancel(EventHandle h) {
  return pending_.erase(h.seq) > 0;
}

std::size_t Engine::run_until(SimTime t_end) {
  if (t_end < now_) {
    throw std::invalid_argument("run_until: t_end precedes current clock");
  }
  std::size_t executed = 0;
  while (!queue_.empty() && queue_.top().fire_at <= t_end) {
    Item item = queue_.top();
    queue_.pop();
    if (pending_.erase(item.seq) == 0) continue;  // cancelled
    now_ = item.fire_at;
    if (trace_enabled_) {
      trace_.push_back({item.fire_at, item.seq, item.target, item.kind});
    }
    item.action();
    ++executed;
    if (wall_deadline_ > 0 && (executed & 0xfff) == 0 &&
        wall_now() > wall_deadline_) {
      throw RunTimeout("simulation exceeded wall-clock budget");
    }
  }
  now_ = t_end;
  return executed;
}

void Engine::set_wall_deadline(double wall_seconds) {
  wall_deadline_ = wall_seconds > 0 ? wall_now() + wall_seconds : 0;
}

std::string format_trace(const std::vector<TraceRecord>& trace) {
  std::string out;
  char buf[128];
  for (const auto& r : trace) {
    std::snprintf(buf, sizeof(buf), "%.6f\t%" PRIu64 "\t%d\t", r.time.seconds(),
                  r.seq, r.target);
    out += buf;
    out += r.kind;
    out += '\n';
  }
  return out;
}

}  // namespace wsn
