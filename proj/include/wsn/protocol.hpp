#pragma once

#include <functional>
#include <string>

#include "wsn/network.hpp"

namespace wsn {

enum class Role { Source, Consumer, Relay };

// Per-node protocol endpoint. State lives in the subclass and is mutated
// only from event-loop callbacks; the only way out is Network::transmit and
// timers.
class ProtocolNode {
 public:
  ProtocolNode(Network& net, NodeId self)
      : net_(net),
        self_(self),
        role_(self == net.topology().source()     ? Role::Source
              : self == net.topology().consumer() ? Role::Consumer
                                                  : Role::Relay) {}
  virtual ~ProtocolNode() = default;

  virtual void on_start() {}
  // Source only: a fresh data packet (origin = source, seq) enters the
  // protocol's send path.
  virtual void on_data_tick(std::uint32_t seq) { (void)seq; }
  virtual void on_packet(NodeId from, const Packet& packet) = 0;

  Role role() const { return role_; }

 protected:
  bool is_source() const { return role_ == Role::Source; }
  bool is_consumer() const { return role_ == Role::Consumer; }

  void schedule_timer(double delay_s, const std::string& tag,
                      std::function<void()> fn) {
    net_.engine().schedule(net_.engine().now() + SimTime::from_seconds(delay_s),
                           self_, "timer:" + tag, std::move(fn));
  }

  const Point& own_position() const { return net_.topology().position(self_); }

  Network& net_;
  NodeId self_;
  Role role_;
};

}  // namespace wsn
