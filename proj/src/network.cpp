#include "wsn/network.hpp"

#include <algorithm>
#include <string>

namespace wsn {

double tx_cost_j(const EnergyParams& ep, std::uint32_t bytes, double dist_m) {
  double bits = bytes * 8.0;
  return ep.e_elec_j_per_bit * bits +
         ep.eps_amp_j_per_bit_m2 * bits * dist_m * dist_m;
}

double rx_cost_j(const EnergyParams& ep, std::uint32_t bytes) {
  return ep.e_elec_j_per_bit * bytes * 8.0;
}

Network::Network(Engine& engine, const Topology& topo,
                 const RadioParams& radio, const EnergyParams& energy,
                 const PacketSizes& sizes, std::uint64_t seed)
    : engine_(engine),
      topo_(topo),
      radio_(radio),
      energy_params_(energy),
      sizes_(sizes),
      killed_(topo.size(), false),
      mac_rng_(seed, "mac-jitter"),
      loss_rng_(seed, "loss") {
  accounts_.resize(topo.size());
  for (auto& a : accounts_) {
    a.initial_j = energy.initial_j;
    a.remaining_j = energy.initial_j;
  }
  ledger_.resize(topo.size());
}

double Network::debit(NodeId id, double cost) {
  auto& acct = accounts_[id];
  double charged = std::min(cost, acct.remaining_j);
  acct.remaining_j -= charged;
  acct.consumed += charged;
  return charged;
}

void Network::transmit(NodeId sender, const Packet& packet) {
  if (!alive(sender)) return;

  if (packet.addressed && !topo_.are_neighbors(sender, *packet.addressed)) {
    note_routing_failure();
    log_.add({PacketEvent::Op::Drop, engine_.now(), sender, *packet.addressed,
              packet.kind, packet.origin, packet.seq, packet.size_bytes, 0});
    return;
  }

  // Amplifier distance: actual link span for unicast, full disc for broadcast.
  double dist = packet.addressed ? topo_.node_distance(sender, *packet.addressed)
                                 : topo_.range();
  double charged =
      debit(sender, tx_cost_j(energy_params_, packet.size_bytes, dist));
  ++accounts_[sender].tx_count;
  ledger_.record_tx(sender, packet.kind);
  bytes_.add_out(engine_.now(), packet.size_bytes);
  log_.add({PacketEvent::Op::Tx, engine_.now(), sender,
            packet.addressed.value_or(kNoNode), packet.kind, packet.origin,
            packet.seq, packet.size_bytes, charged});

  for (NodeId nb : topo_.neighbors_of(sender)) {
    if (radio_.mac.loss > 0 && loss_rng_.uniform() < radio_.mac.loss) continue;
    double latency =
        radio_.mac.base_latency_s + mac_rng_.uniform(0, radio_.mac.jitter_s);
    SimTime at = engine_.now() + SimTime::from_seconds(latency);
    Packet copy = packet;
    engine_.schedule(
        at, nb, std::string("rx:") + kind_name(packet.kind),
        [this, nb, sender, copy]() {
          if (!alive(nb)) return;
          double rx_charged =
              debit(nb, rx_cost_j(energy_params_, copy.size_bytes));
          ++accounts_[nb].rx_count;
          bytes_.add_in(engine_.now(), copy.size_bytes);
          log_.add({PacketEvent::Op::Rx, engine_.now(), nb, sender, copy.kind,
                    copy.origin, copy.seq, copy.size_bytes, rx_charged});
          if (on_deliver_) on_deliver_(nb, sender, copy);
        });
  }
}

void Network::note_generated(NodeId source, std::uint32_t seq) {
  ++ledger_.p_sent;
  log_.add({PacketEvent::Op::Generate, engine_.now(), source, kNoNode,
            PacketKind::Data, source, seq, sizes_.data_bytes, 0});
}

void Network::consume(NodeId consumer, const Packet& packet) {
  ledger_.record_consume(packet.origin, packet.seq);
  log_.add({PacketEvent::Op::Consume, engine_.now(), consumer, kNoNode,
            packet.kind, packet.origin, packet.seq, packet.size_bytes, 0});
}

}  // namespace wsn
