#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "wsn/geometry.hpp"
#include "wsn/topology.hpp"

namespace wsn {

enum class PacketKind {
  Interest,
  Exploratory,
  Reinforcement,
  Repair,
  Query,
  CellConstruction,
  Advertisement,
  Data,
  CostUpdate,
};

const char* kind_name(PacketKind k);

// Data packets are the payload traffic; everything else is routing overhead.
inline bool is_routing_kind(PacketKind k) { return k != PacketKind::Data; }

// FDDDP reinforcement: which probe flood it answers.
struct ReinforceHeader {
  PacketKind ref_kind = PacketKind::Exploratory;
  NodeId ref_origin = kNoNode;
  std::uint32_t ref_seq = 0;
};

// DDDP query: how far beyond the consumer's cell the in-cell flood may
// spread (escalation ring, normally 0).
struct QueryHeader {
  int ring = 0;
};

// DDDP data rides the reverse path of one query epoch.
struct ReversePathHeader {
  std::uint32_t query_seq = 0;
};

// CBDDP cost-field advertisement.
struct AdvertHeader {
  std::uint32_t epoch = 0;
  double cost = 0;
};

// CBDDP data credit header.
struct CreditHeader {
  double cost_source = 0;
  double beta = 0;
  double e_current = 0;
  double e_min = 0;
  std::uint32_t epoch = 0;
};

// EAGDDP neighbor advertisement: position, consumed energy and learned cost.
struct CostUpdateHeader {
  Point pos;
  double consumed_mj = 0;
  bool has_learned = false;
  double learned = 0;
};

// EAGDDP data: greedy leg toward the region, then recursive dissemination.
struct GeoHeader {
  enum class Stage { ToRegion, Dissem };
  Stage stage = Stage::ToRegion;
  Rect region;          // subregion being disseminated (Dissem stage)
  NodeId leg_target = kNoNode;  // final addressee of the current greedy leg
};

using Header =
    std::variant<std::monostate, ReinforceHeader, QueryHeader,
                 ReversePathHeader, AdvertHeader, CreditHeader,
                 CostUpdateHeader, GeoHeader>;

struct Packet {
  PacketKind kind = PacketKind::Data;
  NodeId origin = kNoNode;
  std::uint32_t seq = 0;
  std::uint32_t hops = 0;
  std::uint32_t size_bytes = 0;
  // Unicast addressee; empty for broadcast. All in-range nodes receive the
  // frame either way (overhearing), the addressee is link-layer intent.
  std::optional<NodeId> addressed;
  Header header;
};

// (kind, origin, seq) key for duplicate suppression.
inline std::uint64_t packet_key(PacketKind kind, NodeId origin,
                                std::uint32_t seq) {
  return (static_cast<std::uint64_t>(kind) << 56) ^
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(origin))
          << 32) ^
         seq;
}
inline std::uint64_t packet_key(const Packet& p) {
  return packet_key(p.kind, p.origin, p.seq);
}

}  // namespace wsn
