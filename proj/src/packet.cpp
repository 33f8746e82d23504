#include "wsn/packet.hpp"

namespace wsn {

const char* kind_name(PacketKind k) {
  switch (k) {
    case PacketKind::Interest: return "interest";
    case PacketKind::Exploratory: return "exploratory";
    case PacketKind::Reinforcement: return "reinforcement";
    case PacketKind::Repair: return "repair";
    case PacketKind::Query: return "query";
    case PacketKind::CellConstruction: return "cell-construction";
    case PacketKind::Advertisement: return "advertisement";
    case PacketKind::Data: return "data";
    case PacketKind::CostUpdate: return "cost-update";
  }
  return "?";
}

}  // namespace wsn
