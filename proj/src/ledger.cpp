#include "wsn/ledger.hpp"

#include <numeric>

namespace wsn {

std::uint64_t& ByteLedger::bucket(std::vector<std::uint64_t>& v, SimTime t) {
  auto idx = static_cast<std::size_t>(t.seconds() / interval_s_);
  if (idx >= v.size()) v.resize(idx + 1, 0);
  return v[idx];
}

std::uint64_t ByteLedger::total_in() const {
  return std::accumulate(in_.begin(), in_.end(), std::uint64_t{0});
}

std::uint64_t ByteLedger::total_out() const {
  return std::accumulate(out_.begin(), out_.end(), std::uint64_t{0});
}

}  // namespace wsn
