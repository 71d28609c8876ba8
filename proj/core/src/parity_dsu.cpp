#include "pairsum/parity_dsu.hpp"

#include <numeric>
#include <utility>

namespace pairsum {

namespace {
constexpr std::uint8_t kLink = 0;
constexpr std::uint8_t kOddFlag = 1;
}  // namespace

ParityDSU::ParityDSU(int element_count)
    : parent_(static_cast<std::size_t>(element_count)),
      parity_(static_cast<std::size_t>(element_count), 0),
      rank_(static_cast<std::size_t>(element_count), 0),
      size_(static_cast<std::size_t>(element_count), 1),
      odd_(static_cast<std::size_t>(element_count), 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

ParityDSU::Find ParityDSU::find(int v) const {
  int parity = 0;
  while (parent_[static_cast<std::size_t>(v)] != v) {
    parity ^= parity_[static_cast<std::size_t>(v)];
    v = parent_[static_cast<std::size_t>(v)];
  }
  return {v, parity};
}

void ParityDSU::unite(int u, int v, int parity) {
  const Find fu = find(u);
  const Find fv = find(v);
  if (fu.root == fv.root) {
    if (((fu.parity ^ fv.parity ^ parity) & 1) != 0 &&
        odd_[static_cast<std::size_t>(fu.root)] == 0) {
      odd_[static_cast<std::size_t>(fu.root)] = 1;
      undo_.push_back({fu.root, -1, kOddFlag, 0, 0});
    }
    return;
  }
  int child = fu.root;
  int child_parity = fu.parity;
  int parent = fv.root;
  int parent_parity = fv.parity;
  if (rank_[static_cast<std::size_t>(child)] > rank_[static_cast<std::size_t>(parent)]) {
    std::swap(child, parent);
    std::swap(child_parity, parent_parity);
  }
  const bool bump = rank_[static_cast<std::size_t>(child)] == rank_[static_cast<std::size_t>(parent)];
  undo_.push_back({child, parent, kLink, bump ? std::uint8_t{1} : std::uint8_t{0},
                   odd_[static_cast<std::size_t>(parent)]});
  parent_[static_cast<std::size_t>(child)] = parent;
  parity_[static_cast<std::size_t>(child)] =
      static_cast<std::int8_t>((child_parity ^ parent_parity ^ parity) & 1);
  if (bump) {
    ++rank_[static_cast<std::size_t>(parent)];
  }
  size_[static_cast<std::size_t>(parent)] += size_[static_cast<std::size_t>(child)];
  odd_[static_cast<std::size_t>(parent)] |= odd_[static_cast<std::size_t>(child)];
}

void ParityDSU::rollback(Mark m) {
  while (undo_.size() > m) {
    const UndoRecord rec = undo_.back();
    undo_.pop_back();
    if (rec.kind == kOddFlag) {
      odd_[static_cast<std::size_t>(rec.child)] = 0;
      continue;
    }
    if (rec.rank_bumped) {
      --rank_[static_cast<std::size_t>(rec.parent)];
    }
    size_[static_cast<std::size_t>(rec.parent)] -= size_[static_cast<std::size_t>(rec.child)];
    odd_[static_cast<std::size_t>(rec.parent)] = rec.parent_old_odd;
    parent_[static_cast<std::size_t>(rec.child)] = rec.child;
    parity_[static_cast<std::size_t>(rec.child)] = 0;
  }
}

}  // namespace pairsum
