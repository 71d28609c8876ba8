#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pairsum {

/// Union-find over a fixed element range with a parity bit per element and a
/// per-component odd-cycle flag. Unions use rank only (no path compression),
/// so every mutation is reversible: mark() before a batch of unions,
/// rollback() to restore the exact prior state.
class ParityDSU {
 public:
  explicit ParityDSU(int element_count);

  struct Find {
    int root;
    int parity;  ///< parity of the path from the queried element to root
  };
  Find find(int v) const;

  /// Adds the relation parity(u) XOR parity(v) = parity. Joining two
  /// elements already in one component with a conflicting parity marks the
  /// component odd.
  void unite(int u, int v, int parity);

  bool odd(int root) const { return odd_[static_cast<std::size_t>(root)] != 0; }
  int component_size(int root) const { return size_[static_cast<std::size_t>(root)]; }
  int element_count() const { return static_cast<int>(parent_.size()); }

  using Mark = std::size_t;
  Mark mark() const { return undo_.size(); }
  void rollback(Mark m);

  bool operator==(const ParityDSU&) const = default;

 private:
  struct UndoRecord {
    std::int32_t child;
    std::int32_t parent;
    std::uint8_t kind;  // 0 = link, 1 = odd flag set
    std::uint8_t rank_bumped;
    std::uint8_t parent_old_odd;
  };

  std::vector<std::int32_t> parent_;
  std::vector<std::int8_t> parity_;  // relative to parent
  std::vector<std::int32_t> rank_;
  std::vector<std::int32_t> size_;
  std::vector<std::uint8_t> odd_;
  std::vector<UndoRecord> undo_;
};

}  // namespace pairsum
