#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pairsum {

/// Kind of a wall: type I is a pair-sum hyperplane x_a + x_b = 1, type II
/// pins a single coordinate to 0 or 1.
enum class WallKind : std::uint8_t { TypeI, TypeII };

/// One hyperplane of the arrangement. Vertex labels are 1-based.
struct Wall {
  WallKind kind = WallKind::TypeII;
  int i = 0;  ///< type I: lower vertex; type II: the vertex
  int j = 0;  ///< type I: upper vertex; type II: the level (0 or 1)

  static Wall type1(int a, int b);        // x_a + x_b = 1, requires a < b
  static Wall type2(int vertex, int level);  // x_vertex = level

  bool operator==(const Wall&) const = default;
};

/// The wall list for dimension n: all C(n,2) pair-sum walls plus the 2n
/// coordinate walls x_i = 0, x_i = 1. The canonical order is a public
/// contract (bitsets and serialized output index into it): type I pairs in
/// lexicographic order, then (1,0), (1,1), ..., (n,0), (n,1).
class ArrangementSpace {
 public:
  /// Throws std::invalid_argument unless n >= 1.
  explicit ArrangementSpace(int n);

  int dimension() const { return n_; }
  int wall_count() const { return static_cast<int>(walls_.size()); }
  int type1_count() const { return n_ * (n_ - 1) / 2; }
  const std::vector<Wall>& walls() const { return walls_; }
  const Wall& wall(int index) const { return walls_.at(static_cast<std::size_t>(index)); }

  /// Canonical index of a wall. Throws std::out_of_range if the wall does
  /// not belong to this space.
  int index_of(const Wall& w) const;

 private:
  int n_;
  std::vector<Wall> walls_;
};

/// A subset of the walls, stored as a bitset over the canonical index.
/// Cheap value type; the referenced space must outlive it.
class Subarrangement {
 public:
  /// Throws std::invalid_argument if the space has more than 64 walls
  /// (dimension 10 and up) or if `bits` addresses a nonexistent wall.
  explicit Subarrangement(const ArrangementSpace& space, std::uint64_t bits = 0);

  const ArrangementSpace& space() const { return *space_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int wall_index) const;
  void insert(int wall_index);
  void erase(int wall_index);
  std::vector<int> wall_indices() const;

  /// True iff both x_i = 0 and x_i = 1 are present for some i. Such a set
  /// has no associated graph and is never central.
  bool has_opposite_levels() const;

  /// Lowercase hex of the bitset, most-significant digits first.
  std::string to_hex() const;
  static Subarrangement from_hex(const ArrangementSpace& space, std::string_view hex);

  bool operator==(const Subarrangement& other) const { return bits_ == other.bits_; }

 private:
  const ArrangementSpace* space_;
  std::uint64_t bits_;
};

/// Augmented integer system [A | b], one row per wall in canonical order.
/// A type I wall (a, b) contributes the row x_a + x_b = 1; a type II wall
/// (i, level) contributes x_i = level.
struct AssociatedMatrix {
  int vars = 0;
  std::vector<std::vector<long long>> rows;  ///< each row holds vars coefficients, then b
};

/// Set of coordinate indices appearing in any wall of the subarrangement,
/// sorted ascending.
std::vector<int> index_set(const Subarrangement& sub);

AssociatedMatrix associated_matrix(const Subarrangement& sub);

}  // namespace pairsum
