#include "pairsum/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace pairsum {

Wall Wall::type1(int a, int b) {
  if (a < 1 || b <= a) {
    throw std::invalid_argument("type I wall requires 1 <= a < b");
  }
  return Wall{WallKind::TypeI, a, b};
}

Wall Wall::type2(int vertex, int level) {
  if (vertex < 1) {
    throw std::invalid_argument("type II wall requires vertex >= 1");
  }
  if (level != 0 && level != 1) {
    throw std::invalid_argument("type II wall level must be 0 or 1");
  }
  return Wall{WallKind::TypeII, vertex, level};
}

ArrangementSpace::ArrangementSpace(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("dimension must be at least 1");
  }
  walls_.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 + 2 * static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      walls_.push_back(Wall::type1(a, b));
    }
  }
  for (int i = 1; i <= n; ++i) {
    walls_.push_back(Wall::type2(i, 0));
    walls_.push_back(Wall::type2(i, 1));
  }
}

int ArrangementSpace::index_of(const Wall& w) const {
  if (w.kind == WallKind::TypeI) {
    if (w.i < 1 || w.j <= w.i || w.j > n_) {
      throw std::out_of_range("type I wall outside this space");
    }
    // pairs (a, *) occupy a block of n - a entries starting after all
    // blocks for smaller a
    const int a = w.i;
    const int offset = (a - 1) * n_ - a * (a - 1) / 2;
    return offset + (w.j - w.i - 1);
  }
  if (w.i < 1 || w.i > n_ || (w.j != 0 && w.j != 1)) {
    throw std::out_of_range("type II wall outside this space");
  }
  return type1_count() + 2 * (w.i - 1) + w.j;
}

Subarrangement::Subarrangement(const ArrangementSpace& space, std::uint64_t bits)
    : space_(&space), bits_(bits) {
  const int count = space.wall_count();
  if (count > 64) {
    throw std::invalid_argument("bitset subarrangements support at most 64 walls");
  }
  if (count < 64 && (bits >> count) != 0) {
    throw std::invalid_argument("bitset addresses a wall outside the space");
  }
}

int Subarrangement::size() const { return std::popcount(bits_); }

bool Subarrangement::contains(int wall_index) const {
  return (bits_ >> wall_index) & 1U;
}

void Subarrangement::insert(int wall_index) {
  if (wall_index < 0 || wall_index >= space_->wall_count()) {
    throw std::out_of_range("wall index outside the space");
  }
  bits_ |= std::uint64_t{1} << wall_index;
}

void Subarrangement::erase(int wall_index) {
  if (wall_index < 0 || wall_index >= space_->wall_count()) {
    throw std::out_of_range("wall index outside the space");
  }
  bits_ &= ~(std::uint64_t{1} << wall_index);
}

std::vector<int> Subarrangement::wall_indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

bool Subarrangement::has_opposite_levels() const {
  const std::uint64_t levels = bits_ >> space_->type1_count();
  return (levels & (levels >> 1) & 0x5555555555555555ULL) != 0;
}

std::string Subarrangement::to_hex() const {
  char buf[16];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), bits_, 16);
  return std::string(buf, ptr);
}

Subarrangement Subarrangement::from_hex(const ArrangementSpace& space, std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  std::string lowered(hex);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::uint64_t bits = 0;
  const char* first = lowered.data();
  const char* last = first + lowered.size();
  auto [ptr, ec] = std::from_chars(first, last, bits, 16);
  if (ec != std::errc{} || ptr != last || lowered.empty()) {
    throw std::invalid_argument("invalid hex bitset: \"" + std::string(hex) + "\"");
  }
  return Subarrangement(space, bits);
}

std::vector<int> index_set(const Subarrangement& sub) {
  const ArrangementSpace& space = sub.space();
  std::vector<char> seen(static_cast<std::size_t>(space.dimension()) + 1, 0);
  for (int idx : sub.wall_indices()) {
    const Wall& w = space.wall(idx);
    seen[static_cast<std::size_t>(w.i)] = 1;
    if (w.kind == WallKind::TypeI) {
      seen[static_cast<std::size_t>(w.j)] = 1;
    }
  }
  std::vector<int> out;
  for (int v = 1; v <= space.dimension(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) {
      out.push_back(v);
    }
  }
  return out;
}

AssociatedMatrix associated_matrix(const Subarrangement& sub) {
  const ArrangementSpace& space = sub.space();
  const int n = space.dimension();
  AssociatedMatrix m;
  m.vars = n;
  m.rows.reserve(static_cast<std::size_t>(sub.size()));
  for (int idx : sub.wall_indices()) {
    const Wall& w = space.wall(idx);
    std::vector<long long> row(static_cast<std::size_t>(n) + 1, 0);
    if (w.kind == WallKind::TypeI) {
      row[static_cast<std::size_t>(w.i - 1)] = 1;
      row[static_cast<std::size_t>(w.j - 1)] = 1;
      row[static_cast<std::size_t>(n)] = 1;
    } else {
      row[static_cast<std::size_t>(w.i - 1)] = 1;
      row[static_cast<std::size_t>(n)] = w.j;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace pairsum
