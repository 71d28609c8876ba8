#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pairsum/arrangement.hpp"

namespace pairsum {

/// Characteristic polynomial as exact integer coefficients c0..cn, ascending:
/// chi(t) = sum over central subarrangements B of (-1)^|B| t^(n - rank B).
struct CharPoly {
  std::vector<long long> coeffs;

  int degree() const;
  long long operator()(long long t) const;
  std::string to_string() const;  // e.g. "t^3 - 9 t^2 + 27 t - 27"

  bool operator==(const CharPoly&) const = default;
};

/// Counts of central subarrangements keyed by (#type I walls, #type II
/// walls, rank). Both published tables project from this one structure.
struct CensusTable {
  std::map<std::tuple<int, int, int>, long long> by_eps_nu_rank;

  std::map<std::pair<int, int>, long long> by_size_rank() const;
  std::map<std::pair<int, int>, long long> by_eps_nu() const;
  long long total() const;
  CharPoly to_char_poly(int n) const;

  bool operator==(const CensusTable&) const = default;
};

/// Exhaustive enumeration is supported through this dimension (27 walls);
/// larger spaces answer single-subarrangement queries only.
inline constexpr int kMaxEnumerationDimension = 6;

class DimensionCapError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Pruned depth-first scan of the subset lattice. The visitor fires exactly
/// once per central subarrangement (the empty one included) with its rank;
/// non-central sets and everything above them are skipped. Sets containing
/// an x_i = 0 / x_i = 1 pair are never even tested.
void enumerate_central(const ArrangementSpace& space,
                       const std::function<void(const Subarrangement&, int)>& visitor);

/// One enumeration pass; `jobs` > 1 shards the scan on the first few
/// in/out decisions and sums the per-worker tallies.
CensusTable census(const ArrangementSpace& space, int jobs = 1);

CharPoly char_poly(const ArrangementSpace& space, int jobs = 1);

struct RegionCounts {
  long long regions = 0;
  long long bounded = 0;

  bool operator==(const RegionCounts&) const = default;
};

/// Zaslavsky evaluations: regions = (-1)^n chi(-1), bounded = (-1)^n chi(1).
/// Valid for essential arrangements, which this family always is.
RegionCounts region_counts(const CharPoly& chi, int n);

/// Integer linear factors (t - r) found by rational-root testing, divided
/// out greedily; `remainder` is what survives (degree 0 iff the polynomial
/// splits into integer linear forms).
struct FactorReport {
  std::vector<std::pair<long long, int>> linear_factors;  ///< (root, multiplicity), roots ascending
  std::vector<long long> remainder;                       ///< ascending coefficients

  bool fully_factored() const { return remainder.size() <= 1; }
};
FactorReport factor_report(const CharPoly& chi);

}  // namespace pairsum
