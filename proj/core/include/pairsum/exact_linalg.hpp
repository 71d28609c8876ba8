#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "pairsum/arrangement.hpp"

namespace pairsum {

using Rational = boost::rational<long long>;

struct EliminationResult {
  int rank_A = 0;
  int rank_Ab = 0;
  bool consistent = true;
  /// A rational point satisfying every row exactly; present iff consistent.
  std::optional<std::vector<Rational>> witness;
};

/// Exact rank and consistency of [A | b] by fraction-free (Bareiss-style)
/// integer elimination. Pivots are the first nonzero entry in column order;
/// no floating point anywhere. An empty matrix is consistent with rank 0 and
/// witness at the origin.
EliminationResult eliminate(const AssociatedMatrix& m);

bool matrix_consistent(const AssociatedMatrix& m);

std::string to_string(const Rational& r);

}  // namespace pairsum
