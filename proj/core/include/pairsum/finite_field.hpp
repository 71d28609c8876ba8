#pragma once

#include <stdexcept>
#include <vector>

#include "pairsum/charpoly.hpp"

namespace pairsum {

/// Number of points of F_q^n avoiding every wall: all coordinates outside
/// {0, 1} and no pair summing to 1 mod q.
struct PointCount {
  int n = 0;
  long long q = 0;
  long long count = 0;
};

/// Brute-force cap on q^n.
inline constexpr long long kPointCountBudget = 100'000'000;

class BudgetExceededError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class InsufficientPointsError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
class NonIntegerCoefficientsError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime(long long q);

/// Exhaustive count over the box {2..q-1}^n (the coordinate walls are
/// pre-excluded), testing every pair sum mod q. Requires q prime, q >= 3,
/// and q^n within the budget. `jobs` splits the first coordinate.
PointCount count_points(int n, long long q, int jobs = 1);

/// Exact Lagrange interpolation through the (q, count) pairs. Requires at
/// least n+1 counts at distinct primes, all for the same n. Throws
/// NonIntegerCoefficientsError when the interpolant is not an integer
/// polynomial and std::domain_error when its degree exceeds n; both signal
/// that some prime was too small.
CharPoly interpolate_chi(const std::vector<PointCount>& counts);

/// {5, 7, 11, 13, 17, 19}
std::vector<long long> default_primes();

}  // namespace pairsum
