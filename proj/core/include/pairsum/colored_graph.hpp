#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pairsum/arrangement.hpp"

namespace pairsum {

/// Graph on a subset of [n] whose vertices may carry color 0 or 1.
/// Uncolored vertices appear in `vertices` but have no entry in `colors`.
struct ColoredGraph {
  std::vector<int> vertices;               ///< sorted, distinct
  std::vector<std::pair<int, int>> edges;  ///< (u, v), u < v, sorted
  std::map<int, int> colors;               ///< vertex -> 0 or 1

  std::optional<int> color_of(int v) const;
  bool operator==(const ColoredGraph&) const = default;
};

/// A subarrangement containing both x_i = 0 and x_i = 1 has no associated
/// graph (and is never central); `vertex()` names the offending i.
class DoubleColorError : public std::domain_error {
 public:
  explicit DoubleColorError(int vertex);
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

/// Associated graph: vertices are the indices appearing in the set, edges
/// come from type I walls, colors from type II walls.
/// Throws DoubleColorError if some i carries both levels.
ColoredGraph graph_of(const Subarrangement& sub);

/// Inverse of graph_of: edges become pair-sum walls, colored vertices become
/// coordinate walls. Isolated uncolored vertices contribute nothing.
Subarrangement arrangement_of(const ColoredGraph& graph, const ArrangementSpace& space);

/// Centrality test. A graph is central iff every component containing a
/// colored vertex is bipartite and the colors respect path parity: an edge
/// forces opposite values on its endpoints, so colored vertices joined by an
/// even path must agree and by an odd path must differ. Odd cycles in fully
/// uncolored components are allowed.
bool is_central(const ColoredGraph& graph);

/// Partition of the components into colorless components, isolated colored
/// vertices, and components carrying both a colored vertex and an edge.
struct Decomposition {
  std::vector<ColoredGraph> first_kind;
  std::vector<std::pair<int, int>> second_kind;  ///< (vertex, color)
  std::vector<ColoredGraph> third_kind;

  bool operator==(const Decomposition&) const = default;
};
Decomposition decompose(const ColoredGraph& graph);

/// Rank of the associated linear system, read off the component structure:
/// each component counts all of its vertices, minus one if it is colorless
/// and bipartite. Meaningful for central graphs only; agreement with exact
/// elimination is an enforced test, not an assumption.
int graph_rank(const ColoredGraph& graph);

}  // namespace pairsum
