#ifndef ZDR_SCREEN_HPP_
#define ZDR_SCREEN_HPP_

#include <string>
#include <vector>

#include "zdr/graph.hpp"

namespace zdr {

  // Outcome of one necessary condition. A failure carries the offending
  // vertices (a pair, a cycle, or a single vertex) and a readable reason.
  struct ConditionVerdict {
    bool                pass = true;
    std::vector<Vertex> witness;
    std::string         reason;
  };

  // Necessary conditions for g to be the zero-divisor graph of a
  // commutative semigroup. Any failure proves g unrealizable; passing all
  // four proves nothing.
  struct ScreenReport {
    ConditionVerdict diameter_le_3;
    // Every edge on a cycle lies on a triangle or a square.
    ConditionVerdict core_triangles_squares;
    // When g has a cycle, every vertex is an end vertex or on a cycle.
    ConditionVerdict end_or_core_dichotomy;
    // Non-adjacent x, y have some z with N(x) u N(y) inside N(z) u {z}.
    ConditionVerdict neighborhood_domination;

    [[nodiscard]] bool all_pass() const noexcept {
      return diameter_le_3.pass && core_triangles_squares.pass
             && end_or_core_dichotomy.pass && neighborhood_domination.pass;
    }
  };

  // Throws GraphError on a disconnected graph.
  ScreenReport screen(Graph const& g);

}  // namespace zdr

#endif  // ZDR_SCREEN_HPP_
