#ifndef ZDR_AUTOMORPHISM_HPP_
#define ZDR_AUTOMORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "zdr/graph.hpp"

namespace zdr {

  // Upper bound on the vertex count accepted by automorphisms().
  inline constexpr std::size_t max_automorphism_vertices = 32;

  // Stable colouring of the disjoint union of two graphs by iterated degree
  // refinement. Colours are comparable across the two graphs.
  struct JointColouring {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
  };
  JointColouring refine_colours(Graph const& g, Graph const& h);

  // The full automorphism group of g, sorted, identity first. Throws
  // GraphError above max_automorphism_vertices.
  std::vector<Permutation> automorphisms(Graph const& g);

  // A vertex bijection p with is_isomorphism(g, h, p), or nullopt. For fixed
  // inputs the returned bijection is always the same.
  std::optional<Permutation> are_isomorphic(Graph const& g, Graph const& h);

}  // namespace zdr

#endif  // ZDR_AUTOMORPHISM_HPP_
