#ifndef ZDR_FAMILIES_HPP_
#define ZDR_FAMILIES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zdr/graph.hpp"

// Generators for the graph families studied here. Vertex order is fixed:
// the a-part first (a1, a2, ...), then the b-part if any, then attached
// blocks in index order. Fixtures and reports depend on this order.

namespace zdr {

  // K_n on a1..an.
  Graph complete_graph(std::size_t n);

  // K_{m,n} with parts a1..am and b1..bn.
  Graph complete_bipartite(std::size_t m, std::size_t n);

  // Adds one end vertex per host, in host order. New vertices are named x1,
  // x2, ... skipping labels already present in g.
  Graph attach_end_vertices(Graph const& g, std::vector<std::string> const& hosts);

  // K_n with end vertices on a1..ak.
  Graph complete_with_ends(std::size_t n, std::size_t k);

  // Label of the subset encoded by `mask` (bit i-1 <=> i in the subset):
  // "x" followed by its elements, e.g. x13; elements are separated by '_'
  // once n exceeds 9.
  std::string subset_label(std::uint64_t mask, std::size_t n);

  // Non-empty proper subsets of {1..n} ordered by size, then
  // lexicographically by element list.
  std::vector<std::uint64_t> proper_subsets_in_order(std::size_t n);

  // The zero-divisor graph of the power-set semigroup: vertices are the
  // non-empty proper subsets of {1..n}, adjacent iff disjoint.
  Graph gamma_n(std::size_t n);

  // K_n on a1..an together with blocks X_1..X_n; a_j is joined to every
  // vertex of X_j and X_j keeps the internal edges of x_specs[j-1]. A
  // singleton block vertex is named x<j>, larger blocks x<j>_<i>. The first
  // four blocks must be non-empty.
  Graph l_n_family(std::size_t n, std::vector<Graph> const& x_specs);

  // K_{m,n} on a1..am, b1..bn with block X (named x1, x2, ...) joined to a1
  // and block Y (y1, y2, ...) joined to b1.
  Graph h_mn_family(std::size_t  m,
                    std::size_t  n,
                    Graph const& x_spec,
                    Graph const& y_spec);

  // Edgeless graph on v1..vn, used as a block specification.
  Graph empty_block(std::size_t n);
  // Complete graph on v1..vn, used as a block specification.
  Graph complete_block(std::size_t n);

  // Named figures: "2.4" (the five-vertex graph with a unique semigroup),
  // "3.1" ... "3.5".
  Graph figure(std::string_view name);
  std::vector<std::string> figure_names();

}  // namespace zdr

#endif  // ZDR_FAMILIES_HPP_
