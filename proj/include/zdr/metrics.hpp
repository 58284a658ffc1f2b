#ifndef ZDR_METRICS_HPP_
#define ZDR_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "zdr/graph.hpp"

namespace zdr {

  struct GraphMetrics {
    // nullopt means infinite; never the case for metrics() output.
    std::optional<std::size_t> diameter;
    std::vector<Vertex>        end_vertices;
    // Vertices lying on at least one cycle.
    std::vector<Vertex> core;
    std::size_t         clique_number = 0;
  };

  // All-pairs BFS distances; unreachable pairs hold nullopt.
  std::vector<std::vector<std::optional<std::size_t>>>
  distance_matrix(Graph const& g);

  // Throws GraphError naming two mutually unreachable vertices.
  void require_connected(Graph const& g);

  // Edges not lying on any cycle.
  std::vector<Edge> bridges(Graph const& g);

  std::vector<Vertex> core_vertices(Graph const& g);

  std::size_t clique_number(Graph const& g);

  // Throws GraphError on a disconnected graph.
  GraphMetrics metrics(Graph const& g);

}  // namespace zdr

#endif  // ZDR_METRICS_HPP_
