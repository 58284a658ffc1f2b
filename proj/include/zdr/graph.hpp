#ifndef ZDR_GRAPH_HPP_
#define ZDR_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zdr {

  using Vertex = std::size_t;
  using Edge   = std::pair<Vertex, Vertex>;

  class GraphError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Finite simple undirected graph with labelled vertices. Vertex i is the
  // i-th label; neighbour lists are kept sorted. Connectivity is not part of
  // the type and is checked by the operations that need it.
  class Graph {
   public:
    Graph() = default;

    // Throws GraphError on a duplicate label, an unknown endpoint, a
    // self-loop, or a repeated edge.
    Graph(std::vector<std::string>                               labels,
          std::vector<std::pair<std::string, std::string>> const& edges);

    // Same as above with index-based edges.
    Graph(std::vector<std::string> labels, std::vector<Edge> const& edges);

    [[nodiscard]] std::size_t size() const noexcept {
      return _labels.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _labels.empty();
    }
    [[nodiscard]] std::size_t edge_count() const noexcept {
      return _edge_count;
    }

    [[nodiscard]] std::string const& label(Vertex v) const {
      return _labels.at(v);
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::optional<Vertex> find(std::string_view label) const;
    // Like find, throws GraphError for an unknown label.
    [[nodiscard]] Vertex index_of(std::string_view label) const;

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
      return _matrix[u * size() + v] != 0;
    }
    [[nodiscard]] std::vector<Vertex> const& neighbours(Vertex v) const {
      return _adjacency.at(v);
    }
    [[nodiscard]] std::size_t degree(Vertex v) const {
      return _adjacency.at(v).size();
    }

    // All edges (u, v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] bool connected() const;

    // Same labels in the same order and the same edges.
    friend bool operator==(Graph const&, Graph const&) = default;

   private:
    void add_edge(Vertex u, Vertex v);

    std::vector<std::string>         _labels;
    std::vector<std::vector<Vertex>> _adjacency;
    std::vector<char>                _matrix;
    std::size_t                      _edge_count = 0;
  };

  Graph make_graph(std::vector<std::string>                         labels,
                   std::vector<std::pair<std::string, std::string>> const& edges);

  // A bijection on 0..n-1; entry i is the image of i.
  class Permutation {
   public:
    Permutation() = default;
    // Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _images.size();
    }
    [[nodiscard]] std::size_t operator[](std::size_t i) const {
      return _images[i];
    }
    [[nodiscard]] std::vector<std::size_t> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] bool is_identity() const noexcept;

    // (p * q)[i] == p[q[i]], i.e. apply q first.
    friend Permutation operator*(Permutation const& p, Permutation const& q);
    [[nodiscard]] Permutation inverse() const;

    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<std::size_t> _images;
  };

  // True if p maps edges of g onto edges of h and non-edges onto non-edges.
  [[nodiscard]] bool is_isomorphism(Graph const&       g,
                                    Graph const&       h,
                                    Permutation const& p);

}  // namespace zdr

#endif  // ZDR_GRAPH_HPP_
