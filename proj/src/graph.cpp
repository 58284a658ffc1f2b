#include "zdr/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace zdr {

  namespace {
    void check_labels(std::vector<std::string> const& labels) {
      std::unordered_map<std::string_view, std::size_t> seen;
      for (auto const& l : labels) {
        if (!seen.emplace(l, 0).second) {
          throw GraphError("duplicate vertex label \"" + l + "\"");
        }
      }
    }
  }  // namespace

  Graph::Graph(std::vector<std::string>                               labels,
               std::vector<std::pair<std::string, std::string>> const& edges)
      : _labels(std::move(labels)),
        _adjacency(_labels.size()),
        _matrix(_labels.size() * _labels.size(), 0) {
    check_labels(_labels);
    for (auto const& [a, b] : edges) {
      auto u = find(a);
      auto v = find(b);
      if (!u) {
        throw GraphError("edge endpoint \"" + a + "\" is not a vertex");
      }
      if (!v) {
        throw GraphError("edge endpoint \"" + b + "\" is not a vertex");
      }
      add_edge(*u, *v);
    }
    for (auto& nbrs : _adjacency) {
      std::sort(nbrs.begin(), nbrs.end());
    }
  }

  Graph::Graph(std::vector<std::string> labels, std::vector<Edge> const& edges)
      : _labels(std::move(labels)),
        _adjacency(_labels.size()),
        _matrix(_labels.size() * _labels.size(), 0) {
    check_labels(_labels);
    for (auto const& [u, v] : edges) {
      if (u >= size() || v >= size()) {
        throw GraphError("edge endpoint index out of range");
      }
      add_edge(u, v);
    }
    for (auto& nbrs : _adjacency) {
      std::sort(nbrs.begin(), nbrs.end());
    }
  }

  void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) {
      throw GraphError("self-loop at \"" + _labels[u] + "\"");
    }
    if (adjacent(u, v)) {
      throw GraphError("repeated edge \"" + _labels[u] + "\"-\"" + _labels[v]
                       + "\"");
    }
    _matrix[u * size() + v] = 1;
    _matrix[v * size() + u] = 1;
    _adjacency[u].push_back(v);
    _adjacency[v].push_back(u);
    ++_edge_count;
  }

  std::optional<Vertex> Graph::find(std::string_view label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Vertex>(it - _labels.begin());
  }

  Vertex Graph::index_of(std::string_view label) const {
    auto v = find(label);
    if (!v) {
      throw GraphError("unknown vertex \"" + std::string(label) + "\"");
    }
    return *v;
  }

  std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(_edge_count);
    for (Vertex u = 0; u < size(); ++u) {
      for (Vertex v : _adjacency[u]) {
        if (u < v) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  bool Graph::connected() const {
    if (empty()) {
      return true;
    }
    std::vector<char>  seen(size(), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0]            = 1;
    std::size_t nr_seen = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : _adjacency[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++nr_seen;
          q.push(v);
        }
      }
    }
    return nr_seen == size();
  }

  Graph make_graph(std::vector<std::string>                         labels,
                   std::vector<std::pair<std::string, std::string>> const& edges) {
    return Graph(std::move(labels), edges);
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<std::size_t> images)
      : _images(std::move(images)) {
    std::vector<char> hit(_images.size(), 0);
    for (auto i : _images) {
      if (i >= _images.size() || hit[i]) {
        throw std::invalid_argument("not a permutation");
      }
      hit[i] = 1;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> im(n);
    for (std::size_t i = 0; i < n; ++i) {
      im[i] = i;
    }
    return Permutation(std::move(im));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  Permutation operator*(Permutation const& p, Permutation const& q) {
    if (p.size() != q.size()) {
      throw std::invalid_argument("permutation degrees differ");
    }
    std::vector<std::size_t> im(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      im[i] = p[q[i]];
    }
    return Permutation(std::move(im));
  }

  Permutation Permutation::inverse() const {
    std::vector<std::size_t> im(size());
    for (std::size_t i = 0; i < size(); ++i) {
      im[_images[i]] = i;
    }
    return Permutation(std::move(im));
  }

  bool is_isomorphism(Graph const& g, Graph const& h, Permutation const& p) {
    if (g.size() != h.size() || p.size() != g.size()
        || g.edge_count() != h.edge_count()) {
      return false;
    }
    for (auto const& [u, v] : g.edges()) {
      if (!h.adjacent(p[u], p[v])) {
        return false;
      }
    }
    // Equal edge counts plus edges-to-edges under a bijection suffices.
    return true;
  }

}  // namespace zdr
