#include "zdr/families.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace zdr {

  namespace {
    std::string numbered(char prefix, std::size_t i) {
      return std::string(1, prefix) + std::to_string(i);
    }

    std::vector<std::string> numbered_labels(char prefix, std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(numbered(prefix, i));
      }
      return out;
    }

    // Appends the vertices and internal edges of `block` to (labels, edges);
    // returns the index of its first vertex.
    Vertex append_block(std::vector<std::string>& labels,
                        std::vector<Edge>&        edges,
                        Graph const&              block,
                        std::string const&        stem,
                        bool                      suffix) {
      Vertex first = labels.size();
      for (std::size_t i = 0; i < block.size(); ++i) {
        labels.push_back(suffix ? stem + "_" + std::to_string(i + 1) : stem);
      }
      for (auto const& [u, v] : block.edges()) {
        edges.emplace_back(first + u, first + v);
      }
      return first;
    }
  }  // namespace

  Graph complete_graph(std::size_t n) {
    if (n == 0) {
      throw GraphError("complete graph needs at least one vertex");
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        edges.emplace_back(u, v);
      }
    }
    return Graph(numbered_labels('a', n), edges);
  }

  Graph complete_bipartite(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
      throw GraphError("complete bipartite graph needs non-empty parts");
    }
    auto labels = numbered_labels('a', m);
    for (auto& l : numbered_labels('b', n)) {
      labels.push_back(std::move(l));
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < m; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(u, m + v);
      }
    }
    return Graph(std::move(labels), edges);
  }

  Graph attach_end_vertices(Graph const&                    g,
                            std::vector<std::string> const& hosts) {
    std::set<std::string> seen;
    for (auto const& h : hosts) {
      if (!g.find(h)) {
        throw GraphError("unknown host vertex \"" + h + "\"");
      }
      if (!seen.insert(h).second) {
        throw GraphError("repeated host vertex \"" + h + "\"");
      }
    }
    auto              labels = g.labels();
    std::vector<Edge> edges  = g.edges();
    std::size_t       next   = 1;
    for (auto const& h : hosts) {
      std::string l;
      do {
        l = numbered('x', next++);
      } while (std::find(labels.begin(), labels.end(), l) != labels.end());
      labels.push_back(l);
      edges.emplace_back(g.index_of(h), labels.size() - 1);
    }
    return Graph(std::move(labels), edges);
  }

  Graph complete_with_ends(std::size_t n, std::size_t k) {
    if (k > n) {
      throw GraphError("more end vertices than clique vertices");
    }
    auto hosts = numbered_labels('a', k);
    return attach_end_vertices(complete_graph(n), hosts);
  }

  std::string subset_label(std::uint64_t mask, std::size_t n) {
    std::string out = "x";
    bool        first = true;
    for (std::size_t i = 1; i <= n; ++i) {
      if (mask & (std::uint64_t(1) << (i - 1))) {
        if (n > 9 && !first) {
          out += '_';
        }
        out += std::to_string(i);
        first = false;
      }
    }
    return out;
  }

  std::vector<std::uint64_t> proper_subsets_in_order(std::size_t n) {
    if (n >= 63) {
      throw GraphError("subset universe too large");
    }
    std::uint64_t const        full = (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m < full; ++m) {
      out.push_back(m);
    }
    auto elements = [](std::uint64_t m) {
      std::vector<int> e;
      for (int i = 0; m >> i; ++i) {
        if ((m >> i) & 1) {
          e.push_back(i);
        }
      }
      return e;
    };
    std::sort(out.begin(), out.end(), [&](std::uint64_t x, std::uint64_t y) {
      auto px = std::popcount(x), py = std::popcount(y);
      if (px != py) {
        return px < py;
      }
      return elements(x) < elements(y);
    });
    return out;
  }

  Graph gamma_n(std::size_t n) {
    if (n < 2) {
      throw GraphError("gamma_n needs n >= 2");
    }
    auto                     subsets = proper_subsets_in_order(n);
    std::vector<std::string> labels;
    for (auto m : subsets) {
      labels.push_back(subset_label(m, n));
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < subsets.size(); ++u) {
      for (Vertex v = u + 1; v < subsets.size(); ++v) {
        if ((subsets[u] & subsets[v]) == 0) {
          edges.emplace_back(u, v);
        }
      }
    }
    return Graph(std::move(labels), edges);
  }

  Graph l_n_family(std::size_t n, std::vector<Graph> const& x_specs) {
    if (n < 4) {
      throw GraphError("L_n needs n >= 4");
    }
    if (x_specs.size() != n) {
      throw GraphError("L_n needs exactly n block specifications");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      if (x_specs[i].empty()) {
        throw GraphError("block X_" + std::to_string(i + 1)
                         + " must be non-empty");
      }
    }
    auto              labels = numbered_labels('a', n);
    std::vector<Edge> edges  = complete_graph(n).edges();
    for (std::size_t j = 0; j < n; ++j) {
      auto const& block = x_specs[j];
      Vertex      first = append_block(
          labels, edges, block, numbered('x', j + 1), block.size() > 1);
      for (std::size_t i = 0; i < block.size(); ++i) {
        edges.emplace_back(j, first + i);
      }
    }
    return Graph(std::move(labels), edges);
  }

  Graph h_mn_family(std::size_t  m,
                    std::size_t  n,
                    Graph const& x_spec,
                    Graph const& y_spec) {
    if (m < 2 || n < 2) {
      throw GraphError("H_{m,n} needs m, n >= 2");
    }
    if (x_spec.empty() || y_spec.empty()) {
      throw GraphError("H_{m,n} needs non-empty blocks X_1 and Y_1");
    }
    auto              base   = complete_bipartite(m, n);
    auto              labels = base.labels();
    std::vector<Edge> edges  = base.edges();
    Vertex first = labels.size();
    for (std::size_t i = 0; i < x_spec.size(); ++i) {
      labels.push_back(numbered('x', i + 1));
      edges.emplace_back(0, first + i);
    }
    for (auto const& [u, v] : x_spec.edges()) {
      edges.emplace_back(first + u, first + v);
    }
    first = labels.size();
    for (std::size_t i = 0; i < y_spec.size(); ++i) {
      labels.push_back(numbered('y', i + 1));
      edges.emplace_back(m, first + i);
    }
    for (auto const& [u, v] : y_spec.edges()) {
      edges.emplace_back(first + u, first + v);
    }
    return Graph(std::move(labels), edges);
  }

  Graph empty_block(std::size_t n) {
    return Graph(numbered_labels('v', n), std::vector<Edge>{});
  }

  Graph complete_block(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        edges.emplace_back(u, v);
      }
    }
    return Graph(numbered_labels('v', n), edges);
  }

  namespace {
    // K_4 with an end vertex on each clique vertex, plus extra clique-side
    // vertices a5, a6, ... each joined to the given pair of a-vertices.
    Graph m4_with_extras(std::vector<std::pair<Vertex, Vertex>> const& extras) {
      auto              g      = complete_with_ends(4, 4);
      auto              labels = g.labels();
      std::vector<Edge> edges  = g.edges();
      for (std::size_t i = 0; i < extras.size(); ++i) {
        labels.push_back(numbered('a', 5 + i));
        edges.emplace_back(extras[i].first, labels.size() - 1);
        edges.emplace_back(extras[i].second, labels.size() - 1);
      }
      return Graph(std::move(labels), edges);
    }
  }  // namespace

  Graph figure(std::string_view name) {
    if (name == "2.4") {
      // Triangle a1 a2 a3 sharing the edge a1-a2 with the square a1 x1 x2 a2.
      return make_graph({"a1", "a2", "a3", "x1", "x2"},
                        {{"a1", "a2"},
                         {"a1", "a3"},
                         {"a2", "a3"},
                         {"a1", "x1"},
                         {"a2", "x2"},
                         {"x1", "x2"}});
    }
    if (name == "3.1") {
      return complete_with_ends(3, 3);
    }
    if (name == "3.2") {
      return complete_with_ends(4, 4);
    }
    if (name == "3.3") {
      // a1..a4 is the K_4; in the drawing the top extra vertex touches two
      // clique vertices, the bottom one touches the other two.
      return m4_with_extras({{0, 2}, {1, 3}});
    }
    if (name == "3.4") {
      return m4_with_extras({{0, 2}});
    }
    if (name == "3.5") {
      return h_mn_family(2, 2, empty_block(1), empty_block(1));
    }
    throw GraphError("unknown figure \"" + std::string(name) + "\"");
  }

  std::vector<std::string> figure_names() {
    return {"2.4", "3.1", "3.2", "3.3", "3.4", "3.5"};
  }

}  // namespace zdr
