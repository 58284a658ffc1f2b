#include "zdr/metrics.hpp"

#include <algorithm>
#include <queue>

namespace zdr {

  namespace {
    std::vector<std::optional<std::size_t>> bfs(Graph const& g, Vertex s) {
      std::vector<std::optional<std::size_t>> dist(g.size());
      std::queue<Vertex>                      q;
      dist[s] = 0;
      q.push(s);
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : g.neighbours(u)) {
          if (!dist[v]) {
            dist[v] = *dist[u] + 1;
            q.push(v);
          }
        }
      }
      return dist;
    }

    // True if u and v are connected in g minus the edge u-v.
    bool connected_without(Graph const& g, Vertex u, Vertex v) {
      std::vector<char>  seen(g.size(), 0);
      std::queue<Vertex> q;
      seen[u] = 1;
      q.push(u);
      while (!q.empty()) {
        Vertex w = q.front();
        q.pop();
        for (Vertex t : g.neighbours(w)) {
          if ((w == u && t == v) || (w == v && t == u) || seen[t]) {
            continue;
          }
          if (t == v) {
            return true;
          }
          seen[t] = 1;
          q.push(t);
        }
      }
      return false;
    }

    // Tomita-style maximum clique with greedy colouring bound.
    struct CliqueSearch {
      Graph const& g;
      std::size_t  best = 0;

      void expand(std::vector<Vertex> const& cand, std::size_t depth) {
        if (cand.empty()) {
          best = std::max(best, depth);
          return;
        }
        // Greedy colouring gives an upper bound per candidate.
        std::vector<Vertex>      order;
        std::vector<std::size_t> bound;
        std::vector<std::vector<Vertex>> classes;
        for (Vertex v : cand) {
          std::size_t k = 0;
          for (; k < classes.size(); ++k) {
            bool clash = std::any_of(classes[k].begin(),
                                     classes[k].end(),
                                     [&](Vertex w) { return g.adjacent(v, w); });
            if (!clash) {
              break;
            }
          }
          if (k == classes.size()) {
            classes.emplace_back();
          }
          classes[k].push_back(v);
        }
        for (std::size_t k = 0; k < classes.size(); ++k) {
          for (Vertex v : classes[k]) {
            order.push_back(v);
            bound.push_back(k + 1);
          }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
          if (depth + bound[i] <= best) {
            return;
          }
          Vertex              v = order[i];
          std::vector<Vertex> next;
          for (std::size_t j = 0; j < i; ++j) {
            if (g.adjacent(v, order[j])) {
              next.push_back(order[j]);
            }
          }
          expand(next, depth + 1);
        }
      }
    };
  }  // namespace

  std::vector<std::vector<std::optional<std::size_t>>>
  distance_matrix(Graph const& g) {
    std::vector<std::vector<std::optional<std::size_t>>> out;
    out.reserve(g.size());
    for (Vertex s = 0; s < g.size(); ++s) {
      out.push_back(bfs(g, s));
    }
    return out;
  }

  void require_connected(Graph const& g) {
    if (g.empty()) {
      throw GraphError("graph has no vertices");
    }
    auto dist = bfs(g, 0);
    for (Vertex v = 0; v < g.size(); ++v) {
      if (!dist[v]) {
        throw GraphError("graph is disconnected: no path from \"" + g.label(0)
                         + "\" to \"" + g.label(v) + "\"");
      }
    }
  }

  std::vector<Edge> bridges(Graph const& g) {
    std::vector<Edge> out;
    for (auto const& [u, v] : g.edges()) {
      if (!connected_without(g, u, v)) {
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::vector<Vertex> core_vertices(Graph const& g) {
    std::vector<char> on_cycle(g.size(), 0);
    auto              br = bridges(g);
    for (auto const& e : g.edges()) {
      if (std::find(br.begin(), br.end(), e) == br.end()) {
        on_cycle[e.first]  = 1;
        on_cycle[e.second] = 1;
      }
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (on_cycle[v]) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::size_t clique_number(Graph const& g) {
    if (g.empty()) {
      return 0;
    }
    CliqueSearch        search{g};
    std::vector<Vertex> all(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      all[v] = v;
    }
    std::sort(all.begin(), all.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    search.expand(all, 0);
    return search.best;
  }

  GraphMetrics metrics(Graph const& g) {
    require_connected(g);
    GraphMetrics m;
    std::size_t  diam = 0;
    for (auto const& row : distance_matrix(g)) {
      for (auto const& d : row) {
        diam = std::max(diam, *d);
      }
    }
    m.diameter = diam;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (g.degree(v) == 1) {
        m.end_vertices.push_back(v);
      }
    }
    m.core          = core_vertices(g);
    m.clique_number = clique_number(g);
    return m;
  }

}  // namespace zdr
