#include "zdr/screen.hpp"

#include <algorithm>
#include <queue>

#include "zdr/metrics.hpp"

namespace zdr {

  namespace {
    bool on_short_cycle(Graph const& g, Vertex u, Vertex v) {
      for (Vertex a : g.neighbours(u)) {
        if (a == v) {
          continue;
        }
        if (g.adjacent(a, v)) {
          return true;
        }
        for (Vertex b : g.neighbours(v)) {
          if (b != u && b != a && g.adjacent(a, b)) {
            return true;
          }
        }
      }
      return false;
    }

    // Shortest u..v path avoiding the edge u-v; closes a cycle with it.
    std::vector<Vertex> shortest_cycle_through(Graph const& g, Vertex u, Vertex v) {
      std::vector<Vertex> parent(g.size(), g.size());
      std::queue<Vertex>  q;
      parent[u] = u;
      q.push(u);
      while (!q.empty()) {
        Vertex w = q.front();
        q.pop();
        for (Vertex t : g.neighbours(w)) {
          if ((w == u && t == v) || parent[t] != g.size()) {
            continue;
          }
          parent[t] = w;
          q.push(t);
        }
      }
      std::vector<Vertex> cycle;
      if (parent[v] == g.size()) {
        return cycle;
      }
      for (Vertex w = v; w != u; w = parent[w]) {
        cycle.push_back(w);
      }
      cycle.push_back(u);
      std::reverse(cycle.begin(), cycle.end());
      return cycle;
    }

    std::string name_list(Graph const& g, std::vector<Vertex> const& vs) {
      std::string out;
      for (Vertex v : vs) {
        out += (out.empty() ? "" : "-") + g.label(v);
      }
      return out;
    }
  }  // namespace

  ScreenReport screen(Graph const& g) {
    require_connected(g);
    ScreenReport report;

    auto dist = distance_matrix(g);
    for (Vertex u = 0; u < g.size() && report.diameter_le_3.pass; ++u) {
      for (Vertex v = u + 1; v < g.size(); ++v) {
        if (*dist[u][v] > 3) {
          report.diameter_le_3 = {false,
                                  {u, v},
                                  "distance " + std::to_string(*dist[u][v])
                                      + " between " + g.label(u) + " and "
                                      + g.label(v)};
          break;
        }
      }
    }

    auto br   = bridges(g);
    auto core = core_vertices(g);
    for (auto const& [u, v] : g.edges()) {
      if (std::find(br.begin(), br.end(), Edge{u, v}) != br.end()) {
        continue;
      }
      if (!on_short_cycle(g, u, v)) {
        auto cycle                    = shortest_cycle_through(g, u, v);
        report.core_triangles_squares = {
            false,
            cycle,
            "edge " + g.label(u) + "-" + g.label(v)
                + " lies on no triangle or square; shortest cycle "
                + name_list(g, cycle)};
        break;
      }
    }

    if (!core.empty()) {
      for (Vertex v = 0; v < g.size(); ++v) {
        bool in_core = std::binary_search(core.begin(), core.end(), v);
        if (!in_core && g.degree(v) != 1) {
          report.end_or_core_dichotomy = {
              false,
              {v},
              g.label(v) + " is neither an end vertex nor on a cycle"};
          break;
        }
      }
    }

    auto closed_covers = [&](Vertex z, Vertex w) {
      return w == z || g.adjacent(z, w);
    };
    for (Vertex x = 0; x < g.size() && report.neighborhood_domination.pass; ++x) {
      for (Vertex y = x + 1; y < g.size(); ++y) {
        if (g.adjacent(x, y)) {
          continue;
        }
        bool found = false;
        for (Vertex z = 0; z < g.size() && !found; ++z) {
          auto covers = [&](Vertex w) { return closed_covers(z, w); };
          found = std::all_of(g.neighbours(x).begin(), g.neighbours(x).end(), covers)
                  && std::all_of(g.neighbours(y).begin(), g.neighbours(y).end(), covers);
        }
        if (!found) {
          report.neighborhood_domination = {
              false,
              {x, y},
              "no vertex dominates N(" + g.label(x) + ") u N(" + g.label(y)
                  + ")"};
          break;
        }
      }
    }
    return report;
  }

}  // namespace zdr
