#include "zdr/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace zdr {

  JointColouring refine_colours(Graph const& g, Graph const& h) {
    std::size_t const        n = g.size(), total = g.size() + h.size();
    auto                     nbrs = [&](std::size_t v) -> std::vector<Vertex> const& {
      return v < n ? g.neighbours(v) : h.neighbours(v - n);
    };
    auto                     offset = [&](std::size_t v) { return v < n ? 0 : n; };
    std::vector<std::size_t> colour(total);
    for (std::size_t v = 0; v < total; ++v) {
      colour[v] = nbrs(v).size();
    }
    std::size_t nr_classes = 0;
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> ids;
      std::vector<std::vector<std::size_t>>            sig(total);
      for (std::size_t v = 0; v < total; ++v) {
        sig[v].push_back(colour[v]);
        std::vector<std::size_t> around;
        for (Vertex w : nbrs(v)) {
          around.push_back(colour[w + offset(v)]);
        }
        std::sort(around.begin(), around.end());
        sig[v].insert(sig[v].end(), around.begin(), around.end());
        ids.emplace(sig[v], 0);
      }
      std::size_t next = 0;
      for (auto& [key, id] : ids) {
        id = next++;
      }
      for (std::size_t v = 0; v < total; ++v) {
        colour[v] = ids[sig[v]];
      }
      if (ids.size() == nr_classes) {
        break;
      }
      nr_classes = ids.size();
    }
    JointColouring out;
    out.first.assign(colour.begin(), colour.begin() + n);
    out.second.assign(colour.begin() + n, colour.end());
    return out;
  }

  namespace {
    // Backtracking over colour-respecting vertex maps g -> h. `emit` returns
    // false to stop the search.
    void match(Graph const&                                 g,
               Graph const&                                 h,
               std::function<bool(Permutation const&)> const& emit) {
      if (g.size() != h.size() || g.edge_count() != h.edge_count()) {
        return;
      }
      std::size_t const n = g.size();
      auto              c = refine_colours(g, h);
      {
        auto a = c.first, b = c.second;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return;
        }
      }
      std::vector<std::size_t> class_size(g.size() + h.size() + 1, 0);
      for (auto col : c.first) {
        ++class_size[col];
      }
      // Order: each next vertex has the most already-ordered neighbours,
      // then the smallest colour class.
      std::vector<Vertex> order;
      std::vector<char>   placed(n, 0);
      std::vector<std::size_t> weight(n, 0);
      for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v) {
          if (placed[v]) {
            continue;
          }
          if (best == n || weight[v] > weight[best]
              || (weight[v] == weight[best]
                  && class_size[c.first[v]] < class_size[c.first[best]])) {
            best = v;
          }
        }
        placed[best] = 1;
        order.push_back(best);
        for (Vertex w : g.neighbours(best)) {
          ++weight[w];
        }
      }

      std::vector<std::size_t> image(n, n);
      std::vector<char>        used(n, 0);
      bool                     stop = false;

      std::function<void(std::size_t)> dive = [&](std::size_t depth) {
        if (depth == n) {
          stop = !emit(Permutation(image));
          return;
        }
        Vertex u = order[depth];
        for (Vertex cand = 0; cand < n && !stop; ++cand) {
          if (used[cand] || c.second[cand] != c.first[u]) {
            continue;
          }
          bool ok = true;
          for (std::size_t d = 0; d < depth && ok; ++d) {
            Vertex w = order[d];
            ok       = g.adjacent(u, w) == h.adjacent(cand, image[w]);
          }
          if (!ok) {
            continue;
          }
          image[u]   = cand;
          used[cand] = 1;
          dive(depth + 1);
          used[cand] = 0;
          image[u]   = n;
        }
      };
      dive(0);
    }
  }  // namespace

  std::vector<Permutation> automorphisms(Graph const& g) {
    if (g.size() > max_automorphism_vertices) {
      throw GraphError("automorphisms: graph has " + std::to_string(g.size())
                       + " vertices, limit is "
                       + std::to_string(max_automorphism_vertices));
    }
    std::vector<Permutation> out;
    match(g, g, [&](Permutation const& p) {
      out.push_back(p);
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<Permutation> are_isomorphic(Graph const& g, Graph const& h) {
    std::optional<Permutation> out;
    match(g, h, [&](Permutation const& p) {
      out = p;
      return false;
    });
    return out;
  }

}  // namespace zdr
