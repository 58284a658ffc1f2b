#ifndef ZDR_TESTS_SUPPORT_HPP_
#define ZDR_TESTS_SUPPORT_HPP_

// Independent reference implementations used only by the tests. None of
// them calls into the library code they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zdr/graph.hpp"
#include "zdr/semigroup.hpp"

namespace zdr::test {

  using Matrix = std::vector<std::vector<int>>;

  inline Matrix adjacency(Graph const& g) {
    Matrix m(g.size(), std::vector<int>(g.size(), 0));
    for (auto const& [u, v] : g.edges()) {
      m[u][v] = m[v][u] = 1;
    }
    return m;
  }

  // Tries every bijection.
  inline bool brute_isomorphic(Graph const& g, Graph const& h) {
    if (g.size() != h.size() || g.edge_count() != h.edge_count()) {
      return false;
    }
    auto               a = adjacency(g), b = adjacency(h);
    std::vector<std::size_t> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < p.size() && ok; ++i) {
        for (std::size_t j = 0; j < p.size() && ok; ++j) {
          ok = a[i][j] == b[p[i]][p[j]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  inline std::size_t brute_automorphism_count(Graph const& g) {
    auto               a = adjacency(g);
    std::vector<std::size_t> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    std::size_t count = 0;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < p.size() && ok; ++i) {
        for (std::size_t j = 0; j < p.size() && ok; ++j) {
          ok = a[i][j] == a[p[i]][p[j]];
        }
      }
      count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
  }

  inline std::vector<std::string> numbered(std::size_t n, std::string const& prefix = "v") {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) {
      out.push_back(prefix + std::to_string(i));
    }
    return out;
  }

  inline Graph from_mask(std::size_t n, std::uint32_t mask) {
    std::vector<Edge> edges;
    std::size_t       bit = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v, ++bit) {
        if (mask >> bit & 1U) {
          edges.emplace_back(u, v);
        }
      }
    }
    return Graph(numbered(n), edges);
  }

  inline bool brute_connected(std::size_t n, std::uint32_t mask) {
    auto                a = adjacency(from_mask(n, mask));
    std::vector<char>   seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (a[u][v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
  }

  // The least edge mask over all relabelings.
  inline std::uint32_t canonical_mask(std::size_t n, std::uint32_t mask) {
    auto a = adjacency(from_mask(n, mask));
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint32_t best = ~0U;
    do {
      std::uint32_t m = 0, bit = 0;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v, ++bit) {
          if (a[p[u]][p[v]]) {
            m |= 1U << bit;
          }
        }
      }
      best = std::min(best, m);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  // One representative of every connected graph on n vertices (n <= 6).
  inline std::vector<Graph> connected_graphs(std::size_t n) {
    std::set<std::uint32_t> seen;
    std::vector<Graph>      out;
    std::uint32_t const     pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      if (!brute_connected(n, mask)) {
        continue;
      }
      if (seen.insert(canonical_mask(n, mask)).second) {
        out.push_back(from_mask(n, canonical_mask(n, mask)));
      }
    }
    return out;
  }

  inline Matrix table_matrix(MulTable const& t) {
    Matrix m(t.size(), std::vector<int>(t.size()));
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = 0; y < t.size(); ++y) {
        m[x][y] = t.at(x, y);
      }
    }
    return m;
  }

  inline bool naive_associative(Matrix const& m) {
    std::size_t n = m.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (m[m[x][y]][z] != m[x][m[y][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Tries every zero-fixing bijection.
  inline bool brute_semigroup_isomorphic(MulTable const& s, MulTable const& t) {
    if (s.size() != t.size()) {
      return false;
    }
    auto a = table_matrix(s), b = table_matrix(t);
    std::vector<std::size_t> p(s.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (std::size_t x = 0; x < p.size() && ok; ++x) {
        for (std::size_t y = 0; y < p.size() && ok; ++y) {
          ok = static_cast<int>(p[a[x][y]]) == b[p[x]][p[y]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return false;
  }

  // set of label digits, e.g. "x13" -> {1, 3}; "0" -> {}.
  inline std::vector<int> subset_of_label(std::string const& label) {
    std::vector<int> out;
    if (label == "0") {
      return out;
    }
    std::string digits = label.substr(1);
    if (digits.find('_') != std::string::npos) {
      std::size_t start = 0;
      while (start <= digits.size()) {
        auto end = digits.find('_', start);
        if (end == std::string::npos) {
          end = digits.size();
        }
        out.push_back(std::stoi(digits.substr(start, end - start)));
        start = end + 1;
      }
    } else {
      for (char c : digits) {
        out.push_back(c - '0');
      }
    }
    return out;
  }

  // Componentwise minimum of {0,1}-vectors.
  inline std::vector<int> vector_min(std::vector<int> const& u, std::vector<int> const& v) {
    std::vector<int> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      w[i] = std::min(u[i], v[i]);
    }
    return w;
  }

  inline std::vector<int> indicator(std::vector<int> const& subset, std::size_t n) {
    std::vector<int> v(n, 0);
    for (int i : subset) {
      v[static_cast<std::size_t>(i - 1)] = 1;
    }
    return v;
  }

  // Random table on `size` elements with a zero row and symmetric
  // products; entries are 0 with probability `zero_bias`.
  inline MulTable random_table(std::mt19937_64& rng, std::size_t size, double zero_bias) {
    std::vector<std::vector<Element>> rows(size, std::vector<Element>(size, 0));
    std::bernoulli_distribution       zero(zero_bias);
    std::uniform_int_distribution<int> pick(1, static_cast<int>(size) - 1);
    for (std::size_t x = 1; x < size; ++x) {
      for (std::size_t y = x; y < size; ++y) {
        Element v = zero(rng) ? 0 : static_cast<Element>(pick(rng));
        rows[x][y] = rows[y][x] = v;
      }
    }
    std::vector<std::string> labels{"0"};
    for (std::size_t i = 1; i < size; ++i) {
      labels.push_back("e" + std::to_string(i));
    }
    return MulTable(labels, rows);
  }

  // Relabels elements by p, which must fix 0.
  inline MulTable permute_elements(MulTable const& t, std::vector<std::size_t> const& p) {
    std::size_t                       n = t.size();
    std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
    std::vector<std::string>          labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[p[x]] = t.label(x);
      for (std::size_t y = 0; y < n; ++y) {
        rows[p[x]][p[y]] = static_cast<Element>(p[t.at(x, y)]);
      }
    }
    return MulTable(labels, rows);
  }

}  // namespace zdr::test

#endif  // ZDR_TESTS_SUPPORT_HPP_
