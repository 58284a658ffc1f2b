#ifndef ZDR_SEARCH_HPP_
#define ZDR_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdr/graph.hpp"
#include "zdr/semigroup.hpp"

namespace zdr {

  // Largest graph the enumerator accepts; domains are 64-bit masks.
  inline constexpr std::size_t max_search_vertices = 32;

  struct EnumerationOptions {
    // Stop once this many labelled tables are found. The status is then
    // LIMIT_REACHED even if no further table exists, and which tables are kept
    // may depend on the thread count.
    std::optional<std::size_t> limit;
    std::optional<double>      timeout_seconds;
    // Report one table per Aut(g)-orbit instead of every labelled table.
    bool dedup = true;
    // Worker threads; results do not depend on this.
    unsigned threads = 1;
    // Debug switch: with false, only leaves are checked.
    bool propagate = true;
  };

  enum class SearchStatus { exhaustive, limit_reached, timeout };

  std::string_view to_string(SearchStatus s);

  struct RealizationClass {
    MulTable table;
    // Number of labelled tables the entry stands for: the orbit size under
    // Aut(g) with dedup, 1 without.
    std::size_t orbit_size = 1;
    // canonical_key(table, Aut(g)) with dedup, the plain serialization
    // without.
    std::string key;
  };

  struct SearchStats {
    std::uint64_t nodes_explored  = 0;
    std::uint64_t leaves_checked  = 0;
    // Fully assigned tables that failed the from-scratch recheck.
    std::uint64_t leaf_rejections = 0;
    std::size_t   tasks           = 0;
  };

  struct EnumerationReport {
    Graph                         graph;
    EnumerationOptions            options;
    SearchStatus                  status = SearchStatus::exhaustive;
    std::size_t                   labeled_count = 0;
    std::vector<RealizationClass> classes;
    std::size_t                   automorphism_count = 0;
    SearchStats                   stats;
    double                        wall_seconds = 0;
  };

  // Every commutative zero-divisor semigroup on {0} u V(g) whose
  // zero-divisor graph is exactly g. Throws GraphError for a disconnected
  // graph, fewer than 2 or more than max_search_vertices vertices, or a
  // vertex named "0".
  EnumerationReport enumerate_realizations(Graph const&              g,
                                           EnumerationOptions const& opts = {});

  // Plain generate-and-test over every assignment of the cells not forced
  // by an edge; sorted by serialization. At most 4 vertices.
  std::vector<MulTable> brute_force_oracle(Graph const& g);

  // The table on {0} u V(g) labelled as enumerate_realizations labels it.
  std::vector<std::string> element_labels(Graph const& g);

}  // namespace zdr

#endif  // ZDR_SEARCH_HPP_
