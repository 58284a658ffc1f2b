#ifndef ZDR_IO_HPP_
#define ZDR_IO_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "zdr/graph.hpp"
#include "zdr/screen.hpp"
#include "zdr/search.hpp"
#include "zdr/semigroup.hpp"

namespace zdr {

  // Malformed input document; what() names the source and location.
  class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  using Json = nlohmann::ordered_json;

  // {"vertices": [...], "edges": [[u, v], ...]}
  Json  to_json(Graph const& g);
  Graph graph_from_json(Json const& j);

  std::string to_dot(Graph const& g);
  std::string to_text(Graph const& g);

  // {"elements": ["0", ...], "product": [[...], ...]}; loading rejects
  // tables with zero-row, symmetry or closure violations.
  Json     to_json(MulTable const& t);
  MulTable table_from_json(Json const& j);

  // With deterministic set, wall time is omitted.
  Json to_json(EnumerationReport const& r, bool deterministic);

  Json to_json(ScreenReport const& r, Graph const& g);

  std::string hex(std::string const& bytes);

  Json     read_json_file(std::string const& path);
  Graph    read_graph_file(std::string const& path);
  MulTable read_table_file(std::string const& path);

}  // namespace zdr

#endif  // ZDR_IO_HPP_
