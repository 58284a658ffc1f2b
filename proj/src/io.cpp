#include "zdr/io.hpp"

#include <fstream>
#include <sstream>

namespace zdr {

  Json to_json(Graph const& g) {
    Json edges = Json::array();
    for (auto const& [u, v] : g.edges()) {
      edges.push_back({g.label(u), g.label(v)});
    }
    return Json{{"vertices", g.labels()}, {"edges", edges}};
  }

  Graph graph_from_json(Json const& j) {
    try {
      if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw FormatError("graph: expected an object with \"vertices\" and "
                          "\"edges\"");
      }
      auto labels = j.at("vertices").get<std::vector<std::string>>();
      std::vector<std::pair<std::string, std::string>> edges;
      std::size_t                                      k = 0;
      for (auto const& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw FormatError("graph: edges[" + std::to_string(k)
                            + "] is not a pair");
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        ++k;
      }
      return Graph(std::move(labels), edges);
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(std::string("graph: ") + e.what());
    } catch (GraphError const& e) {
      throw FormatError(std::string("graph: ") + e.what());
    }
  }

  std::string to_dot(Graph const& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (auto const& l : g.labels()) {
      out << "  \"" << l << "\";\n";
    }
    for (auto const& [u, v] : g.edges()) {
      out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string to_text(Graph const& g) {
    std::ostringstream out;
    out << g.size() << " vertices, " << g.edge_count() << " edges\n";
    for (Vertex v = 0; v < g.size(); ++v) {
      out << g.label(v) << ":";
      for (Vertex w : g.neighbours(v)) {
        out << ' ' << g.label(w);
      }
      out << '\n';
    }
    return out.str();
  }

  Json to_json(MulTable const& t) {
    return Json{{"elements", t.elements()}, {"product", t.rows()}};
  }

  MulTable table_from_json(Json const& j) {
    MulTable t;
    try {
      if (!j.is_object() || !j.contains("elements") || !j.contains("product")) {
        throw FormatError("table: expected an object with \"elements\" and "
                          "\"product\"");
      }
      t = MulTable(j.at("elements").get<std::vector<std::string>>(),
                   j.at("product").get<std::vector<std::vector<Element>>>());
    } catch (nlohmann::json::exception const& e) {
      throw FormatError(std::string("table: ") + e.what());
    } catch (TableError const& e) {
      throw FormatError(std::string("table: ") + e.what());
    }
    auto bad = structural_violations(t);
    if (!bad.empty()) {
      throw FormatError("table: " + bad.front().message);
    }
    return t;
  }

  std::string hex(std::string const& bytes) {
    static char const digits[] = "0123456789abcdef";
    std::string       out;
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 0xF]);
    }
    return out;
  }

  Json to_json(EnumerationReport const& r, bool deterministic) {
    Json opts = Json::object();
    opts["limit"]     = r.options.limit ? Json(*r.options.limit) : Json(nullptr);
    opts["timeout"]   = r.options.timeout_seconds ? Json(*r.options.timeout_seconds)
                                                  : Json(nullptr);
    opts["dedup"]     = r.options.dedup;
    opts["propagate"] = r.options.propagate;

    Json classes = Json::array();
    for (auto const& c : r.classes) {
      classes.push_back({{"table", to_json(c.table)},
                         {"orbit_size", c.orbit_size},
                         {"key", hex(c.key)}});
    }
    Json out{{"graph", to_json(r.graph)},
             {"options", opts},
             {"status", std::string(to_string(r.status))},
             {"labeled_count", r.labeled_count},
             {"class_count", r.classes.size()},
             {"automorphism_count", r.automorphism_count},
             {"classes", classes},
             {"nodes_explored", r.stats.nodes_explored},
             {"leaves_checked", r.stats.leaves_checked},
             {"leaf_rejections", r.stats.leaf_rejections}};
    if (!deterministic) {
      out["wall_time_seconds"] = r.wall_seconds;
    }
    return out;
  }

  Json to_json(ScreenReport const& r, Graph const& g) {
    auto one = [&](ConditionVerdict const& c) {
      Json w = Json::array();
      for (Vertex v : c.witness) {
        w.push_back(g.label(v));
      }
      Json out{{"verdict", c.pass ? "PASS" : "FAIL"}};
      if (!c.pass) {
        out["witness"] = w;
        out["reason"]  = c.reason;
      }
      return out;
    };
    return Json{{"diameter_le_3", one(r.diameter_le_3)},
                {"core_triangles_squares", one(r.core_triangles_squares)},
                {"end_or_core_dichotomy", one(r.end_or_core_dichotomy)},
                {"neighborhood_domination", one(r.neighborhood_domination)},
                {"all_pass", r.all_pass()}};
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw FormatError(path + ": cannot open file");
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
      throw FormatError(path + ": byte " + std::to_string(e.byte) + ": "
                        + e.what());
    }
  }

  Graph read_graph_file(std::string const& path) {
    auto j = read_json_file(path);
    try {
      return graph_from_json(j);
    } catch (FormatError const& e) {
      throw FormatError(path + ": " + e.what());
    }
  }

  MulTable read_table_file(std::string const& path) {
    auto j = read_json_file(path);
    try {
      return table_from_json(j);
    } catch (FormatError const& e) {
      throw FormatError(path + ": " + e.what());
    }
  }

}  // namespace zdr
