#include "catch_amalgamated.hpp"

#include "support.hpp"
#include "zdr/automorphism.hpp"
#include "zdr/families.hpp"
#include "zdr/fixtures.hpp"
#include "zdr/io.hpp"
#include "zdr/screen.hpp"
#include "zdr/search.hpp"

using namespace zdr;

namespace {
  std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    for (std::size_t n = 2; n <= 4; ++n) {
      for (auto const& g : test::connected_graphs(n)) {
        out.push_back(g);
      }
    }
    return out;
  }

  std::vector<Graph> family_corpus() {
    std::vector<Graph> out{complete_with_ends(3, 1), complete_with_ends(3, 2),
                           complete_with_ends(3, 3), complete_with_ends(4, 2),
                           complete_with_ends(4, 3), figure("2.4"),
                           figure("3.5"),           complete_bipartite(2, 3),
                           attach_end_vertices(complete_bipartite(2, 2), {"a1", "a2"}),
                           h_mn_family(2, 3, empty_block(1), empty_block(1))};
    for (auto const& g : test::connected_graphs(5)) {
      out.push_back(g);
    }
    return out;
  }

  std::set<std::string> serialized(std::vector<MulTable> const& ts) {
    std::set<std::string> out;
    for (auto const& t : ts) {
      out.insert(t.serialize());
    }
    return out;
  }

  std::vector<MulTable> tables_of(EnumerationReport const& r) {
    std::vector<MulTable> out;
    for (auto const& c : r.classes) {
      out.push_back(c.table);
    }
    return out;
  }

  void check_sound(Graph const& g, EnumerationReport const& r) {
    auto m = test::adjacency(g);
    for (auto const& c : r.classes) {
      CHECK(validate(c.table).empty());
      CHECK_FALSE(is_associative(c.table).has_value());
      CHECK(test::naive_associative(test::table_matrix(c.table)));
      CHECK(zero_divisor_graph(c.table) == g);
      // the defining condition, checked directly
      for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = 0; v < g.size(); ++v) {
          if (u != v) {
            CHECK((c.table.at(u + 1, v + 1) == 0) == (m[u][v] == 1));
          }
        }
      }
    }
  }
}  // namespace

TEST_CASE("enumeration examples", "[search]") {
  auto k2 = enumerate_realizations(complete_graph(2));
  CHECK(k2.status == SearchStatus::exhaustive);
  CHECK(k2.classes.size() == 4);
  CHECK(k2.labeled_count == 6);

  auto m32 = enumerate_realizations(complete_with_ends(3, 2));
  CHECK(m32.classes.size() == 3);
  CHECK(m32.automorphism_count == 2);

  auto m44 = enumerate_realizations(complete_with_ends(4, 4));
  CHECK(m44.status == SearchStatus::exhaustive);
  CHECK(m44.classes.empty());

  auto g3 = enumerate_realizations(gamma_n(3));
  REQUIRE(g3.classes.size() == 1);
  CHECK(are_semigroups_isomorphic(g3.classes[0].table, power_set_zd_semigroup(3)).has_value());

  CHECK(enumerate_realizations(complete_graph(3)).classes.size() >= 2);
}

TEST_CASE("enumeration input checks", "[search]") {
  CHECK_THROWS_AS(enumerate_realizations(make_graph({"a"}, {})), GraphError);
  CHECK_THROWS_AS(enumerate_realizations(make_graph({"a", "b"}, {})), GraphError);
  CHECK_THROWS_AS(enumerate_realizations(make_graph({"0", "b"}, {{"0", "b"}})), GraphError);
  CHECK_THROWS_AS(enumerate_realizations(Graph(test::numbered(33), std::vector<Edge>{})), GraphError);
}

TEST_CASE("brute-force oracle examples", "[search][oracle]") {
  CHECK(brute_force_oracle(complete_graph(2)).size() == 6);
  auto path = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EnumerationOptions all;
  all.dedup = false;
  CHECK(serialized(brute_force_oracle(path))
        == serialized(tables_of(enumerate_realizations(path, all))));
  CHECK_THROWS(brute_force_oracle(complete_graph(5)));
}

TEST_CASE("search matches the oracle on every connected graph up to 4 vertices",
          "[search][oracle]") {
  auto corpus = small_corpus();
  REQUIRE(corpus.size() == 9);
  EnumerationOptions all;
  all.dedup = false;
  for (auto const& g : corpus) {
    CAPTURE(to_json(g).dump());
    auto oracle = brute_force_oracle(g);
    auto r      = enumerate_realizations(g, all);
    CHECK(r.status == SearchStatus::exhaustive);
    CHECK(serialized(oracle) == serialized(tables_of(r)));
    CHECK(r.labeled_count == oracle.size());
    // the oracle's own output is checked independently
    for (auto const& t : oracle) {
      CHECK(test::naive_associative(test::table_matrix(t)));
      CHECK(zero_divisor_graph(t) == g);
    }
  }
}

TEST_CASE("propagation does not lose solutions", "[search][property]") {
  // without pruning the search is a plain odometer, so only small graphs
  for (auto const& g : small_corpus()) {
    CAPTURE(to_json(g).dump());
    EnumerationOptions pruned, plain;
    pruned.dedup = plain.dedup = false;
    plain.propagate            = false;
    auto a                     = enumerate_realizations(g, pruned);
    auto b                     = enumerate_realizations(g, plain);
    CHECK(serialized(tables_of(a)) == serialized(tables_of(b)));
    CHECK(b.stats.nodes_explored >= a.stats.nodes_explored);
    CHECK(b.stats.leaves_checked >= a.stats.leaves_checked);
    CHECK(a.stats.leaf_rejections == 0);
  }
}

TEST_CASE("orbits under the automorphism group", "[search][property]") {
  for (auto const& g : family_corpus()) {
    CAPTURE(to_json(g).dump());
    auto r = enumerate_realizations(g);
    REQUIRE(r.status == SearchStatus::exhaustive);
    auto        autos = automorphisms(g);
    std::size_t total = 0;
    std::set<std::string> keys;
    for (auto const& c : r.classes) {
      CHECK(autos.size() % c.orbit_size == 0);
      total += c.orbit_size;
      keys.insert(c.key);
      CHECK(c.key == canonical_key(c.table, autos));
      std::set<std::string> orbit;
      for (auto const& p : autos) {
        orbit.insert(relabel(c.table, p).serialize());
      }
      CHECK(orbit.size() == c.orbit_size);
    }
    CHECK(keys.size() == r.classes.size());
    CHECK(total == r.labeled_count);
    // no two representatives related by an automorphism
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      for (std::size_t j = i + 1; j < r.classes.size(); ++j) {
        for (auto const& p : autos) {
          CHECK_FALSE(relabel(r.classes[i].table, p) == r.classes[j].table);
        }
      }
    }
    EnumerationOptions all;
    all.dedup = false;
    CHECK(enumerate_realizations(g, all).labeled_count == r.labeled_count);
  }
}

TEST_CASE("every emitted table is sound", "[search][property]") {
  for (auto const& g : family_corpus()) {
    CAPTURE(to_json(g).dump());
    check_sound(g, enumerate_realizations(g));
    EnumerationOptions all;
    all.dedup = false;
    check_sound(g, enumerate_realizations(g, all));
  }
}

TEST_CASE("reports do not depend on the thread count", "[search][property]") {
  for (auto const& g : {complete_graph(3), complete_with_ends(3, 1), complete_with_ends(4, 2),
                        complete_graph(4), figure("3.5")}) {
    std::string first;
    for (unsigned threads : {1U, 2U, 3U, 8U}) {
      EnumerationOptions o;
      o.threads = threads;
      auto text = to_json(enumerate_realizations(g, o), true).dump();
      if (first.empty()) {
        first = text;
      }
      CHECK(text == first);
    }
  }
}

TEST_CASE("limit and timeout", "[search]") {
  EnumerationOptions o;
  o.limit = 1;
  auto r  = enumerate_realizations(complete_with_ends(3, 2), o);
  CHECK(r.status == SearchStatus::limit_reached);
  CHECK(r.labeled_count == 1);

  o.limit = 5;
  CHECK(enumerate_realizations(complete_with_ends(3, 2), o).status == SearchStatus::exhaustive);

  EnumerationOptions t;
  t.timeout_seconds = 1e-6;
  auto slow         = enumerate_realizations(complete_bipartite(3, 3), t);
  CHECK(slow.status == SearchStatus::timeout);
  check_sound(complete_bipartite(3, 3), slow);
}

TEST_CASE("published tables appear among the enumerated classes", "[search]") {
  auto g     = complete_with_ends(3, 2);
  auto r     = enumerate_realizations(g);
  auto autos = automorphisms(g);
  std::set<std::string> keys;
  for (auto const& c : r.classes) {
    keys.insert(c.key);
  }
  CHECK(keys
        == std::set<std::string>{canonical_key(fixtures::table_2_1(), autos),
                                 canonical_key(fixtures::table_2_2(), autos),
                                 canonical_key(fixtures::table_2_3(), autos)});

  auto f = enumerate_realizations(figure("2.4"));
  REQUIRE(f.classes.size() == 1);
  CHECK(are_semigroups_isomorphic(f.classes[0].table, fixtures::cor_2_4_table()).has_value());
}

TEST_CASE("screen examples", "[screen]") {
  auto same_part = attach_end_vertices(complete_bipartite(2, 2), {"a1", "a2"});
  auto s         = screen(same_part);
  CHECK_FALSE(s.diameter_le_3.pass);
  CHECK(s.diameter_le_3.reason.find("distance 4") != std::string::npos);
  REQUIRE(s.diameter_le_3.witness.size() == 2);
  CHECK(same_part.label(s.diameter_le_3.witness[0]) == "x1");

  CHECK(screen(figure("3.5")).all_pass());
  CHECK(enumerate_realizations(figure("3.5")).classes.empty());
  CHECK(screen(complete_graph(3)).all_pass());
  CHECK_THROWS_AS(screen(make_graph({"a", "b"}, {})), GraphError);
}

TEST_CASE("screen conditions on hand-built graphs", "[screen]") {
  // 5-cycle: edges lie on no triangle or square
  auto c5 = Graph(test::numbered(5), std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  auto s  = screen(c5);
  CHECK_FALSE(s.core_triangles_squares.pass);
  CHECK(s.core_triangles_squares.witness.size() == 5);

  // triangle with a pendant path of length two: v5 is neither an end nor on a cycle
  auto tail = Graph(test::numbered(5), std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  auto t    = screen(tail);
  CHECK_FALSE(t.end_or_core_dichotomy.pass);
  CHECK(t.end_or_core_dichotomy.witness == std::vector<Vertex>{3});

  // any failing condition carries a witness
  for (std::size_t n = 2; n <= 5; ++n) {
    for (auto const& g : test::connected_graphs(n)) {
      auto r = screen(g);
      for (auto const* c : {&r.diameter_le_3, &r.core_triangles_squares,
                            &r.end_or_core_dichotomy, &r.neighborhood_domination}) {
        if (!c->pass) {
          CHECK_FALSE(c->witness.empty());
          CHECK_FALSE(c->reason.empty());
        }
      }
    }
  }
}

TEST_CASE("screen failure implies no realization", "[screen][property]") {
  std::size_t failing = 0;
  for (auto const& g : family_corpus()) {
    if (!screen(g).all_pass()) {
      ++failing;
      auto r = enumerate_realizations(g);
      CHECK(r.status == SearchStatus::exhaustive);
      CHECK(r.classes.empty());
    }
  }
  CHECK(failing >= 3);
}
