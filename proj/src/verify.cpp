#include "zdr/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "zdr/automorphism.hpp"
#include "zdr/families.hpp"
#include "zdr/fixtures.hpp"
#include "zdr/metrics.hpp"
#include "zdr/screen.hpp"

namespace zdr {

  std::string_view to_string(VerdictStatus s) {
    switch (s) {
      case VerdictStatus::pass:
        return "PASS";
      case VerdictStatus::fail:
        return "FAIL";
      case VerdictStatus::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
  }

  namespace {
    using Check = std::function<Verdict(Claim const&, EnumerationOptions const&)>;

    struct Instance {
      std::string            name;
      std::function<Graph()> build;
    };

    Json report_summary(std::string const& name, EnumerationReport const& r) {
      Json keys = Json::array();
      for (auto const& c : r.classes) {
        keys.push_back(hex(c.key));
      }
      return Json{{"instance", name},
                  {"graph", to_json(r.graph)},
                  {"status", std::string(to_string(r.status))},
                  {"labeled_count", r.labeled_count},
                  {"class_count", r.classes.size()},
                  {"automorphism_count", r.automorphism_count},
                  {"nodes_explored", r.stats.nodes_explored},
                  {"class_keys", keys}};
    }

    Verdict make_verdict(Claim const& c,
                         VerdictStatus s,
                         std::string   summary,
                         Json          evidence) {
      Verdict v;
      v.id         = c.id;
      v.status     = s;
      v.provenance = c.provenance;
      v.summary    = std::move(summary);
      v.evidence   = std::move(evidence);
      return v;
    }

    // Every instance must have exactly `expected` classes. A run that did
    // not finish makes the claim inconclusive, never failed.
    Check class_count_check(std::vector<Instance> instances, std::size_t expected) {
      return [instances = std::move(instances), expected](
                 Claim const& c, EnumerationOptions const& opts) {
        Json        runs = Json::array();
        bool        all_done = true, all_match = true;
        std::string detail;
        for (auto const& inst : instances) {
          auto r = enumerate_realizations(inst.build(), opts);
          runs.push_back(report_summary(inst.name, r));
          if (r.status != SearchStatus::exhaustive) {
            all_done = false;
            detail += inst.name + " " + std::string(to_string(r.status)) + "; ";
            continue;
          }
          detail += inst.name + " " + std::to_string(r.classes.size())
                    + " classes; ";
          all_match = all_match && r.classes.size() == expected;
        }
        Json ev{{"expected_class_count", expected}, {"runs", runs}};
        auto status = !all_match  ? VerdictStatus::fail
                      : !all_done ? VerdictStatus::inconclusive
                                  : VerdictStatus::pass;
        return make_verdict(c, status, detail, ev);
      };
    }

    // One enumeration whose classes must be exactly the given fixtures up
    // to graph automorphism.
    Check fixture_match_check(std::string                         name,
                              std::function<Graph()>              build,
                              std::function<std::vector<MulTable>()> tables) {
      return [=](Claim const& c, EnumerationOptions const& opts) {
        auto g     = build();
        auto r     = enumerate_realizations(g, opts);
        auto autos = automorphisms(g);
        std::set<std::string> expected;
        for (auto const& t : tables()) {
          expected.insert(canonical_key(t, autos));
        }
        std::set<std::string> found;
        for (auto const& cl : r.classes) {
          found.insert(cl.key);
        }
        Json fixture_keys = Json::array();
        for (auto const& k : expected) {
          fixture_keys.push_back(hex(k));
        }
        Json ev{{"run", report_summary(name, r)}, {"fixture_keys", fixture_keys}};
        if (r.status != SearchStatus::exhaustive) {
          return make_verdict(
              c, VerdictStatus::inconclusive, name + " did not finish", ev);
        }
        bool ok = found == expected && r.classes.size() == expected.size();
        return make_verdict(c,
                            ok ? VerdictStatus::pass : VerdictStatus::fail,
                            name + ": " + std::to_string(r.classes.size())
                                + " classes, "
                                + (ok ? "matching" : "not matching") + " "
                                + std::to_string(expected.size())
                                + " fixture tables",
                            ev);
      };
    }

    Verdict uniqueness_gamma(Claim const& c, EnumerationOptions const& opts, std::size_t n) {
      auto g = gamma_n(n);
      auto r = enumerate_realizations(g, opts);
      auto p = power_set_zd_semigroup(n);
      Json ev{{"run", report_summary("gamma_" + std::to_string(n), r)}};
      if (r.status != SearchStatus::exhaustive) {
        return make_verdict(c, VerdictStatus::inconclusive, "enumeration did not finish", ev);
      }
      bool iso = r.classes.size() == 1
                 && are_semigroups_isomorphic(r.classes[0].table, p).has_value();
      bool same_class = r.classes.size() == 1
                        && r.classes[0].key == canonical_key(p, automorphisms(g));
      ev["isomorphic_to_power_set"]     = iso;
      ev["power_set_in_class"]          = same_class;
      bool ok                           = iso && same_class;
      return make_verdict(c,
                          ok ? VerdictStatus::pass : VerdictStatus::fail,
                          std::to_string(r.classes.size()) + " class(es); "
                              + (iso ? "isomorphic" : "not isomorphic")
                              + " to the power-set semigroup",
                          ev);
    }

    std::size_t binomial(std::size_t n, std::size_t k) {
      std::size_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    std::size_t factorial(std::size_t n) {
      return n <= 1 ? 1 : n * factorial(n - 1);
    }

    Verdict gamma_properties(Claim const& c, EnumerationOptions const&) {
      Json        checks = Json::array();
      bool        ok     = true;
      auto        record = [&](std::string what, bool pass, Json detail) {
        ok = ok && pass;
        checks.push_back({{"check", std::move(what)}, {"pass", pass}, {"detail", detail}});
      };
      auto g4 = gamma_n(4), g5 = gamma_n(5);
      record("gamma_4 has 14 vertices and 25 edges",
             g4.size() == 14 && g4.edge_count() == 25,
             {g4.size(), g4.edge_count()});
      record("gamma_5 has 30 vertices and 90 edges",
             g5.size() == 30 && g5.edge_count() == 90,
             {g5.size(), g5.edge_count()});
      record("gamma_2 is K_2",
             are_isomorphic(gamma_n(2), complete_graph(2)).has_value(),
             nullptr);
      for (std::size_t n = 2; n <= 8; ++n) {
        auto        g       = gamma_n(n);
        std::size_t formula = 0;
        for (std::size_t i = 1; i < n; ++i) {
          formula += binomial(n, i) << (n - i - 1);
        }
        formula = formula + 1 - (std::size_t(1) << (n - 1));
        record("gamma_" + std::to_string(n) + " vertex count and edge formula",
               g.size() == (std::size_t(1) << n) - 2 && g.edge_count() == formula,
               {g.size(), g.edge_count(), formula});
        auto subsets = proper_subsets_in_order(n);
        bool degrees = true;
        for (Vertex v = 0; v < g.size(); ++v) {
          auto i  = static_cast<std::size_t>(std::popcount(subsets[v]));
          degrees = degrees && g.degree(v) == (std::size_t(1) << (n - i)) - 1;
        }
        record("gamma_" + std::to_string(n) + " degrees are 2^(n-|B|)-1", degrees, nullptr);
      }
      for (std::size_t n = 3; n <= 6; ++n) {
        auto m = metrics(gamma_n(n));
        record("gamma_" + std::to_string(n) + " diameter 3, clique number n, n end vertices",
               m.diameter == 3 && m.clique_number == n && m.end_vertices.size() == n,
               {*m.diameter, m.clique_number, m.end_vertices.size()});
      }
      for (std::size_t n = 2; n <= 5; ++n) {
        auto a = automorphisms(gamma_n(n)).size();
        record("gamma_" + std::to_string(n) + " has n! automorphisms",
               a == factorial(n),
               {a, factorial(n)});
      }
      return make_verdict(c,
                          ok ? VerdictStatus::pass : VerdictStatus::fail,
                          std::to_string(checks.size()) + " structural checks",
                          Json{{"checks", checks}});
    }

    Verdict fixture_self_check(Claim const& c, EnumerationOptions const&) {
      struct Item {
        std::string name;
        MulTable    table;
        Graph       graph;
      };
      std::vector<Item> items{{"table_2_1", fixtures::table_2_1(), complete_with_ends(3, 2)},
                              {"table_2_2", fixtures::table_2_2(), complete_with_ends(3, 2)},
                              {"table_2_3", fixtures::table_2_3(), complete_with_ends(3, 2)},
                              {"cor_2_4", fixtures::cor_2_4_table(), figure("2.4")}};
      Json checks = Json::array();
      bool ok     = true;
      for (auto const& it : items) {
        bool valid = validate(it.table).empty();
        bool assoc = !is_associative(it.table).has_value();
        bool graph = valid && zero_divisor_graph(it.table) == it.graph;
        ok         = ok && valid && assoc && graph;
        checks.push_back({{"table", it.name},
                          {"valid", valid},
                          {"associative", assoc},
                          {"graph_matches", graph}});
      }
      bool distinct = !are_semigroups_isomorphic(fixtures::table_2_2(), fixtures::table_2_3())
                      && !are_semigroups_isomorphic(fixtures::table_2_1(), fixtures::table_2_2())
                      && !are_semigroups_isomorphic(fixtures::table_2_1(), fixtures::table_2_3());
      ok = ok && distinct;
      return make_verdict(c,
                          ok ? VerdictStatus::pass : VerdictStatus::fail,
                          ok ? "all fixtures are valid, associative and pairwise "
                               "non-isomorphic"
                             : "fixture self-check failed",
                          Json{{"checks", checks}, {"pairwise_non_isomorphic", distinct}});
    }

    Verdict m31_count(Claim const& c, EnumerationOptions const& opts) {
      constexpr std::size_t published = 15;
      auto                  g         = complete_with_ends(3, 1);
      auto                  r         = enumerate_realizations(g, opts);
      Json                  ev{{"run", report_summary("m_3_1", r)},
                               {"published_class_count", published}};
      if (r.status != SearchStatus::exhaustive) {
        return make_verdict(c, VerdictStatus::inconclusive, "enumeration did not finish", ev);
      }
      // Cross-checks independent of the search and of canonical keys.
      auto oracle = brute_force_oracle(g);
      std::vector<MulTable> reps;
      for (auto const& t : oracle) {
        bool seen = std::any_of(reps.begin(), reps.end(), [&](auto const& u) {
          return are_semigroups_isomorphic(t, u).has_value();
        });
        if (!seen) {
          reps.push_back(t);
        }
      }
      ev["oracle_labeled_count"]       = oracle.size();
      ev["oracle_isomorphism_classes"] = reps.size();
      std::size_t const computed       = r.classes.size();
      if (computed == published) {
        return make_verdict(c, VerdictStatus::pass, "15 classes, as published", ev);
      }
      ev["discrepancy"] = true;
      return make_verdict(c,
                          VerdictStatus::fail,
                          "computed " + std::to_string(computed) + " classes ("
                              + std::to_string(r.labeled_count)
                              + " labelled tables; brute force finds "
                              + std::to_string(oracle.size()) + " tables in "
                              + std::to_string(reps.size())
                              + " isomorphism classes); published count is 15",
                          ev);
    }

    Verdict same_part_ends(Claim const& c, EnumerationOptions const& opts) {
      auto g   = attach_end_vertices(complete_bipartite(2, 2), {"a1", "a2"});
      auto s   = screen(g);
      auto r   = enumerate_realizations(g, opts);
      Json ev{{"screen", to_json(s, g)}, {"run", report_summary("k22_ends_a1_a2", r)}};
      if (r.status != SearchStatus::exhaustive) {
        return make_verdict(c, VerdictStatus::inconclusive, "enumeration did not finish", ev);
      }
      bool ok = !s.diameter_le_3.pass && r.classes.empty();
      return make_verdict(c,
                          ok ? VerdictStatus::pass : VerdictStatus::fail,
                          "diameter screen " + std::string(s.diameter_le_3.pass ? "PASS" : "FAIL")
                              + ", " + std::to_string(r.classes.size()) + " classes",
                          ev);
    }

    Verdict fig35_check(Claim const& c, EnumerationOptions const& opts) {
      auto g = figure("3.5");
      auto s = screen(g);
      auto r = enumerate_realizations(g, opts);
      Json ev{{"screen", to_json(s, g)}, {"run", report_summary("fig_3_5", r)}};
      if (r.status != SearchStatus::exhaustive) {
        return make_verdict(c, VerdictStatus::inconclusive, "enumeration did not finish", ev);
      }
      bool ok = r.classes.empty();
      return make_verdict(c,
                          ok ? VerdictStatus::pass : VerdictStatus::fail,
                          std::to_string(r.classes.size()) + " classes; screen "
                              + (s.all_pass() ? "passes all conditions" : "fails"),
                          ev);
    }

    Verdict realizable_subgraphs(Claim const& c, EnumerationOptions const& opts) {
      Json runs = Json::array();
      bool ok = true, done = true;
      for (std::size_t k = 0; k <= 3; ++k) {
        auto r = enumerate_realizations(complete_with_ends(3, k), opts);
        runs.push_back(report_summary("m_3_" + std::to_string(k), r));
        done = done && r.status == SearchStatus::exhaustive;
        ok   = ok && !r.classes.empty();
      }
      auto status = ok ? VerdictStatus::pass : done ? VerdictStatus::fail : VerdictStatus::inconclusive;
      return make_verdict(c, status, "each of M_{3,0..3} has a realization", Json{{"runs", runs}});
    }

    Verdict at_least_two(Claim const& c, EnumerationOptions const& opts) {
      auto r = enumerate_realizations(complete_graph(3), opts);
      Json ev{{"run", report_summary("k_3", r)}};
      if (r.classes.size() >= 2) {
        return make_verdict(c,
                            VerdictStatus::pass,
                            std::to_string(r.classes.size()) + " classes",
                            ev);
      }
      return make_verdict(c,
                          r.status == SearchStatus::exhaustive ? VerdictStatus::fail
                                                               : VerdictStatus::inconclusive,
                          std::to_string(r.classes.size()) + " classes",
                          ev);
    }

    Graph singleton() {
      return empty_block(1);
    }

    std::vector<Claim> build_registry() {
      constexpr double minutes = 60;
      std::vector<Claim> reg{
          {"cor2.4",
           "the five-vertex graph (triangle sharing an edge with a square) has a "
           "unique semigroup, equal to the published table",
           "fast",
           "PAPER",
           10,
           fixture_match_check("fig_2_4",
                               [] { return figure("2.4"); },
                               [] { return std::vector{fixtures::cor_2_4_table()}; })},
          {"cor3.2-fig33",
           "figure 3.3 generalization of M_4 has no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"fig_3_3", [] { return figure("3.3"); }}}, 0)},
          {"cor3.2-fig34",
           "figure 3.4 generalization of M_4 has no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"fig_3_4", [] { return figure("3.4"); }}}, 0)},
          {"cor3.2-m44",
           "K_4 with four end vertices has no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"m_4_4", [] { return complete_with_ends(4, 4); }}}, 0)},
          {"cor3.2-m54",
           "K_5 with four end vertices has no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"m_5_4", [] { return complete_with_ends(5, 4); }}}, 0)},
          {"cor3.4-fig35",
           "figure 3.5 (K_{2,2} with end vertices on both parts) has no semigroup "
           "although it passes every screening condition",
           "fast",
           "PAPER",
           10 * minutes,
           fig35_check},
          {"cor3.4-k23",
           "K_{2,3} with end vertices on distinct parts has no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"h_2_3",
                               [] { return h_mn_family(2, 3, singleton(), singleton()); }}},
                             0)},
          {"cor3.4-same-part",
           "K_{2,2} with two end vertices on one part has diameter 4 and no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           same_part_ends},
          {"ex2.1-props",
           "gamma_n vertex and edge counts, degrees, diameter, clique number, end "
           "vertices and automorphism group order",
           "fast",
           "PAPER",
           60,
           gamma_properties},
          {"fixtures",
           "published tables are valid, associative, realize their graphs and are "
           "pairwise non-isomorphic",
           "fast",
           "PAPER",
           10,
           fixture_self_check},
          {"m30-multi",
           "K_3 has at least two non-isomorphic semigroups",
           "fast",
           "PAPER",
           60,
           at_least_two},
          {"rem-m31",
           "K_3 with one end vertex has fifteen non-isomorphic semigroups",
           "fast",
           "PAPER",
           60,
           m31_count},
          {"rem3-mn2-n4",
           "K_4 with two end vertices has a unique semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"m_4_2", [] { return complete_with_ends(4, 2); }}}, 1)},
          {"rem3-mn2-n5",
           "K_5 with two end vertices has a unique semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"m_5_2", [] { return complete_with_ends(5, 2); }}}, 1)},
          {"rem3-mn3-n4",
           "K_4 with three end vertices has no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"m_4_3", [] { return complete_with_ends(4, 3); }}}, 0)},
          {"rem3-mn3-n5",
           "K_5 with three end vertices has no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check({{"m_5_3", [] { return complete_with_ends(5, 3); }}}, 0)},
          {"thm2.2-n3",
           "gamma_3 has a unique semigroup, the power-set semigroup",
           "fast",
           "PAPER",
           60,
           [](Claim const& c, EnumerationOptions const& o) {
             return uniqueness_gamma(c, o, 3);
           }},
          {"thm2.2-n4",
           "gamma_4 has a unique semigroup, the power-set semigroup",
           "stretch",
           "PAPER",
           4 * 60 * minutes,
           [](Claim const& c, EnumerationOptions const& o) {
             return uniqueness_gamma(c, o, 4);
           }},
          {"thm2.3",
           "K_3 with end vertices on a1, a2 has exactly the three published tables",
           "fast",
           "PAPER",
           10,
           fixture_match_check("m_3_2",
                               [] { return complete_with_ends(3, 2); },
                               [] {
                                 return std::vector{fixtures::table_2_1(),
                                                    fixtures::table_2_2(),
                                                    fixtures::table_2_3()};
                               })},
          {"thm2.3-realizable",
           "each subgraph of gamma_3 containing K_3 is realizable",
           "fast",
           "PAPER",
           60,
           realizable_subgraphs},
          {"thm3.1-gen",
           "L_n instances with a two-vertex block have no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check(
               {{"l_4_x1_edge",
                 [] {
                   return l_n_family(
                       4, {complete_block(2), singleton(), singleton(), singleton()});
                 }},
                {"l_4_x1_pair",
                 [] {
                   return l_n_family(4,
                                     {empty_block(2), singleton(), singleton(), singleton()});
                 }},
                {"l_5_x5_empty",
                 [] {
                   return l_n_family(
                       5, {complete_block(2), singleton(), singleton(), singleton(), Graph{}});
                 }}},
               0)},
          {"thm3.3-gen",
           "H_{m,n} instances with two-vertex blocks have no semigroup",
           "fast",
           "PAPER",
           10 * minutes,
           class_count_check(
               {{"h_2_2_x_edge",
                 [] { return h_mn_family(2, 2, complete_block(2), singleton()); }},
                {"h_2_2_x_pair",
                 [] { return h_mn_family(2, 2, empty_block(2), singleton()); }},
                {"h_3_2", [] { return h_mn_family(3, 2, singleton(), singleton()); }}},
               0)},
      };
      std::sort(reg.begin(), reg.end(), [](auto const& a, auto const& b) { return a.id < b.id; });
      return reg;
    }
  }  // namespace

  std::vector<Claim> const& claim_registry() {
    static std::vector<Claim> const reg = build_registry();
    return reg;
  }

  namespace {
    Verdict run_claim(Claim const& c, VerifyOptions const& opts) {
      EnumerationOptions eo;
      eo.timeout_seconds = opts.budget_seconds.value_or(c.budget_seconds);
      eo.threads         = opts.threads;
      auto const start   = std::chrono::steady_clock::now();
      Verdict    v       = c.check(c, eo);
      v.wall_seconds     = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      v.evidence["description"] = c.description;
      return v;
    }
  }  // namespace

  Verdict verify_claim(std::string_view id, VerifyOptions const& opts) {
    for (auto const& c : claim_registry()) {
      if (c.id == id) {
        return run_claim(c, opts);
      }
    }
    throw std::out_of_range("unknown claim \"" + std::string(id) + "\"");
  }

  std::vector<Verdict> verify_all(std::optional<std::string> const& tag,
                                  VerifyOptions const&              opts) {
    std::vector<Verdict> out;
    for (auto const& c : claim_registry()) {
      if (!tag || c.tag == *tag) {
        out.push_back(run_claim(c, opts));
      }
    }
    return out;
  }

  Json to_json(Verdict const& v, bool deterministic) {
    Json out{{"claim", v.id},
             {"verdict", std::string(to_string(v.status))},
             {"provenance", v.provenance},
             {"summary", v.summary},
             {"evidence", v.evidence}};
    if (!deterministic) {
      out["wall_time_seconds"] = v.wall_seconds;
    }
    return out;
  }

}  // namespace zdr
