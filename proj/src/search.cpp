#include "zdr/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "zdr/automorphism.hpp"
#include "zdr/metrics.hpp"

namespace zdr {

  std::string_view to_string(SearchStatus s) {
    switch (s) {
      case SearchStatus::exhaustive:
        return "EXHAUSTIVE";
      case SearchStatus::limit_reached:
        return "LIMIT_REACHED";
      case SearchStatus::timeout:
        return "TIMEOUT";
    }
    return "?";
  }

  std::vector<std::string> element_labels(Graph const& g) {
    std::vector<std::string> out{"0"};
    out.insert(out.end(), g.labels().begin(), g.labels().end());
    return out;
  }

  namespace {
    using Mask    = std::uint64_t;
    using CellId  = std::uint16_t;
    using Domains = std::vector<Mask>;
    using Clock   = std::chrono::steady_clock;

    constexpr Mask bit(std::size_t e) {
      return Mask(1) << e;
    }

    template <typename F>
    void for_each_bit(Mask m, F&& f) {
      while (m != 0) {
        f(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
      }
    }

    constexpr std::uint64_t check_interval = 4096;
    constexpr std::size_t   target_tasks   = 64;

    // One variable per unordered pair of elements. Cells touching 0 and
    // edge cells are fixed from the start.
    struct Problem {
      Graph const&             graph;
      std::size_t              n;  // number of elements including 0
      std::vector<CellId>      cell_of;
      std::vector<Edge>        cell_pairs;
      Domains                  initial;
      std::vector<CellId>      order;  // static branching order
      std::vector<std::array<Element, 3>> triples;
      std::vector<std::string> labels;
      bool                     propagate;

      Problem(Graph const& g, bool prop)
          : graph(g),
            n(g.size() + 1),
            cell_of(n * n),
            labels(element_labels(g)),
            propagate(prop) {
        Mask const all = n == 64 ? ~Mask(0) : bit(n) - 1;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) {
            auto id         = static_cast<CellId>(cell_pairs.size());
            cell_of[i * n + j] = id;
            cell_of[j * n + i] = id;
            cell_pairs.emplace_back(i, j);
            Mask d;
            if (i == 0) {
              d = bit(0);
            } else if (i == j) {
              d = all;
            } else if (g.adjacent(i - 1, j - 1)) {
              d = bit(0);
            } else {
              d = all & ~bit(0);
            }
            initial.push_back(d);
          }
        }
        build_order();
        for (Element x = 1; x < n; ++x) {
          for (Element y = 1; y < n; ++y) {
            // (xy)z = x(yz) and (zy)x = z(yx) coincide under commutativity.
            for (Element z = x; z < n; ++z) {
              triples.push_back({x, y, z});
            }
          }
        }
      }

      [[nodiscard]] CellId cell(std::size_t i, std::size_t j) const {
        return cell_of[i * n + j];
      }

      // Off-diagonal free cells by descending endpoint degree sum; each
      // diagonal cell directly after the last free off-diagonal cell of its
      // vertex (first, if it has none).
      void build_order() {
        std::vector<CellId> off;
        std::vector<std::size_t> remaining(n, 0);
        for (std::size_t id = 0; id < cell_pairs.size(); ++id) {
          auto [i, j] = cell_pairs[id];
          if (i != 0 && i != j && std::popcount(initial[id]) > 1) {
            off.push_back(static_cast<CellId>(id));
            ++remaining[i];
            ++remaining[j];
          }
        }
        auto degsum = [&](CellId id) {
          auto [i, j] = cell_pairs[id];
          return graph.degree(i - 1) + graph.degree(j - 1);
        };
        std::stable_sort(off.begin(), off.end(), [&](CellId a, CellId b) {
          return degsum(a) > degsum(b);
        });
        std::vector<std::size_t> lonely;
        for (std::size_t v = 1; v < n; ++v) {
          if (remaining[v] == 0) {
            lonely.push_back(v);
          }
        }
        std::stable_sort(lonely.begin(), lonely.end(), [&](auto a, auto b) {
          return graph.degree(a - 1) > graph.degree(b - 1);
        });
        for (auto v : lonely) {
          order.push_back(cell(v, v));
        }
        for (CellId id : off) {
          order.push_back(id);
          auto [i, j] = cell_pairs[id];
          for (auto v : {i, j}) {
            if (--remaining[v] == 0) {
              order.push_back(cell(v, v));
            }
          }
        }
      }

      // Returns false on a wipe-out. For each triple, values of xy, yz and
      // of the cells (xy)z, x(yz) without a common support are removed.
      bool propagate_all(Domains& d) const {
        bool changed = true;
        while (changed) {
          changed = false;
          for (auto const& [x, y, z] : triples) {
            CellId const cxy = cell(x, y), cyz = cell(y, z);
            Mask         lhs = 0, rhs = 0;
            for_each_bit(d[cxy], [&](std::size_t p) { lhs |= d[cell(p, z)]; });
            for_each_bit(d[cyz], [&](std::size_t q) { rhs |= d[cell(x, q)]; });
            Mask const common = lhs & rhs;
            if (common == 0) {
              return false;
            }
            Mask a = 0;
            for_each_bit(d[cxy], [&](std::size_t p) {
              if (d[cell(p, z)] & common) {
                a |= bit(p);
              }
            });
            if (a != d[cxy]) {
              d[cxy]  = a;
              changed = true;
            }
            Mask b = 0;
            for_each_bit(d[cyz], [&](std::size_t q) {
              if (d[cell(x, q)] & common) {
                b |= bit(q);
              }
            });
            if (b == 0) {
              return false;
            }
            if (b != d[cyz]) {
              d[cyz]  = b;
              changed = true;
            }
            if (std::has_single_bit(d[cxy])) {
              auto  p  = static_cast<std::size_t>(std::countr_zero(d[cxy]));
              Mask& pz = d[cell(p, z)];
              if ((pz & common) != pz) {
                pz &= common;
                changed = true;
                if (pz == 0) {
                  return false;
                }
              }
            }
            if (std::has_single_bit(d[cyz])) {
              auto  q  = static_cast<std::size_t>(std::countr_zero(d[cyz]));
              Mask& xq = d[cell(x, q)];
              if ((xq & common) != xq) {
                xq &= common;
                changed = true;
                if (xq == 0) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      // Smallest open domain, ties broken by the static order; nullopt at a
      // leaf.
      [[nodiscard]] std::optional<CellId> choose(Domains const& d) const {
        std::optional<CellId> best;
        int                   best_size = 0;
        for (CellId id : order) {
          int s = std::popcount(d[id]);
          if (s > 1 && (!best || s < best_size)) {
            best      = id;
            best_size = s;
            if (s == 2) {
              break;
            }
          }
        }
        return best;
      }

      [[nodiscard]] MulTable table(Domains const& d) const {
        std::vector<std::vector<Element>> product(n, std::vector<Element>(n));
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            product[i][j]
                = static_cast<Element>(std::countr_zero(d[cell(i, j)]));
          }
        }
        return MulTable(labels, std::move(product));
      }
    };

    struct Shared {
      std::optional<Clock::time_point> deadline;
      std::optional<std::size_t>       limit;
      std::atomic<bool>                stop{false};
      std::atomic<bool>                timed_out{false};
      std::atomic<bool>                limit_hit{false};
      std::atomic<std::size_t>         found{0};
    };

    struct Worker {
      Problem const&        problem;
      Shared&               shared;
      std::vector<MulTable> solutions;
      SearchStats           stats;

      void tick() {
        ++stats.nodes_explored;
        if (stats.nodes_explored % check_interval == 0 && shared.deadline
            && Clock::now() >= *shared.deadline) {
          shared.timed_out = true;
          shared.stop      = true;
        }
      }

      void leaf(Domains const& d) {
        ++stats.leaves_checked;
        auto t = problem.table(d);
        if (!validate(t).empty() || is_associative(t)
            || !(zero_divisor_graph(t) == problem.graph)) {
          ++stats.leaf_rejections;
          return;
        }
        if (shared.limit) {
          auto before = shared.found.fetch_add(1);
          if (before >= *shared.limit) {
            shared.limit_hit = true;
            shared.stop      = true;
            return;
          }
          if (before + 1 == *shared.limit) {
            shared.limit_hit = true;
            shared.stop      = true;
          }
        }
        solutions.push_back(std::move(t));
      }

      // Children of d, each already counted and propagated.
      template <typename F>
      void branch(Domains const& d, CellId id, F&& visit) {
        for_each_bit(d[id], [&](std::size_t v) {
          if (shared.stop.load(std::memory_order_relaxed)) {
            return;
          }
          tick();
          Domains child = d;
          child[id]     = bit(v);
          if (!problem.propagate || problem.propagate_all(child)) {
            visit(std::move(child));
          }
        });
      }

      void explore(Domains const& d) {
        if (shared.stop.load(std::memory_order_relaxed)) {
          return;
        }
        auto id = problem.choose(d);
        if (!id) {
          leaf(d);
          return;
        }
        branch(d, *id, [&](Domains child) { explore(child); });
      }
    };
  }  // namespace

  EnumerationReport enumerate_realizations(Graph const&              g,
                                           EnumerationOptions const& opts) {
    auto const start = Clock::now();
    if (g.size() < 2) {
      throw GraphError("enumeration needs at least two vertices");
    }
    if (g.size() > max_search_vertices) {
      throw GraphError("enumeration supports at most "
                       + std::to_string(max_search_vertices) + " vertices");
    }
    if (g.find("0")) {
      throw GraphError("vertex label \"0\" is reserved for the zero element");
    }
    require_connected(g);

    EnumerationReport report;
    report.graph   = g;
    report.options = opts;
    Problem const     problem(g, opts.propagate);
    Shared            shared;
    shared.limit = opts.limit;
    if (opts.timeout_seconds) {
      shared.deadline
          = start
            + std::chrono::duration_cast<Clock::duration>(
                std::chrono::duration<double>(*opts.timeout_seconds));
    }

    // Breadth-first expansion to a fixed frontier, independent of the
    // worker count so that node counts are reproducible.
    Worker               front{problem, shared, {}, {}};
    std::vector<Domains> tasks;
    {
      Domains root = problem.initial;
      ++front.stats.nodes_explored;
      if (!problem.propagate || problem.propagate_all(root)) {
        tasks.push_back(std::move(root));
      }
      bool expandable = true;
      while (expandable && tasks.size() < target_tasks && !shared.stop) {
        expandable = false;
        std::vector<Domains> next;
        for (auto const& d : tasks) {
          auto id = problem.choose(d);
          if (!id) {
            next.push_back(d);
            continue;
          }
          expandable = true;
          front.branch(
              d, *id, [&](Domains child) { next.push_back(std::move(child)); });
        }
        tasks = std::move(next);
      }
    }

    unsigned const      nr_threads = std::max(1u, opts.threads);
    std::vector<Worker> workers;
    for (unsigned i = 0; i < nr_threads; ++i) {
      workers.push_back(Worker{problem, shared, {}, {}});
    }
    std::atomic<std::size_t> next_task{0};
    auto                     run = [&](Worker& w) {
      for (std::size_t t; (t = next_task.fetch_add(1)) < tasks.size();) {
        w.explore(tasks[t]);
      }
    };
    if (nr_threads == 1) {
      run(workers[0]);
    } else {
      std::vector<std::thread> pool;
      for (auto& w : workers) {
        pool.emplace_back(run, std::ref(w));
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    std::vector<MulTable> solutions;
    report.stats = front.stats;
    for (auto& w : workers) {
      report.stats.nodes_explored += w.stats.nodes_explored;
      report.stats.leaves_checked += w.stats.leaves_checked;
      report.stats.leaf_rejections += w.stats.leaf_rejections;
      for (auto& t : w.solutions) {
        solutions.push_back(std::move(t));
      }
    }
    report.stats.tasks = tasks.size();
    report.status      = shared.timed_out   ? SearchStatus::timeout
                         : shared.limit_hit ? SearchStatus::limit_reached
                                            : SearchStatus::exhaustive;
    std::sort(solutions.begin(), solutions.end(), [](auto const& a, auto const& b) {
      return a.serialize() < b.serialize();
    });
    report.labeled_count = solutions.size();

    if (opts.dedup) {
      auto const autos         = automorphisms(g);
      report.automorphism_count = autos.size();
      std::map<std::string, RealizationClass> classes;
      for (auto const& t : solutions) {
        auto key = canonical_key(t, autos);
        if (classes.contains(key)) {
          continue;
        }
        std::set<std::string> orbit;
        MulTable              rep = t;
        for (auto const& a : autos) {
          auto image = relabel(t, a);
          if (image.serialize() == key) {
            rep = image;
          }
          orbit.insert(image.serialize());
        }
        classes.emplace(key, RealizationClass{rep, orbit.size(), key});
      }
      for (auto& [key, c] : classes) {
        report.classes.push_back(std::move(c));
      }
    } else {
      for (auto& t : solutions) {
        auto key = t.serialize();
        report.classes.push_back(RealizationClass{std::move(t), 1, std::move(key)});
      }
    }
    report.wall_seconds
        = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
  }

  std::vector<MulTable> brute_force_oracle(Graph const& g) {
    if (g.size() > 4) {
      throw GraphError("brute-force oracle supports at most 4 vertices");
    }
    std::size_t const n = g.size() + 1;
    std::vector<Edge> free_cells;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (i == j || !g.adjacent(i - 1, j - 1)) {
          free_cells.emplace_back(i, j);
        }
      }
    }
    auto const                        labels = element_labels(g);
    std::vector<std::vector<Element>> product(n, std::vector<Element>(n, 0));
    std::vector<Element>              digits(free_cells.size(), 0);
    std::vector<MulTable>             out;
    while (true) {
      for (std::size_t k = 0; k < free_cells.size(); ++k) {
        auto [i, j]   = free_cells[k];
        product[i][j] = digits[k];
        product[j][i] = digits[k];
      }
      MulTable t(labels, product);
      if (validate(t).empty() && !is_associative(t)
          && zero_divisor_graph(t) == g) {
        out.push_back(std::move(t));
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == n) {
        digits[k++] = 0;
      }
      if (k == digits.size()) {
        break;
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.serialize() < b.serialize();
    });
    return out;
  }

}  // namespace zdr
