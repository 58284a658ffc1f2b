#include "zdr/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "zdr/families.hpp"
#include "zdr/io.hpp"
#include "zdr/screen.hpp"
#include "zdr/search.hpp"
#include "zdr/semigroup.hpp"
#include "zdr/verify.hpp"

namespace zdr::cli {

  namespace {
    // Thrown for bad family parameters; reported like malformed input.
    struct UsageError : std::invalid_argument {
      using std::invalid_argument::invalid_argument;
    };

    std::optional<double> env_timeout() {
      char const* s = std::getenv("ZDR_TIMEOUT_SECS");
      if (s == nullptr || *s == '\0') {
        return std::nullopt;
      }
      char*  end = nullptr;
      double v   = std::strtod(s, &end);
      if (*end != '\0' || !(v > 0)) {
        throw UsageError("ZDR_TIMEOUT_SECS: expected a positive number, got \""
                         + std::string(s) + "\"");
      }
      return v;
    }

    std::size_t number(std::string const& s, std::string const& what) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
        throw UsageError(what + ": expected a non-negative integer, got \"" + s + "\"");
      }
      return std::stoul(s);
    }

    // "N" is N isolated vertices, "kN" a complete block on N vertices.
    Graph block(std::string const& s) {
      if (!s.empty() && s[0] == 'k') {
        return complete_block(number(s.substr(1), "block"));
      }
      return empty_block(number(s, "block"));
    }

    Json read_doc(std::string const& path, std::istream& in) {
      if (path != "-") {
        return read_json_file(path);
      }
      try {
        return Json::parse(in);
      } catch (nlohmann::json::parse_error const& e) {
        throw FormatError("<stdin>: byte " + std::to_string(e.byte) + ": " + e.what());
      }
    }

    Graph read_graph(std::string const& path, std::istream& in) {
      try {
        return graph_from_json(read_doc(path, in));
      } catch (FormatError const& e) {
        std::string what = e.what();
        std::string name = path == "-" ? "<stdin>" : path;
        if (what.rfind(name, 0) == 0) {
          throw;
        }
        throw FormatError(name + ": " + what);
      }
    }

    MulTable read_table(std::string const& path, std::istream& in) {
      try {
        return table_from_json(read_doc(path, in));
      } catch (FormatError const& e) {
        std::string what = e.what();
        std::string name = path == "-" ? "<stdin>" : path;
        if (what.rfind(name, 0) == 0) {
          throw;
        }
        throw FormatError(name + ": " + what);
      }
    }

    Graph generate(std::string const& family, std::vector<std::string> const& p) {
      auto need = [&](std::size_t k) {
        if (p.size() != k) {
          throw UsageError(family + ": expected " + std::to_string(k)
                           + " parameter(s), got " + std::to_string(p.size()));
        }
      };
      if (family == "kn") {
        need(1);
        return complete_graph(number(p[0], "n"));
      }
      if (family == "kmn") {
        need(2);
        return complete_bipartite(number(p[0], "m"), number(p[1], "n"));
      }
      if (family == "gamma_n") {
        need(1);
        auto n = number(p[0], "n");
        if (n < 2 || n > 16) {
          throw UsageError("gamma_n: n must be between 2 and 16");
        }
        return gamma_n(n);
      }
      if (family == "m_nk") {
        need(2);
        return complete_with_ends(number(p[0], "n"), number(p[1], "k"));
      }
      if (family == "l_n") {
        if (p.empty()) {
          throw UsageError("l_n: expected n followed by n block specs");
        }
        auto               n = number(p[0], "n");
        std::vector<Graph> blocks;
        for (std::size_t i = 1; i < p.size(); ++i) {
          blocks.push_back(block(p[i]));
        }
        return l_n_family(n, blocks);
      }
      if (family == "h_mn") {
        need(4);
        return h_mn_family(number(p[0], "m"), number(p[1], "n"), block(p[2]), block(p[3]));
      }
      if (family == "fig") {
        need(1);
        auto names = figure_names();
        if (std::find(names.begin(), names.end(), p[0]) == names.end()) {
          std::string list;
          for (auto const& n : names) {
            list += (list.empty() ? "" : ", ") + n;
          }
          throw UsageError("fig: unknown figure \"" + p[0] + "\" (known: " + list + ")");
        }
        return figure(p[0]);
      }
      throw UsageError("unknown family \"" + family
                       + "\" (kn, kmn, gamma_n, m_nk, l_n, h_mn, fig)");
    }

    struct Sink {
      std::ostream& out;
      std::ofstream file;

      Sink(std::ostream& o, std::string const& path) : out(o) {
        if (!path.empty()) {
          file.open(path);
          if (!file) {
            throw UsageError(path + ": cannot open for writing");
          }
        }
      }
      std::ostream& stream() {
        return file.is_open() ? file : out;
      }
    };
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Zero-divisor graphs and the commutative semigroups realizing them", "zdr"};
    app.require_subcommand(1);

    std::string family, format = "json", output;
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("generate", "Write a graph from a family");
    gen->add_option("family", family, "kn, kmn, gamma_n, m_nk, l_n, h_mn or fig")->required();
    gen->add_option("params", params,
                    "Family parameters; blocks are N (isolated) or kN (complete)");
    gen->add_option("--format", format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    gen->add_option("-o,--output", output, "Output file");

    std::string                path, path2;
    bool                       no_dedup = false, no_propagate = false, deterministic = false;
    std::optional<std::size_t> limit;
    std::optional<double>      timeout;
    unsigned                   threads = 1;
    auto* en = app.add_subcommand("enumerate", "Enumerate the semigroups realizing a graph");
    en->add_option("graph", path, "Graph JSON, - for stdin")->required();
    en->add_flag("--no-dedup", no_dedup, "Report every labelled table");
    en->add_option("--limit", limit, "Stop after N labelled tables")->check(CLI::PositiveNumber);
    en->add_option("--timeout", timeout, "Seconds")->check(CLI::PositiveNumber);
    en->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    en->add_flag("--no-propagate", no_propagate, "Check leaves only");
    en->add_flag("--deterministic", deterministic, "Omit wall time");
    en->add_option("-o,--output", output, "Output file");

    auto* sc = app.add_subcommand("screen", "Check necessary conditions for realizability");
    sc->add_option("graph", path, "Graph JSON, - for stdin")->required();

    std::optional<std::string> claim, tag;
    std::optional<double>      budget;
    bool                       list_claims = false;
    auto* ve = app.add_subcommand("verify", "Check registered claims");
    ve->add_option("--claim", claim, "Claim id");
    ve->add_option("--tag", tag, "fast, slow or stretch")
        ->check(CLI::IsMember({"fast", "slow", "stretch"}));
    ve->add_option("--budget", budget, "Seconds per claim, replacing each claim's own")
        ->check(CLI::PositiveNumber);
    ve->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    ve->add_flag("--deterministic", deterministic, "Omit wall time");
    ve->add_flag("--list", list_claims, "List claim ids");

    auto* is = app.add_subcommand("iso", "Test two tables for isomorphism");
    is->add_option("t1", path, "Table JSON")->required();
    is->add_option("t2", path2, "Table JSON")->required();

    bool as_graph = false;
    auto* ex = app.add_subcommand("export", "Print a table, or its zero-divisor graph");
    ex->add_option("table", path, "Table JSON, - for stdin")->required();
    ex->add_flag("--graph", as_graph, "Print the zero-divisor graph");
    ex->add_option("--format", format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    ex->add_option("-o,--output", output, "Output file");

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "zdr: " << e.what() << '\n';
      return exit_bad_input;
    }

    try {
      if (gen->parsed()) {
        auto g = generate(family, params);
        Sink s(out, output);
        if (format == "dot") {
          s.stream() << to_dot(g);
        } else if (format == "text") {
          s.stream() << to_text(g);
        } else {
          s.stream() << to_json(g).dump(2) << '\n';
        }
        return exit_ok;
      }

      if (en->parsed()) {
        auto               g = read_graph(path, in);
        EnumerationOptions opts;
        opts.limit           = limit;
        opts.timeout_seconds = timeout ? timeout : env_timeout();
        opts.dedup           = !no_dedup;
        opts.threads         = threads;
        opts.propagate       = !no_propagate;
        auto r               = enumerate_realizations(g, opts);
        Sink s(out, output);
        s.stream() << to_json(r, deterministic).dump(2) << '\n';
        err << "zdr: " << to_string(r.status) << ", " << r.labeled_count << " labelled, "
            << r.classes.size() << " classes, " << r.stats.nodes_explored << " nodes";
        if (!deterministic) {
          err << ", " << r.wall_seconds << " s";
        }
        err << '\n';
        switch (r.status) {
          case SearchStatus::exhaustive:
            return exit_ok;
          case SearchStatus::timeout:
            return exit_timeout;
          case SearchStatus::limit_reached:
            return exit_limit;
        }
      }

      if (sc->parsed()) {
        auto g = read_graph(path, in);
        auto r = screen(g);
        out << to_json(r, g).dump(2) << '\n';
        return r.all_pass() ? exit_ok : exit_unrealizable;
      }

      if (ve->parsed()) {
        if (list_claims) {
          for (auto const& c : claim_registry()) {
            out << c.id << '\t' << c.tag << '\t' << c.description << '\n';
          }
          return exit_ok;
        }
        VerifyOptions vo;
        vo.budget_seconds = budget ? budget : env_timeout();
        vo.threads        = threads;
        std::vector<Verdict> verdicts;
        if (claim) {
          verdicts.push_back(verify_claim(*claim, vo));
        } else {
          for (auto const& c : claim_registry()) {
            if (tag && c.tag != *tag) {
              continue;
            }
            err << "zdr: " << c.id << " ..." << std::flush;
            verdicts.push_back(verify_claim(c.id, vo));
            err << ' ' << to_string(verdicts.back().status) << '\n';
          }
        }
        bool failed = false;
        for (auto const& v : verdicts) {
          out << to_json(v, deterministic).dump() << '\n';
          failed = failed || v.status == VerdictStatus::fail;
        }
        return failed ? exit_failure : exit_ok;
      }

      if (is->parsed()) {
        auto t1 = read_table(path, in);
        auto t2 = read_table(path2, in);
        auto p  = are_semigroups_isomorphic(t1, t2);
        Json j{{"isomorphic", p.has_value()}};
        if (p) {
          Json m = Json::object();
          for (Element x = 0; x < t1.size(); ++x) {
            m[t1.label(x)] = t2.label(static_cast<Element>((*p)[x]));
          }
          j["mapping"] = m;
        }
        out << j.dump(2) << '\n';
        return p ? exit_ok : exit_failure;
      }

      if (ex->parsed()) {
        auto t = read_table(path, in);
        Sink s(out, output);
        if (as_graph) {
          auto bad = validate(t);
          if (!bad.empty()) {
            throw FormatError(path + ": " + bad.front().message);
          }
          auto g = zero_divisor_graph(t);
          if (format == "dot") {
            s.stream() << to_dot(g);
          } else if (format == "text") {
            s.stream() << to_text(g);
          } else {
            s.stream() << to_json(g).dump(2) << '\n';
          }
        } else if (format == "text") {
          s.stream() << to_text(t);
        } else {
          s.stream() << to_json(t).dump(2) << '\n';
        }
        return exit_ok;
      }
    } catch (FormatError const& e) {
      err << "zdr: " << e.what() << '\n';
      return exit_bad_input;
    } catch (std::invalid_argument const& e) {
      err << "zdr: " << e.what() << '\n';
      return exit_bad_input;
    } catch (std::out_of_range const& e) {
      err << "zdr: " << e.what() << '\n';
      return exit_bad_input;
    }
    return exit_failure;
  }

}  // namespace zdr::cli
