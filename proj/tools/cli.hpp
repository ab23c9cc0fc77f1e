#pragma once

// Command-line front end. Kept in a header so tests can drive run()
// in-process with captured streams.

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irrstrength.hpp"

namespace irrstrength::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kIo = 3;

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_edge_list(in);
}

inline Certificate load_certificate(const std::string& path) {
  return parse_certificate(slurp(path));
}

// Writes to `path`, or to `out` when no path was given.
inline void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot write '" + path + "'");
  file << text;
  if (!file) throw io_error("write failed for '" + path + "'");
}

inline std::string oracle_cell(const StrengthResult& r) {
  switch (r.outcome) {
    case Outcome::finite: return std::to_string(r.k);
    case Outcome::infinite: return "inf";
    case Outcome::unknown: return "?";
  }
  return "?";
}

}  // namespace detail

struct Options {
  std::size_t n = 1;
  int theorem = 1;
  std::string out;
  std::string graph;
  std::string cert;
  std::string labeling_mode;
  std::string strength_mode;
  Label k_max = 16;
  unsigned threads = 1;
  bool count = false;
  std::size_t from = 1;
  std::size_t to = 1;
  std::size_t oracle_upto = 0;
  std::string format = "dot";
};

// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irregular and modular irregular edge labelings"};
  Options o;
  if (const char* env = std::getenv("IRRSTRENGTH_THREADS"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoul(env, &used);
      if (used != std::strlen(env) || value < 1 || value > 4096) throw std::out_of_range(env);
      o.threads = static_cast<unsigned>(value);
    } catch (const std::exception&) {
      err << "error: IRRSTRENGTH_THREADS must be a positive integer, got '" << env << "'\n";
      return kUsage;
    }
  }
  app.name("irrstrength");
  app.require_subcommand(1);

  auto* book_cmd = app.add_subcommand("book", "Print the triangular book B_n as an edge list");
  book_cmd->add_option("--n", o.n, "Number of pages")->required()->check(CLI::PositiveNumber);
  book_cmd->add_option("--out", o.out, "Output file (default stdout)");

  auto* label_cmd = app.add_subcommand("label", "Emit the closed-form labeling of B_n as a certificate");
  label_cmd->add_option("--n", o.n, "Number of pages")->required()->check(CLI::PositiveNumber);
  label_cmd->add_option("--theorem", o.theorem, "1: irregular, 2: modular")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  label_cmd->add_option("--out", o.out, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  verify_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
  verify_cmd->add_option("--cert", o.cert, "Certificate JSON file")->required();
  verify_cmd->add_option("--mode", o.labeling_mode, "irregular|modular")
      ->required()
      ->check(CLI::IsMember({"irregular", "modular"}));

  auto* bound_cmd = app.add_subcommand("bound", "Print lower bounds and the modular infinity verdict");
  bound_cmd->add_option("--graph", o.graph, "Edge-list file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Compute s or ms exactly");
  solve_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
  solve_cmd->add_option("--mode", o.strength_mode, "s|ms")
      ->required()
      ->check(CLI::IsMember({"s", "ms"}));
  solve_cmd->add_option("--kmax", o.k_max, "Search ceiling")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--count", o.count, "Count all labelings at the minimal k");

  auto* table_cmd = app.add_subcommand("table", "Tabulate s and ms of B_n");
  table_cmd->add_option("--from", o.from, "First n")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--to", o.to, "Last n")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--oracle-upto", o.oracle_upto,
                        "Also solve exactly for n up to this value");
  table_cmd->add_option("--threads", o.threads, "Worker threads for the oracle")
      ->check(CLI::PositiveNumber);

  auto* export_cmd = app.add_subcommand("export", "Render a certificate");
  export_cmd->add_option("--cert", o.cert, "Certificate JSON file")->required();
  export_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"dot"}));
  export_cmd->add_option("--out", o.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*book_cmd) {
      std::ostringstream text;
      write_edge_list(text, make_triangular_book({o.n}));
      detail::emit(o.out, out, text.str());
      return kOk;
    }

    if (*label_cmd) {
      const auto g = make_triangular_book({o.n});
      if (o.theorem == 1) {
        auto cert = make_certificate(g, book::theorem1_labeling(o.n), LabelingMode::irregular);
        detail::emit(o.out, out, to_json(cert) + "\n");
        return kOk;
      }
      auto f = book::theorem2_labeling(o.n);
      if (!f) {
        err << "error: B_" << o.n << " has no modular irregular labeling (order "
            << o.n + 2 << " is 2 mod 4)\n";
        return kFailed;
      }
      auto cert = make_certificate(g, std::move(*f), LabelingMode::modular);
      detail::emit(o.out, out, to_json(cert) + "\n");
      return kOk;
    }

    if (*verify_cmd) {
      const auto g = detail::load_graph(o.graph);
      const auto cert = detail::load_certificate(o.cert);
      if (!(cert.graph == g)) {
        err << "fail: certificate graph differs from " << o.graph << '\n';
        return kFailed;
      }
      if (!profile_matches(cert)) {
        err << "fail: stored weights do not match the labeling\n";
        return kFailed;
      }
      const auto mode = parse_labeling_mode(o.labeling_mode);
      const auto verdict = verify(g, cert.labeling, mode);
      if (verdict) {
        out << "ok\n";
        return kOk;
      }
      const auto [u, v] = *verdict.collision;
      err << "fail: "
          << (mode == LabelingMode::irregular ? "duplicate-weight(" : "residue-collision(")
          << u << ',' << v << ")\n";
      return kFailed;
    }

    if (*bound_cmd) {
      const auto g = detail::load_graph(o.graph);
      const auto report = bound_report(g);
      out << "lower_bound_s " << report.eq1 << '\n'
          << "modular_infinite " << (report.ms_infinite ? "true" : "false") << '\n'
          << "lower_bound_ms " << lower_bound_ms(g) << '\n';
      return kOk;
    }

    if (*solve_cmd) {
      const auto g = detail::load_graph(o.graph);
      SolverConfig cfg{o.k_max, o.threads, o.count};
      const auto result = solve(g, parse_strength_mode(o.strength_mode), cfg);
      out << to_json(result) << '\n';
      err << "nodes=" << result.stats.nodes << " time=" << result.stats.seconds << "s\n";
      return kOk;
    }

    if (*table_cmd) {
      if (o.from > o.to) {
        err << "error: --from must not exceed --to\n";
        return kUsage;
      }
      out << "n\ts\tms\ts_oracle\tms_oracle\n";
      for (auto n = o.from; n <= o.to; ++n) {
        out << n << '\t' << book::theorem1_strength(n) << '\t' << book::theorem2_strength(n);
        if (n <= o.oracle_upto) {
          const auto g = make_triangular_book({n});
          SolverConfig cfg{static_cast<Label>(n) + 2, o.threads, false};
          out << '\t' << detail::oracle_cell(solve(g, StrengthMode::s, cfg)) << '\t'
              << detail::oracle_cell(solve(g, StrengthMode::ms, cfg));
        } else {
          out << "\t-\t-";
        }
        out << '\n';
      }
      return kOk;
    }

    if (*export_cmd) {
      const auto cert = detail::load_certificate(o.cert);
      std::ostringstream text;
      write_dot(text, cert);
      detail::emit(o.out, out, text.str());
      return kOk;
    }
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const format_error& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace irrstrength::cli
