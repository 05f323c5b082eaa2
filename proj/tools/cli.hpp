#pragma once

// Command-line front end. run_cli is kept separate from main so the tests
// can drive it with captured streams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turanlab/turanlab.hpp"

namespace turanlab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCounterexample = 2, kInconclusive = 3 };

inline constexpr const char* kBudgetEnv = "TURANLAB_BUDGET";
inline constexpr const char* kTolEnv = "TURANLAB_TOL";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t to_count(const std::string& flag, const std::string& s) {
  try {
    return parse_count(s);
  } catch (const ConfigError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline double to_real(const std::string& flag, const std::string& s) {
  try {
    return parse_real(s);
  } catch (const ConfigError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline std::vector<std::size_t> to_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(to_count("--parts", item));
  if (out.empty()) throw UsageError("--parts: empty list");
  return out;
}

// flag, else environment variable, else default
inline std::uint64_t budget_from(const std::string& flag) {
  if (!flag.empty()) return to_count("--budget", flag);
  if (const char* env = std::getenv(kBudgetEnv)) return to_count(kBudgetEnv, env);
  return kDefaultBudget;
}

inline double tol_from(const std::string& flag) {
  const double t = !flag.empty() ? to_real("--tol", flag)
                   : std::getenv(kTolEnv) ? to_real(kTolEnv, std::getenv(kTolEnv))
                                           : kDefaultTolerance;
  if (!(t > 0)) throw UsageError("tolerance must be positive");
  return t;
}

inline Graph read_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else if (j.is_null()) {
    out.emplace_back(prefix, "");
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

/// Header line plus one value line; nested fields are dotted paths.
inline std::string to_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(j, "", cells);
  std::string head, row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) {
      head += ',';
      row += ',';
    }
    head += csv_field(cells[i].first);
    row += csv_field(cells[i].second);
  }
  return head + "\n" + row + "\n";
}

inline void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "csv") {
    out << to_csv(j);
  } else {
    out << j.dump(2) << '\n';
  }
}

inline Graph generate(const std::string& family, std::size_t n, std::size_t r, const std::string& parts,
                      const std::string& m, std::uint64_t seed) {
  auto need_n = [&]() {
    if (n == 0 && family != "empty") throw UsageError("gen: --n is required for family " + family);
  };
  if (family == "multipartite") return make_complete_multipartite(PartSpec(to_sizes(parts)));
  if (family == "kplus") return make_kr_plus(PartSpec(to_sizes(parts)));
  need_n();
  if (family == "turan") return make_turan(n, r);
  if (family == "turan-plus") {
    if (turan_part_sizes(n, r)[0] < 2) throw UsageError("gen: T_r(n) has no part with two vertices");
    return make_turan(n, r).with_edge(0, 1);
  }
  if (family == "turan-minus") {
    Graph g = make_turan(n, r);
    if (g.edge_count() == 0) throw UsageError("gen: T_r(n) has no edge to remove");
    const auto e = g.edges().front();
    g.remove_edge(e.first, e.second);
    return g;
  }
  if (family == "gnm") {
    if (m.empty()) throw UsageError("gen: --m is required for gnm");
    return random_gnm(n, to_count("--m", m), seed);
  }
  if (family == "complete") return make_complete(n);
  if (family == "empty") return Graph(n);
  if (family == "cycle") return make_cycle(n);
  if (family == "star") return make_star(n);
  if (family == "book") return make_book(n, r);
  throw UsageError("gen: unknown family " + family);
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral Turán-type workbench: graphs, spectra, cliques, embeddings and theorem checks"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Write a graph as an edge list");
  std::string family, parts, m_text, seed_text, gen_out;
  std::string gen_n = "0", gen_r = "2";
  gen->add_option("--family", family, "turan, multipartite, kplus, gnm, turan-plus, turan-minus, complete, empty, "
                                      "cycle, star, book")
      ->required();
  gen->add_option("--n", gen_n, "Order");
  gen->add_option("--r", gen_r, "Number of parts / clique order");
  gen->add_option("--parts", parts, "Comma-separated part sizes");
  gen->add_option("--m", m_text, "Edge count (gnm)");
  gen->add_option("--seed", seed_text, "Seed (gnm)");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // statistics
  std::string graph_path, tol_text, budget_text;
  std::string stat_r = "3", clique_k = "3";
  auto* mu = app.add_subcommand("mu", "Spectral radius with its enclosure");
  mu->add_option("graph", graph_path, "Edge-list file, or - for stdin")->required();
  mu->add_option("--tol", tol_text, "Solver tolerance");
  auto* cliques = app.add_subcommand("cliques", "Count k-cliques");
  cliques->add_option("graph", graph_path)->required();
  cliques->add_option("--k,--r", clique_k, "Clique order");
  auto* joints = app.add_subcommand("joints", "Largest r-joint (r-cliques sharing an edge)");
  joints->add_option("graph", graph_path)->required();
  joints->add_option("--r", stat_r, "Clique order");
  auto* books = app.add_subcommand("books", "Largest book on an r-clique");
  books->add_option("graph", graph_path)->required();
  books->add_option("--r", stat_r, "Base clique order");

  // find
  auto* find = app.add_subcommand("find", "Search for a complete multipartite or K_r^+ subgraph");
  std::string target = "multipartite", find_parts;
  find->add_option("graph", graph_path)->required();
  find->add_option("--target", target)->check(CLI::IsMember({"multipartite", "kplus"}));
  find->add_option("--parts", find_parts, "Comma-separated part sizes")->required();
  find->add_option("--budget", budget_text, "Node-expansion budget");

  // check
  auto* chk = app.add_subcommand("check", "Check one statement on a graph");
  std::string theorem, c_text, b_text, reading = "b";
  std::string chk_r = "2";
  bool with_graph = false;
  chk->add_option("graph", graph_path)->required();
  chk->add_option("--theorem", theorem, "t1 t2 t3 t1.2 t2.2 t3.2 stt lensmm tsize lekd thv4 tstab edge-spectral book")
      ->required();
  chk->add_option("--r", chk_r);
  chk->add_option("--c", c_text);
  chk->add_option("--b", b_text);
  chk->add_option("--tol", tol_text);
  chk->add_option("--budget", budget_text);
  chk->add_option("--tstab-reading", reading)->check(CLI::IsMember({"b", "c"}));
  chk->add_flag("--with-graph", with_graph, "Embed the graph in the verdict");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run a harness experiment");
  std::string config_path, exp_out, exp_csv, exp_meta, threads_text;
  exp->add_option("--config", config_path)->required();
  exp->add_option("--threads", threads_text, "Worker threads (overrides the config)");
  exp->add_option("--output", exp_out, "Report file (overrides the config; default stdout)");
  exp->add_option("--csv", exp_csv, "Summary CSV file");
  exp->add_option("--meta", exp_meta, "Timing metadata JSON file");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*gen) {
      const std::uint64_t seed = seed_text.empty() ? kDefaultSeed : detail::to_count("--seed", seed_text);
      const Graph g = detail::generate(family, detail::to_count("--n", gen_n), detail::to_count("--r", gen_r), parts, m_text, seed);
      if (gen_out.empty()) {
        write_edge_list(out, g);
      } else {
        save_edge_list(gen_out, g);
      }
      return kOk;
    }
    if (*mu) {
      const Graph g = detail::read_graph(graph_path);
      const auto est = spectral_radius(g, detail::tol_from(tol_text));
      detail::emit(out, to_json(est), format);
      return est.converged ? kOk : kInconclusive;
    }
    if (*cliques) {
      const Graph g = detail::read_graph(graph_path);
      detail::emit(out, to_json(count_cliques(g, detail::to_count("--k", clique_k))), format);
      return kOk;
    }
    if (*joints) {
      const Graph g = detail::read_graph(graph_path);
      detail::emit(out, to_json(joint_size(g, detail::to_count("--r", stat_r))), format);
      return kOk;
    }
    if (*books) {
      const Graph g = detail::read_graph(graph_path);
      detail::emit(out, to_json(book_size(g, detail::to_count("--r", stat_r))), format);
      return kOk;
    }
    if (*find) {
      const Graph g = detail::read_graph(graph_path);
      const PartSpec spec(detail::to_sizes(find_parts));
      const auto budget = detail::budget_from(budget_text);
      const auto res = target == "kplus" ? find_kr_plus(g, spec, budget) : find_complete_multipartite(g, spec, budget);
      Json j = {{"status", to_string(res.status)}, {"expansions", res.expansions}};
      if (res.embedding) {
        if (auto bad = validate_embedding(g, spec, *res.embedding, target == "kplus")) {
          throw std::logic_error("finder returned an invalid embedding: " + *bad);
        }
        j["embedding"] = to_json(*res.embedding);
      }
      detail::emit(out, j, format);
      return res.status == SearchStatus::BudgetExhausted ? kInconclusive : kOk;
    }
    if (*chk) {
      const auto id = parse_theorem(theorem);
      if (!id) throw UsageError("unknown theorem " + theorem);
      const Graph g = detail::read_graph(graph_path);
      TheoremParams p;
      p.r = detail::to_count("--r", chk_r);
      if (!c_text.empty()) p.c = detail::to_real("--c", c_text);
      if (!b_text.empty()) p.b = detail::to_real("--b", b_text);
      p.tol = detail::tol_from(tol_text);
      p.budget = detail::budget_from(budget_text);
      p.tstab_reading = reading == "c" ? TstabReading::UseC : TstabReading::UseB;
      const auto v = check(*id, g, p);
      if (auto bad = validate_certificate(g, v)) throw std::logic_error("invalid certificate: " + *bad);
      detail::emit(out, to_json(v, &g, with_graph), format);
      if (v.is_counterexample()) return kCounterexample;
      return v.is_inconclusive() ? kInconclusive : kOk;
    }
    if (*exp) {
      auto cfg = load_config(config_path);
      if (!threads_text.empty()) cfg.set("threads", threads_text);
      if (!exp_out.empty()) cfg.output = exp_out;
      if (!exp_csv.empty()) cfg.csv = exp_csv;
      const auto report = run_experiment(cfg);
      const std::string body = report.to_json().dump(2) + "\n";
      if (cfg.output.empty() || cfg.output == "-") {
        out << body;
      } else {
        std::ofstream f(cfg.output);
        if (!f) throw std::runtime_error("cannot write " + cfg.output);
        f << body;
      }
      if (!cfg.csv.empty()) {
        std::ofstream f(cfg.csv);
        if (!f) throw std::runtime_error("cannot write " + cfg.csv);
        f << report.summary_csv();
      }
      if (!exp_meta.empty()) {
        std::ofstream f(exp_meta);
        if (!f) throw std::runtime_error("cannot write " + exp_meta);
        f << report.meta_json().dump(2) << '\n';
      }
      err << "checked " << report.instances_checked << " instances on " << report.graphs_checked << " graphs, "
          << report.counterexample_count() << " counterexamples, " << report.wall_seconds << " s\n";
      if (report.counterexample_count() > 0) return kCounterexample;
      return report.inconclusive_count() > 0 ? kInconclusive : kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EdgeListError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace turanlab::cli
