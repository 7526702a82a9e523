#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "kempe/error.hpp"
#include "kempe/fourcolor.hpp"
#include "kempe/hash.hpp"
#include "kempe/io.hpp"
#include "kempe/patterns.hpp"
#include "kempe/reconfig.hpp"
#include "kempe/topology.hpp"
#include "kempe/wsk.hpp"

#ifndef KEMPE_VERSION
#define KEMPE_VERSION "0.0.0"
#endif

namespace kempe::cli {
namespace {

using io::Json;

struct Context {
  Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}
  std::ostream& out;
  std::ostream& err;
  std::string output;
  std::string manifest;
  int jobs = 1;
  std::vector<std::string> args;
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::string fingerprint;
};

/// Thrown for usage problems detected after parsing; names the flag.
struct UsageError {
  std::string message;
};

TorusGraph load_graph(Context& ctx, const std::string& path) {
  ctx.inputs.push_back(path);
  auto g = TorusGraph::from_params(io::params_from_json(io::read_json(path)));
  ctx.fingerprint = g.fingerprint();
  return g;
}

Coloring load_coloring(Context& ctx, const std::string& path, const Graph& g) {
  ctx.inputs.push_back(path);
  auto phi = io::coloring_from_json(io::read_json(path));
  if (phi.size() != g.vertex_count()) {
    throw Error(ErrorKind::LengthMismatch, path + ": " + std::to_string(phi.size()) +
                                               " colors for " + std::to_string(g.vertex_count()) +
                                               " vertices");
  }
  return phi;
}

void emit(Context& ctx, const Json& j) {
  if (ctx.output.empty()) {
    ctx.out << io::dump(j);
  } else {
    io::write_json(ctx.output, j);
  }
}

Json graph_json(const TorusGraph& g) {
  Json j = io::to_json(g.params());
  j["name"] = g.name();
  j["vertex_count"] = g.vertex_count();
  j["fingerprint"] = g.fingerprint();
  return j;
}

Json forms_json(const std::vector<GridTriple>& forms) {
  Json a = Json::array();
  for (const auto& f : forms) a.push_back({f[0], f[1], f[2]});
  return a;
}

NormalizeOptions normalize_options(bool augment, std::uint64_t seed) {
  NormalizeOptions o;
  o.six_cycle_augmentation = augment;
  o.seed = seed;
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_manifest(const Context& ctx) {
  std::vector<std::string> replay;
  for (std::size_t i = 0; i < ctx.args.size(); ++i) {
    if (ctx.args[i] == "--manifest") {
      ++i;
      continue;
    }
    if (ctx.args[i].rfind("--manifest=", 0) == 0) continue;
    replay.push_back(ctx.args[i]);
  }
  Json m{{"command", ctx.command},
         {"args", replay},
         {"inputs", ctx.inputs},
         {"seed", ctx.seed ? Json(*ctx.seed) : Json(nullptr)},
         {"output", ctx.output.empty() ? Json(nullptr) : Json(ctx.output)},
         {"version", KEMPE_VERSION},
         {"graph_fingerprint", ctx.fingerprint.empty() ? Json(nullptr) : Json(ctx.fingerprint)}};
  io::write_json(ctx.manifest, m);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err);
}

namespace {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx(out, err);
  ctx.args = args;

  CLI::App app{"Kempe-swap reconfiguration toolkit for 6-regular toroidal graphs", "kempe"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", KEMPE_VERSION);
  app.add_option("--jobs", ctx.jobs, "Worker threads (outputs do not depend on it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--manifest", ctx.manifest, "Write an experiment manifest to this path");

  std::function<void()> action;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", ctx.output, "Write JSON here instead of standard output");
  };

  // gen
  std::string family;
  int a = 0, b = 0, c = 1, n = 0, r = 0;
  std::string dimacs;
  auto* gen = app.add_subcommand("gen", "Build a graph and write its spec");
  gen->add_option("--family", family, "shifted_grid or circulant")
      ->required()
      ->check(CLI::IsMember({"shifted_grid", "circulant"}));
  auto* opt_a = gen->add_option("--a", a, "Rows of T[a x b, c]");
  auto* opt_b = gen->add_option("--b", b, "Columns of T[a x b, c]");
  gen->add_option("--c", c, "Seam shift of T[a x b, c]");
  auto* opt_n = gen->add_option("--n", n, "Order of C_n[1, r, r+1]");
  auto* opt_r = gen->add_option("--r", r, "Second jump of C_n[1, r, r+1]");
  gen->add_option("--dimacs", dimacs, "Also export DIMACS here, with a .rotation.json sidecar");
  add_output(gen);
  gen->callback([&] {
    action = [&] {
      GraphParams params;
      if (family == "shifted_grid") {
        if (!*opt_a) throw UsageError{"--a is required for shifted_grid"};
        if (!*opt_b) throw UsageError{"--b is required for shifted_grid"};
        params = ShiftedGridParams{a, b, c};
      } else {
        if (!*opt_n) throw UsageError{"--n is required for circulant"};
        if (!*opt_r) throw UsageError{"--r is required for circulant"};
        params = CirculantParams{n, r};
      }
      const auto g = TorusGraph::from_params(params);
      ctx.fingerprint = g.fingerprint();
      if (!dimacs.empty()) {
        std::ofstream f(dimacs);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write " + dimacs);
        f << to_dimacs(g);
        io::write_json(dimacs + ".rotation.json", io::rotation_sidecar(g));
      }
      emit(ctx, graph_json(g));
      ctx.err << g.name() << ": " << g.vertex_count() << " vertices\n";
    };
  });

  // edgewidth
  std::string graph_path;
  auto* ew = app.add_subcommand("edgewidth", "Shortest non-contractible cycle");
  ew->add_option("graph", graph_path, "Graph spec JSON")->required();
  add_output(ew);
  ew->callback([&] {
    action = [&] {
      const auto g = load_graph(ctx, graph_path);
      const auto w = edge_width(g);
      emit(ctx, io::to_json(w));
      ctx.err << g.name() << ": edge-width " << w.length << "\n";
    };
  });

  // classify4
  auto* c4 = app.add_subcommand("classify4", "Decide 4-colorability");
  c4->add_option("--graph", graph_path, "Graph spec JSON")->required();
  add_output(c4);
  c4->callback([&] {
    action = [&] {
      ctx.inputs.push_back(graph_path);
      const auto params = io::params_from_json(io::read_json(graph_path));
      const auto verdict = classify(params);
      Json j = io::to_json(verdict);
      emit(ctx, j);
      ctx.err << (verdict.colorable ? "4-colorable" : "not 4-colorable") << "\n";
    };
  });

  // classes
  int k = 0;
  bool quotient = false;
  long long state_cap = 20'000'000;
  auto* cls = app.add_subcommand("classes", "Exact Kempe classes by exhaustive flood fill");
  cls->add_option("--graph", graph_path, "Graph spec JSON")->required();
  cls->add_option("--k", k, "Number of colors")->required()->check(CLI::Range(1, 255));
  cls->add_flag("--quotient", quotient, "Identify colorings up to color permutation");
  cls->add_option("--state-cap", state_cap, "Abort beyond this many colorings")
      ->check(CLI::PositiveNumber);
  add_output(cls);
  cls->callback([&] {
    action = [&] {
      const auto g = load_graph(ctx, graph_path);
      const auto t0 = std::chrono::steady_clock::now();
      const auto report = kempe_classes(g, k, quotient, state_cap);
      Json j{{"graph", g.name()}};
      j.update(io::to_json(report));
      emit(ctx, j);
      ctx.err << g.name() << ", k=" << k << ": " << report.state_count << " colorings, "
              << report.class_count() << " classes (" << seconds_since(t0) << " s)\n";
    };
  });

  // color
  std::uint64_t seed = 0;
  auto* col = app.add_subcommand("color", "Random proper coloring");
  col->add_option("--graph", graph_path, "Graph spec JSON")->required();
  col->add_option("--k", k, "Number of colors")->required()->check(CLI::Range(1, 255));
  col->add_option("--seed", seed, "Random seed")->required();
  add_output(col);
  col->callback([&] {
    action = [&] {
      ctx.seed = seed;
      const auto g = load_graph(ctx, graph_path);
      emit(ctx, io::to_json(random_proper(g, k, seed)));
    };
  });

  // normalize
  std::string coloring_path;
  bool augment = false;
  auto* norm = app.add_subcommand("normalize", "Kempe moves to a coloring with a good 4-template");
  norm->add_option("--graph", graph_path, "Graph spec JSON")->required();
  norm->add_option("--coloring", coloring_path, "Proper 5-coloring JSON")->required();
  norm->add_option("--seed", seed, "Search seed")->required();
  norm->add_flag("--augment", augment, "Admit T[6 x b] (edge-width 6)");
  add_output(norm);
  norm->callback([&] {
    action = [&] {
      ctx.seed = seed;
      const auto g = load_graph(ctx, graph_path);
      const auto phi = load_coloring(ctx, coloring_path, g);
      const auto result = normalize(g, phi, normalize_options(augment, seed));
      emit(ctx, Json{{"certificate", io::to_json(result.certificate)},
                     {"template", io::to_json(result.good_template)},
                     {"final_coloring", io::to_json(result.final_coloring)}});
      ctx.err << result.certificate.moves.size() << " moves\n";
    };
  });

  // certify
  std::string from_path, to_path;
  auto* cert = app.add_subcommand("certify", "Certificate of Kempe equivalence");
  cert->add_option("--graph", graph_path, "Graph spec JSON")->required();
  cert->add_option("--from", from_path, "Start coloring JSON")->required();
  cert->add_option("--to", to_path, "Target coloring JSON")->required();
  cert->add_option("--seed", seed, "Search seed");
  cert->add_flag("--augment", augment, "Admit T[6 x b] (edge-width 6)");
  add_output(cert);
  cert->callback([&] {
    action = [&] {
      const auto g = load_graph(ctx, graph_path);
      ctx.seed = seed;
      const auto phi1 = load_coloring(ctx, from_path, g);
      const auto phi2 = load_coloring(ctx, to_path, g);
      const auto result = certify_equivalence(g, phi1, phi2, normalize_options(augment, seed));
      Json j = io::to_json(result.certificate);
      j["route"] = std::string(to_string(result.route));
      emit(ctx, j);
      ctx.err << result.certificate.moves.size() << " moves via " << to_string(result.route)
              << "\n";
    };
  });

  // verify
  std::string cert_path;
  auto* ver = app.add_subcommand("verify", "Replay a certificate");
  ver->add_option("--graph", graph_path, "Graph spec JSON")->required();
  ver->add_option("--from", from_path, "Start coloring JSON")->required();
  ver->add_option("--cert", cert_path, "Certificate JSON")->required();
  ver->add_option("--to", to_path, "Also require the replay to end at this coloring");
  add_output(ver);
  int verify_status = 0;
  ver->callback([&] {
    action = [&] {
      const auto g = load_graph(ctx, graph_path);
      const auto phi = load_coloring(ctx, from_path, g);
      ctx.inputs.push_back(cert_path);
      const auto certificate = io::certificate_from_json(io::read_json(cert_path));
      auto result = verify_certificate(g, phi, certificate);
      if (result && !to_path.empty()) {
        const auto target = load_coloring(ctx, to_path, g);
        if (coloring_hash(target) != certificate.end_hash) {
          result.ok = false;
          result.reason = "end coloring differs from --to";
        }
      }
      Json j{{"ok", result.ok},
             {"moves", certificate.moves.size()},
             {"failed_move", result.failed_move ? Json(*result.failed_move) : Json(nullptr)},
             {"reason", result.reason}};
      emit(ctx, j);
      ctx.err << (result.ok ? "certificate verifies" : "certificate rejected: " + result.reason)
              << "\n";
      verify_status = result.ok ? 0 : 1;
    };
  });

  // wsk
  long long steps = 0;
  std::string classes_path, start_path;
  auto* wsk = app.add_subcommand("wsk", "Zero-temperature WSK chain");
  wsk->add_option("--graph", graph_path, "Graph spec JSON")->required();
  wsk->add_option("--k", k, "Number of colors")->required()->check(CLI::Range(2, 255));
  wsk->add_option("--steps", steps, "Chain length")->required()->check(CLI::NonNegativeNumber);
  wsk->add_option("--seed", seed, "Random seed")->required();
  wsk->add_option("--classes", classes_path, "Class report JSON for per-class visit counts");
  wsk->add_option("--start", start_path, "Start coloring (default: random from the seed)");
  add_output(wsk);
  wsk->callback([&] {
    action = [&] {
      ctx.seed = seed;
      const auto g = load_graph(ctx, graph_path);
      ChainOptions options;
      std::optional<ClassIndex> index;
      if (!classes_path.empty()) {
        ctx.inputs.push_back(classes_path);
        const auto report = io::class_report_from_json(io::read_json(classes_path));
        if (report.k != k) {
          throw Error(ErrorKind::InvalidArgument, "class report is for k=" +
                                                      std::to_string(report.k));
        }
        index.emplace(g, report);
        options.classes = &*index;
      }
      if (!start_path.empty()) options.start = load_coloring(ctx, start_path, g);
      const auto stats = run_chain(g, k, steps, seed, options);
      emit(ctx, io::to_json(stats));
      ctx.err << stats.distinct_colorings << " distinct colorings in " << stats.steps
              << " steps\n";
    };
  });

  // enumerate
  auto* en = app.add_subcommand("enumerate", "All 6-regular toroidal graphs on n vertices");
  en->add_option("--n", n, "Vertex count")->required()->check(CLI::PositiveNumber);
  add_output(en);
  en->callback([&] {
    action = [&] {
      Json list = Json::array();
      for (const auto& g : enumerate_graphs(n)) {
        Json j = graph_json(g);
        j["canonical_forms"] = forms_json(canonical_forms(g));
        j["edge_width"] = edge_width(g).length;
        list.push_back(std::move(j));
      }
      const auto raw = raw_parameterizations(n);
      emit(ctx, Json{{"n", n}, {"raw_parameterizations", raw.size()}, {"graphs", list}});
      ctx.err << list.size() << " graphs on " << n << " vertices\n";
    };
  });

  // sample
  bool per_triple = false;
  auto* sm = app.add_subcommand("sample", "Uniform random 6-regular toroidal graph");
  sm->add_option("--n", n, "Vertex count")->required()->check(CLI::PositiveNumber);
  sm->add_option("--seed", seed, "Random seed")->required();
  sm->add_flag("--per-triple", per_triple,
               "Uniform over parameter triples instead of isomorphism classes");
  add_output(sm);
  sm->callback([&] {
    action = [&] {
      ctx.seed = seed;
      const auto g = sample_uniform(
          n, seed, per_triple ? SamplingMode::UniformTriple : SamplingMode::UniformClass);
      ctx.fingerprint = g.fingerprint();
      emit(ctx, graph_json(g));
    };
  });

  // patterns
  auto* pat = app.add_subcommand("patterns", "Triples, pairs and paired motifs of a coloring");
  pat->add_option("--graph", graph_path, "Graph spec JSON")->required();
  pat->add_option("--coloring", coloring_path, "Proper coloring JSON")->required();
  add_output(pat);
  pat->callback([&] {
    action = [&] {
      const auto g = load_graph(ctx, graph_path);
      const auto phi = load_coloring(ctx, coloring_path, g);
      Json list = Json::array();
      for (const auto& p : find_patterns(g, phi)) list.push_back(io::to_json(p));
      emit(ctx, Json{{"ladder_rank", ladder_rank(g, phi)}, {"patterns", list}});
    };
  });

  // replay
  std::string replay_path;
  auto* rep = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  rep->add_option("manifest", replay_path, "Manifest JSON")->required();
  int replay_status = 0;
  rep->callback([&] {
    action = [&] {
      const auto m = io::read_json(replay_path);
      auto it = m.find("args");
      if (it == m.end() || !it->is_array()) {
        throw Error(ErrorKind::ParseError, replay_path + ": manifest has no args");
      }
      std::vector<std::string> again;
      for (const auto& s : *it) {
        if (!s.is_string()) throw Error(ErrorKind::ParseError, "manifest args must be strings");
        again.push_back(s.get<std::string>());
      }
      if (!again.empty() && again.front() == "replay") {
        throw Error(ErrorKind::InvalidArgument, "a manifest cannot replay another manifest");
      }
      replay_status = run(again, ctx.out, ctx.err);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    ctx.out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    ctx.out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    ctx.out << KEMPE_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    ctx.err << "usage error: " << e.what() << "\n";
    return 2;
  }

  for (auto* sub : app.get_subcommands()) ctx.command = sub->get_name();
  try {
    action();
    if (!ctx.manifest.empty()) write_manifest(ctx);
  } catch (const UsageError& e) {
    ctx.err << "usage error: " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    Json j{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    ctx.out << io::dump(j);
    ctx.err << "error: " << e.what() << "\n";
    return 1;
  }
  return std::max(verify_status, replay_status);
}

}  // namespace
}  // namespace kempe::cli
