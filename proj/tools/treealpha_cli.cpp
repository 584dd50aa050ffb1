// Command-line front end: generate instances, build decompositions and
// covers, run the exact solver and the approximation drivers, verify
// artifacts. Exit codes: 0 ok, 2 bad input, 3 failed validation, 4 resource
// guard tripped.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "treealpha/fatness.hpp"
#include "treealpha/generators.hpp"
#include "treealpha/io.hpp"
#include "treealpha/oracles.hpp"
#include "treealpha/ptas.hpp"
#include "treealpha/solver.hpp"

namespace ta = treealpha;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;  // a verification check failed
constexpr int kExitGuard = 3;    // a work/size guard tripped
constexpr int kExitInput = 4;    // malformed input or arguments

ta::PathMode mode_for(const ta::ObjectCollection& c) {
  return c.kind == ta::CollectionKind::GridPathsE ? ta::PathMode::Edge
                                                  : ta::PathMode::Vertex;
}

std::string weights_to_json(const std::vector<ta::Weight>& ws) {
  nlohmann::json j;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : ws) arr.push_back(ta::to_string(w));
  j["weights"] = std::move(arr);
  return j.dump();
}

std::vector<ta::Weight> weights_from_file(const std::string& path) {
  const nlohmann::json j = nlohmann::json::parse(ta::read_text_file(path));
  std::vector<ta::Weight> ws;
  for (const auto& w : j.at("weights"))
    ws.push_back(ta::parse_weight(w.get<std::string>()));
  return ws;
}

/// Accepts either a layered-decomposition document or a bare decomposition.
ta::TreeDecomposition td_from_file(const std::string& path) {
  const std::string text = ta::read_text_file(path);
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.contains("td")) return ta::layered_from_json(text).td;
  return ta::td_from_json(text);
}

int cmd_generate(const ta::GeneratorSpec& spec, const std::string& out,
                 const std::string& weight_spec, const std::string& weights_out) {
  ta::ObjectCollection c = ta::generate_instance(spec);
  ta::write_text_file(out, ta::instance_to_json(c) + "\n");
  if (!weights_out.empty()) {
    auto ws = ta::weights_from_spec(weight_spec, static_cast<int>(c.objects.size()));
    ta::write_text_file(weights_out, weights_to_json(ws) + "\n");
  }
  std::cout << "wrote " << out << " (" << c.objects.size() << " objects)\n";
  return kExitOk;
}

int cmd_decompose(const std::string& in, const std::string& out, double window) {
  ta::ObjectCollection c = ta::instance_from_json(ta::read_text_file(in));
  if (window > 0) {
    ta::StripTd s = ta::strip_td(c, window);
    ta::LayeredDecomposition d;
    d.td = std::move(s.td);
    d.declared_bound = s.declared_bound;
    d.method = s.method;
    d.strips.vertical_width = window;
    ta::write_text_file(out, ta::layered_to_json(d) + "\n");
    std::cout << d.method << ": bound " << d.declared_bound << ", "
              << d.td.node_count() << " nodes\n";
  } else {
    ta::LayeredDecomposition d = ta::layered_td_auto(c);
    ta::write_text_file(out, ta::layered_to_json(d) + "\n");
    std::cout << d.method << ": bound " << d.declared_bound << ", "
              << d.td.node_count() << " nodes, " << d.layering.layer_count()
              << " layers\n";
  }
  return kExitOk;
}

int cmd_cover(const std::string& in, const std::string& out, const std::string& mode,
              long long r, long long cfat) {
  ta::ObjectCollection c = ta::instance_from_json(ta::read_text_file(in));
  ta::GeneralCover cover;
  if (mode == "fat") {
    long long cf = cfat;
    if (cf <= 0) {
      if (!c.params.fatness)
        throw std::invalid_argument("no declared fatness; pass --cfat");
      cf = static_cast<long long>(*c.params.fatness);
    }
    cover = ta::general_cover_fat(c, r, cf);
  } else if (mode == "layered") {
    ta::LayeredDecomposition d = ta::layered_td_auto(c);
    const ta::Graph g = ta::intersection_graph(c, mode_for(c));
    cover = ta::cover_from_layering(g, d.td, d.layering, static_cast<int>(r),
                                    d.declared_bound);
  } else {
    throw std::invalid_argument("cover mode must be fat or layered");
  }
  ta::write_text_file(out, ta::cover_to_json(cover) + "\n");
  std::cout << cover.elements.size() << " elements, beta "
            << ta::to_string(cover.beta) << ", per-element bound "
            << cover.alpha_bound << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& in, const std::string& graph_file,
              const std::string& dimacs_file, const std::string& td_file,
              const std::string& weights_file, const std::string& out) {
  ta::Graph g;
  if (!in.empty()) {
    ta::ObjectCollection c = ta::instance_from_json(ta::read_text_file(in));
    g = ta::intersection_graph(c, mode_for(c));
  } else if (!graph_file.empty()) {
    g = ta::graph_from_json(ta::read_text_file(graph_file));
  } else if (!dimacs_file.empty()) {
    g = ta::graph_from_dimacs(ta::read_text_file(dimacs_file));
  } else {
    throw std::invalid_argument("need one of --in / --graph / --dimacs");
  }
  ta::TreeDecomposition td = td_from_file(td_file);
  if (auto bad = ta::validate_td(g, td)) {
    std::cerr << "invalid decomposition: " << bad->message << "\n";
    return kExitInvalid;
  }
  std::vector<ta::Weight> ws;
  if (weights_file.empty())
    ws.assign(std::size_t(g.n()), ta::Weight(1));
  else
    ws = weights_from_file(weights_file);
  ta::DpSolution sol = ta::mwis_on_td(ta::WeightedGraph{g, ws}, td);
  ta::write_text_file(out, ta::solution_to_json(sol) + "\n");
  std::cout << "weight " << ta::to_string(sol.weight) << ", " << sol.chosen.size()
            << " vertices, peak table " << sol.peak_states << "\n";
  return kExitOk;
}

int cmd_ptas(const std::string& in, const std::string& weights_file, double eps,
             const std::string& method, long long r0, long long cfat,
             const std::string& out) {
  ta::ObjectCollection c = ta::instance_from_json(ta::read_text_file(in));
  std::vector<ta::Weight> ws;
  if (weights_file.empty())
    ws.assign(c.objects.size(), ta::Weight(1));
  else
    ws = weights_from_file(weights_file);

  ta::PtasReport rep;
  if (method == "shifting") {
    if (c.kind == ta::CollectionKind::GridPathsV ||
        c.kind == ta::CollectionKind::GridPathsE)
      rep = ta::ptas_mwis_shifting_paths(c, ws, eps);
    else
      rep = ta::ptas_mwis_shifting_geom(c, ws, eps);
  } else if (method == "cover") {
    long long cf = cfat;
    if (cf <= 0) {
      if (!c.params.fatness)
        throw std::invalid_argument("no declared fatness; pass --cfat");
      cf = static_cast<long long>(*c.params.fatness);
    }
    rep = ta::ptas_mwis_fat(c, ws, r0, cf);
  } else {
    throw std::invalid_argument("ptas method must be shifting or cover");
  }
  ta::write_text_file(out, ta::report_to_json(rep) + "\n");
  std::cout << rep.method << ": weight " << ta::to_string(rep.solution.weight)
            << ", guarantee " << ta::to_string(rep.ratio) << " of optimum, shift "
            << rep.chosen_shift << "/" << rep.shift_count << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& in, const std::string& td_file,
               const std::string& cover_file, bool alpha_check) {
  ta::ObjectCollection c = ta::instance_from_json(ta::read_text_file(in));
  bool ok = true;
  if (auto bad = ta::validate_collection(c)) {
    std::cout << "collection: FAIL (" << *bad << ")\n";
    ok = false;
  } else {
    std::cout << "collection: ok\n";
  }
  const ta::Graph g = ta::intersection_graph(c, mode_for(c));

  if (!td_file.empty()) {
    const std::string text = ta::read_text_file(td_file);
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("td")) {
      ta::LayeredDecomposition d = ta::layered_from_json(text);
      if (auto bad = ta::validate_td(g, d.td)) {
        std::cout << "decomposition: FAIL (" << bad->message << ")\n";
        ok = false;
      } else {
        std::cout << "decomposition: ok (" << d.td.node_count() << " nodes)\n";
      }
      if (!d.layering.layers.empty()) {
        if (auto bad = ta::validate_layering(g, d.layering)) {
          std::cout << "layering: FAIL (" << *bad << ")\n";
          ok = false;
        } else {
          std::cout << "layering: ok (" << d.layering.layer_count() << " layers)\n";
        }
        if (alpha_check && ok) {
          const int got = ta::layered_independence_number(g, d.td, d.layering);
          if (got > d.declared_bound) {
            std::cout << "bound: FAIL (independence " << got << " > declared "
                      << d.declared_bound << ")\n";
            ok = false;
          } else {
            std::cout << "bound: ok (" << got << " <= " << d.declared_bound << ")\n";
          }
        }
      } else if (alpha_check && ok) {
        const int got = ta::td_independence_number(g, d.td);
        if (got > d.declared_bound) {
          std::cout << "bound: FAIL (independence " << got << " > declared "
                    << d.declared_bound << ")\n";
          ok = false;
        } else {
          std::cout << "bound: ok (" << got << " <= " << d.declared_bound << ")\n";
        }
      }
    } else {
      ta::TreeDecomposition td = ta::td_from_json(text);
      if (auto bad = ta::validate_td(g, td)) {
        std::cout << "decomposition: FAIL (" << bad->message << ")\n";
        ok = false;
      } else {
        std::cout << "decomposition: ok (" << td.node_count() << " nodes)\n";
      }
    }
  }

  if (!cover_file.empty()) {
    ta::GeneralCover cover = ta::cover_from_json(ta::read_text_file(cover_file));
    if (auto bad = ta::validate_cover(g, cover)) {
      std::cout << "cover: FAIL (" << *bad << ")\n";
      ok = false;
    } else {
      std::cout << "cover: ok (" << cover.elements.size() << " elements)\n";
    }
  }
  return ok ? kExitOk : kExitInvalid;
}

int cmd_bench(const std::string& kind, int n, std::uint64_t seed, int repeat) {
  ta::GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = seed;
  using clock = std::chrono::steady_clock;
  double gen_ms = 0, dec_ms = 0, solve_ms = 0;
  for (int i = 0; i < repeat; ++i) {
    auto t0 = clock::now();
    ta::ObjectCollection c = ta::generate_instance(spec);
    auto t1 = clock::now();
    ta::LayeredDecomposition d = ta::layered_td_auto(c);
    auto t2 = clock::now();
    const ta::Graph g = ta::intersection_graph(c, mode_for(c));
    std::vector<ta::Weight> ws(c.objects.size(), ta::Weight(1));
    ta::TreeDecomposition compressed = ta::sqrt_compress(
        g, d.td, d.layering, static_cast<int>(d.declared_bound));
    ta::DpSolution sol = ta::mwis_on_td(ta::WeightedGraph{g, ws}, compressed);
    auto t3 = clock::now();
    auto ms = [](auto a, auto b) {
      return std::chrono::duration<double, std::milli>(b - a).count();
    };
    gen_ms += ms(t0, t1);
    dec_ms += ms(t1, t2);
    solve_ms += ms(t2, t3);
    if (i == 0)
      std::cout << "n=" << n << " weight=" << ta::to_string(sol.weight) << "\n";
  }
  std::cout << "generate " << gen_ms / repeat << " ms, decompose " << dec_ms / repeat
            << " ms, compress+solve " << solve_ms / repeat << " ms (mean of "
            << repeat << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"layered and shifted-grid decompositions with small independence, "
               "exact solvers and approximation drivers for geometric graphs"};
  app.require_subcommand(1);

  ta::GeneratorSpec gspec;
  std::string out = "out.json", weights_spec = "unit", weights_out;
  auto* gen = app.add_subcommand("generate", "Sample an instance");
  gen->add_option("--kind", gspec.kind,
                  "unit_disks|fat_disks|similarly_sized_disks|unit_width_rects|"
                  "grid_paths_v|grid_paths_e|grid_disks|biclique_rects");
  gen->add_option("--n", gspec.n, "object count");
  gen->add_option("--seed", gspec.seed, "rng seed");
  gen->add_option("--window", gspec.window, "placement window side (0 = auto)");
  gen->add_option("--radius", gspec.radius, "disk radius");
  gen->add_option("--width", gspec.width, "box width");
  gen->add_option("--size-ratio", gspec.size_ratio, "max/min size ratio");
  gen->add_option("--fatness", gspec.fatness, "declared fatness");
  gen->add_option("--horiz-bound", gspec.horiz_bound, "path horizontal budget");
  gen->add_option("--max-bends", gspec.max_bends, "path bend budget");
  gen->add_option("--out", out, "instance file");
  gen->add_option("--weights", weights_spec, "unit | uniform:lo:hi:seed");
  gen->add_option("--weights-out", weights_out, "also write weights here");

  std::string in_file, td_file, cover_file, graph_file, dimacs_file, weights_file;
  double window = 0;
  auto* dec = app.add_subcommand("decompose", "Strip decomposition + layering");
  dec->add_option("--in", in_file, "instance file")->required();
  dec->add_option("--out", out, "decomposition file");
  dec->add_option("--window", window,
                  "windowed mode: realization fits this width, no layering");

  std::string cover_mode = "fat";
  long long r_param = 2, cfat_param = 0;
  auto* cov = app.add_subcommand("cover", "General cover construction");
  cov->add_option("--in", in_file, "instance file")->required();
  cov->add_option("--out", out, "cover file");
  cov->add_option("--mode", cover_mode, "fat | layered");
  cov->add_option("--r", r_param, "coverage parameter (beta = 1 - 1/r)");
  cov->add_option("--cfat", cfat_param, "fatness constant (fat mode)");

  auto* sol = app.add_subcommand("solve", "Exact weighted independent set");
  sol->add_option("--in", in_file, "instance file (intersection graph)");
  sol->add_option("--graph", graph_file, "graph JSON file");
  sol->add_option("--dimacs", dimacs_file, "graph DIMACS file");
  sol->add_option("--td", td_file, "decomposition file")->required();
  sol->add_option("--weights", weights_file, "weights file (default unit)");
  sol->add_option("--out", out, "solution file");

  double eps = 0.5;
  std::string ptas_method = "shifting";
  auto* pt = app.add_subcommand("ptas", "Approximation drivers");
  pt->add_option("--in", in_file, "instance file")->required();
  pt->add_option("--weights", weights_file, "weights file (default unit)");
  pt->add_option("--eps", eps, "target error");
  pt->add_option("--method", ptas_method, "shifting | cover");
  pt->add_option("--r", r_param, "cover parameter (cover mode)");
  pt->add_option("--cfat", cfat_param, "fatness constant (cover mode)");
  pt->add_option("--out", out, "report file");

  bool alpha_check = false;
  auto* ver = app.add_subcommand("verify", "Validate artifacts against an instance");
  ver->add_option("--in", in_file, "instance file")->required();
  ver->add_option("--td", td_file, "decomposition file");
  ver->add_option("--cover", cover_file, "cover file");
  ver->add_flag("--alpha-check", alpha_check, "also verify the declared bound");

  std::string bench_kind = "unit_disks";
  int bench_n = 200, bench_repeat = 3;
  std::uint64_t bench_seed = 1;
  auto* ben = app.add_subcommand("bench", "Quick end-to-end timing");
  ben->add_option("--kind", bench_kind, "generator kind");
  ben->add_option("--n", bench_n, "object count");
  ben->add_option("--seed", bench_seed, "rng seed");
  ben->add_option("--repeat", bench_repeat, "repetitions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(gspec, out, weights_spec, weights_out);
    if (dec->parsed()) return cmd_decompose(in_file, out, window);
    if (cov->parsed()) return cmd_cover(in_file, out, cover_mode, r_param, cfat_param);
    if (sol->parsed())
      return cmd_solve(in_file, graph_file, dimacs_file, td_file, weights_file, out);
    if (pt->parsed())
      return cmd_ptas(in_file, weights_file, eps, ptas_method, r_param, cfat_param, out);
    if (ver->parsed()) return cmd_verify(in_file, td_file, cover_file, alpha_check);
    if (ben->parsed()) return cmd_bench(bench_kind, bench_n, bench_seed, bench_repeat);
  } catch (const ta::GuardExceeded& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
