#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "semistream/errors.hpp"
#include "semistream/exact.hpp"
#include "semistream/generators.hpp"
#include "semistream/harness.hpp"
#include "semistream/io.hpp"
#include "semistream/rng.hpp"
#include "semistream/skeleton.hpp"
#include "semistream/stream.hpp"
#include "semistream/streaming.hpp"
#include "semistream/structure.hpp"
#include "semistream/util.hpp"

namespace ss = semistream;
using ordered_json = nlohmann::ordered_json;

namespace {

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    ss::write_text_file(text, out_path);
  }
}

ordered_json semi_report(const ss::BipartiteGraph& g, const ss::SemiMatching& semi,
                         const std::string& algorithm) {
  ordered_json doc;
  doc["schema"] = 1;
  doc["algorithm"] = algorithm;
  doc["n"] = g.num_a();
  doc["m"] = g.num_b();
  doc["edges"] = g.num_edges();
  doc["degmax"] = semi.degmax();
  doc["size"] = semi.size();
  doc["complete"] = semi.complete();
  doc["completion_cost"] = semi.completion_cost();
  doc["assignment"] = semi.assignment();
  return doc;
}

int run_gen(const std::string& kind, int n, int m, double p, int c, double eps,
            std::uint64_t seed, const std::vector<int>& subset, const std::string& out) {
  ss::BipartiteGraph g = [&] {
    if (kind == "complete") return ss::make_complete(n, m);
    if (kind == "random") return ss::make_random(n, m, p, seed);
    if (kind == "hard_g1") return ss::make_hard_g1(n, c, eps, seed);
    if (kind == "matching_g2") return ss::make_matching_g2(n, subset);
    throw ss::ArgumentError("unknown generator kind: " + kind);
  }();
  write_or_print(ss::save_graph(g), out);
  return 0;
}

int run_solve(const std::string& in, const std::string& algo, const std::string& out) {
  ss::BipartiteGraph g = ss::load_graph_file(in);
  ss::SemiMatching semi = [&] {
    if (algo == "optimal") return ss::optimal_semi(g);
    if (algo == "semi2") return ss::semi2(g);
    if (algo == "brute") return ss::brute_force_semi(g);
    throw ss::ArgumentError("unknown solver: " + algo);
  }();
  ordered_json doc = semi_report(g, semi, algo);
  if (algo != "optimal") {
    doc["d_star"] = ss::optimal_semi(g).degmax();
  } else {
    doc["d_star"] = semi.degmax();
  }
  write_or_print(doc.dump(2) + "\n", out);
  return 0;
}

int run_stream(const std::string& in, const std::string& algo, double eps,
               const std::string& order, std::uint64_t seed, const std::string& out) {
  ss::ExperimentSpec spec;
  ss::InstanceSpec inst;
  inst.file = in;
  spec.instances.push_back(inst);
  ss::AlgorithmSpec a;
  a.name = algo;
  a.eps = eps;
  spec.algorithms.push_back(a);
  spec.orders.push_back(ss::OrderSpec{ss::parse_stream_order(order), seed});
  std::vector<ss::ResultRecord> records = ss::run_experiment(spec);
  write_or_print(ss::emit(records, ss::OutputFormat::JsonLines), out);
  return ss::all_bounds_ok(records) ? 0 : 1;
}

int run_skeleton(const std::string& in, const std::string& kind, const std::string& out) {
  ss::BipartiteGraph g = ss::load_graph_file(in);
  ss::Skeleton sk = kind == "cuberoot" ? ss::cuberoot_skeleton(g) : ss::sqrt_skeleton(g);
  if (kind != "sqrt" && kind != "cuberoot") {
    throw ss::ArgumentError("unknown skeleton kind: " + kind);
  }
  write_or_print(ss::save_edge_subset(sk.edges), out);
  return 0;
}

int run_protocol(const std::string& in, const std::string& split, const std::string& kind,
                 const std::string& out) {
  ss::BipartiteGraph g = ss::load_graph_file(in);
  std::vector<int> e1;
  std::vector<int> e2;
  if (split.rfind("random:", 0) == 0) {
    std::uint64_t seed = std::stoull(split.substr(7));
    std::mt19937_64 gen(seed);
    for (int id = 0; id < g.num_edges(); ++id) {
      (ss::rng::chance(gen, 0.5) ? e1 : e2).push_back(id);
    }
  } else if (split.rfind("file:", 0) == 0) {
    // The file holds Alice's edges in the edge-list format; Bob gets the rest.
    ss::BipartiteGraph alice = ss::load_graph_file(split.substr(5));
    std::vector<char> is_alice(static_cast<std::size_t>(g.num_edges()), 0);
    for (const ss::Edge& e : alice.edges()) {
      int id = g.find_edge(e.a, e.b);
      if (id < 0) {
        throw ss::ArgumentError("split edge (" + std::to_string(e.a + 1) + ", " +
                                std::to_string(e.b + 1) + ") not present in the graph");
      }
      is_alice[static_cast<std::size_t>(id)] = 1;
    }
    for (int id = 0; id < g.num_edges(); ++id) {
      (is_alice[static_cast<std::size_t>(id)] ? e1 : e2).push_back(id);
    }
  } else {
    throw ss::ArgumentError("--split must be random:<seed> or file:<path>");
  }

  ss::ProtocolTranscript t = ss::two_party(g, e1, e2, ss::parse_skeleton_kind(kind));
  ordered_json doc;
  doc["schema"] = 1;
  doc["kind"] = kind;
  doc["n"] = g.num_a();
  doc["m"] = g.num_b();
  doc["alice_input_edges"] = e1.size();
  doc["bob_input_edges"] = e2.size();
  doc["message_edges"] = t.alice_edges;
  doc["message_bits"] = t.message_bits;
  doc["paper_message_bits"] = t.paper_message_bits;
  doc["bob_degmax"] = t.bob_degmax;
  doc["d_star"] = t.d_star;
  doc["ratio"] = t.ratio;
  doc["bound"] = t.bound;
  doc["bound_ok"] = t.bound_ok;
  write_or_print(doc.dump(2) + "\n", out);
  return t.bound_ok ? 0 : 1;
}

int run_decompose(const std::string& in, const std::string& which, const std::string& report) {
  ss::BipartiteGraph g = ss::load_graph_file(in);
  ss::SemiMatching semi = which == "optimal" ? ss::optimal_semi(g) : ss::semi2(g);
  if (which != "optimal" && which != "semi2") {
    throw ss::ArgumentError("--semi must be semi2 or optimal");
  }
  ss::Decomposition dec = ss::decompose(g, semi);
  auto maximal = ss::verify_maximal_layers(g, dec);
  ordered_json doc;
  doc["schema"] = 1;
  doc["semi"] = which;
  doc["degmax"] = semi.degmax();
  doc["layers"] = ordered_json::array();
  for (std::size_t i = 0; i < dec.layers.size(); ++i) {
    ordered_json layer;
    layer["index"] = i + 1;
    layer["size"] = dec.layers[i].size();
    ordered_json edges = ordered_json::array();
    for (const ss::Edge& e : dec.layers[i]) edges.push_back({e.a + 1, e.b + 1});
    layer["edges"] = edges;
    layer["maximal"] = maximal[i].ok;
    doc["layers"].push_back(layer);
  }
  bool all_ok = true;
  for (const auto& check : maximal) all_ok = all_ok && check.ok;
  doc["all_layers_maximal"] = all_ok;
  if (which == "optimal") {
    auto maximum = ss::verify_maximum_layers(g, dec);
    bool max_ok = true;
    for (std::size_t i = 0; i < maximum.size(); ++i) {
      doc["layers"][i]["maximum"] = maximum[i].ok;
      max_ok = max_ok && maximum[i].ok;
    }
    doc["all_layers_maximum"] = max_ok;
    all_ok = all_ok && max_ok;
  }
  ss::LogBoundReport log_bound = ss::check_log_bound(g);
  doc["log_bound"] = {{"semi2_degmax", log_bound.semi2_degmax},
                      {"optimal_degmax", log_bound.optimal_degmax},
                      {"ratio", log_bound.ratio},
                      {"factor", log_bound.bound_factor},
                      {"ok", log_bound.ok}};
  write_or_print(doc.dump(2) + "\n", report);
  return all_ok && log_bound.ok ? 0 : 1;
}

int run_eval(const std::string& spec_path, const std::string& out, const std::string& format) {
  ss::ExperimentSpec spec = ss::parse_experiment_spec_file(spec_path);
  std::vector<ss::ResultRecord> records = ss::run_experiment(spec);
  write_or_print(ss::emit(records, ss::parse_output_format(format), spec.include_timing), out);
  return ss::all_bounds_ok(records) ? 0 : 1;
}

int run_bench(const std::string& sizes_csv, const std::string& algos_csv, std::uint64_t seed,
              const std::string& out, const std::string& format) {
  ss::ExperimentSpec spec;
  spec.include_timing = true;
  std::istringstream sizes(sizes_csv);
  std::string token;
  while (std::getline(sizes, token, ',')) {
    int n = std::stoi(token);
    if (n < 2) throw ss::ArgumentError("bench sizes must be >= 2");
    ss::InstanceSpec inst;
    inst.kind = "random";
    inst.n = n;
    inst.m = n;
    inst.p = 4.0 / n;
    inst.seed = seed;
    inst.patch_isolated = true;
    spec.instances.push_back(inst);
  }
  std::istringstream algos(algos_csv);
  while (std::getline(algos, token, ',')) {
    ss::AlgorithmSpec algo;
    algo.name = token;
    if (token == "onepass") algo.eps = 0.5;
    if (token == "incomplete" || token == "asemi") {
      throw ss::ArgumentError("bench drives onepass|multipass|greedy|optimal|semi2");
    }
    spec.algorithms.push_back(algo);
  }
  spec.orders.push_back(ss::OrderSpec{ss::StreamOrder::UniformRandom, seed});
  std::vector<ss::ResultRecord> records = ss::run_experiment(spec);
  write_or_print(ss::emit(records, ss::parse_output_format(format), true), out);
  return ss::all_bounds_ok(records) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-matching toolkit: exact solvers, streaming approximations, "
               "skeleton protocols and structure checks"};
  app.require_subcommand(1);

  std::string out;
  std::string format = "json-lines";
  std::uint64_t seed = 0;
  app.add_option("--out", out, "output path (default: stdout)");
  app.add_option("--format", format, "json-lines | csv");
  app.add_option("--seed", seed, "global seed");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string gen_kind = "random";
  int gen_n = 8, gen_m = 8, gen_c = 1;
  double gen_p = 0.5, gen_eps = 0.0;
  std::vector<int> gen_subset;
  gen->add_option("--kind", gen_kind, "complete | random | hard_g1 | matching_g2");
  gen->add_option("-n,--na", gen_n, "|A|");
  gen->add_option("-m,--nb", gen_m, "|B|");
  gen->add_option("--p", gen_p, "edge probability (random)");
  gen->add_option("--c", gen_c, "skeleton size parameter (hard_g1)");
  gen->add_option("--eps", gen_eps, "epsilon (hard_g1)");
  gen->add_option("--subset", gen_subset, "matched A subset (matching_g2), 0-indexed");

  auto* solve = app.add_subcommand("solve", "exact semi-matchings");
  std::string solve_in, solve_algo = "optimal";
  solve->add_option("--in", solve_in, "input graph")->required();
  solve->add_option("--algo", solve_algo, "optimal | semi2 | brute");

  auto* stream = app.add_subcommand("stream", "streaming approximations");
  std::string stream_in, stream_algo = "onepass", stream_order = "as-given";
  double stream_eps = 0.0;
  stream->add_option("--in", stream_in, "input graph")->required();
  stream->add_option("--algo", stream_algo, "onepass | multipass | greedy");
  stream->add_option("--eps", stream_eps, "space exponent (onepass)");
  stream->add_option("--order", stream_order, "as-given | random | adversarial | vertex-arrival");

  auto* skeleton = app.add_subcommand("skeleton", "skeleton construction");
  std::string sk_in, sk_kind = "sqrt";
  skeleton->add_option("--in", sk_in, "input graph")->required();
  skeleton->add_option("--kind", sk_kind, "sqrt | cuberoot");

  auto* protocol = app.add_subcommand("protocol", "one-way two-party protocol");
  std::string pr_in, pr_split = "random:0", pr_kind = "sqrt";
  protocol->add_option("--in", pr_in, "input graph")->required();
  protocol->add_option("--split", pr_split, "random:<seed> | file:<path>");
  protocol->add_option("--kind", pr_kind, "sqrt | cuberoot");

  auto* decompose = app.add_subcommand("decompose", "matching decompositions");
  std::string dc_in, dc_semi = "semi2", dc_report;
  decompose->add_option("--in", dc_in, "input graph")->required();
  decompose->add_option("--semi", dc_semi, "semi2 | optimal");
  decompose->add_option("--report", dc_report, "report path (default: stdout)");

  auto* eval = app.add_subcommand("eval", "run an experiment spec");
  std::string ev_spec;
  eval->add_option("--spec", ev_spec, "experiment spec (JSON)")->required();

  auto* bench = app.add_subcommand("bench", "timing sweep over generated instances");
  std::string be_sizes = "50,100,200", be_algos = "onepass,multipass";
  bench->add_option("--sizes", be_sizes, "comma-separated |A| values");
  bench->add_option("--algos", be_algos, "comma-separated algorithms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_m, gen_p, gen_c, gen_eps, seed,
                                      gen_subset, out);
    if (solve->parsed()) return run_solve(solve_in, solve_algo, out);
    if (stream->parsed()) return run_stream(stream_in, stream_algo, stream_eps, stream_order,
                                            seed, out);
    if (skeleton->parsed()) return run_skeleton(sk_in, sk_kind, out);
    if (protocol->parsed()) return run_protocol(pr_in, pr_split, pr_kind, out);
    if (decompose->parsed()) return run_decompose(dc_in, dc_semi, dc_report.empty() ? out : dc_report);
    if (eval->parsed()) return run_eval(ev_spec, out, format);
    if (bench->parsed()) return run_bench(be_sizes, be_algos, seed, out, format);
  } catch (const ss::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
