#include "semistream/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "semistream/errors.hpp"
#include "semistream/exact.hpp"
#include "semistream/generators.hpp"
#include "semistream/io.hpp"
#include "semistream/rng.hpp"
#include "semistream/streaming.hpp"
#include "semistream/util.hpp"

namespace semistream {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kExactGuard = 2000;
constexpr int kOracleGuard = 8;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ArgumentError(path + ": " + message);
}

int require_int(const json& j, const std::string& path, const char* key, int min_value,
                std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required field");
  }
  if (!j[key].is_number_integer()) fail(path + "." + key, "must be an integer");
  int v = j[key].get<int>();
  if (v < min_value) fail(path + "." + key, "must be >= " + std::to_string(min_value));
  return v;
}

double require_double(const json& j, const std::string& path, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(path + "." + key, "must be a number");
  return j[key].get<double>();
}

std::uint64_t require_seed(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) return 0;
  if (!j[key].is_number_unsigned() && !j[key].is_number_integer()) {
    fail(path + "." + key, "must be an integer seed");
  }
  return j[key].get<std::uint64_t>();
}

}  // namespace

ExperimentSpec parse_experiment_spec(const json& doc) {
  ExperimentSpec spec;
  if (!doc.is_object()) fail("$", "spec must be a JSON object");
  if (doc.contains("schema")) {
    if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != 1) {
      fail("schema", "unsupported schema version");
    }
  }
  if (!doc.contains("instances") || !doc["instances"].is_array() || doc["instances"].empty()) {
    fail("instances", "must be a non-empty array");
  }
  for (std::size_t i = 0; i < doc["instances"].size(); ++i) {
    const std::string path = "instances[" + std::to_string(i) + "]";
    const json& item = doc["instances"][i];
    InstanceSpec inst;
    if (item.contains("file")) {
      if (!item["file"].is_string()) fail(path + ".file", "must be a string");
      inst.file = item["file"].get<std::string>();
    } else if (item.contains("generator")) {
      const json& gen = item["generator"];
      const std::string gpath = path + ".generator";
      if (!gen.is_object() || !gen.contains("kind") || !gen["kind"].is_string()) {
        fail(gpath + ".kind", "missing generator kind");
      }
      inst.kind = gen["kind"].get<std::string>();
      inst.count = require_int(gen, gpath, "count", 1, 1);
      inst.seed = require_seed(gen, gpath, "seed");
      if (inst.kind == "complete") {
        inst.n = require_int(gen, gpath, "n", 1);
        inst.m = require_int(gen, gpath, "m", 1);
      } else if (inst.kind == "random") {
        inst.n = require_int(gen, gpath, "n", 1);
        inst.m = require_int(gen, gpath, "m", 1);
        inst.p = require_double(gen, gpath, "p", 0.5);
        if (inst.p < 0.0 || inst.p > 1.0) fail(gpath + ".p", "must lie in [0, 1]");
        if (gen.contains("patch_isolated")) {
          if (!gen["patch_isolated"].is_boolean()) fail(gpath + ".patch_isolated", "must be a bool");
          inst.patch_isolated = gen["patch_isolated"].get<bool>();
        }
      } else if (inst.kind == "hard_g1") {
        inst.n = require_int(gen, gpath, "n", 1);
        inst.c = require_int(gen, gpath, "c", 1, 1);
        inst.eps = require_double(gen, gpath, "eps", 0.0);
      } else if (inst.kind == "matching_g2") {
        inst.n = require_int(gen, gpath, "n", 1);
        if (!gen.contains("subset") || !gen["subset"].is_array()) {
          fail(gpath + ".subset", "must be an array of A vertices");
        }
        for (const auto& v : gen["subset"]) {
          if (!v.is_number_integer()) fail(gpath + ".subset", "entries must be integers");
          inst.subset.push_back(v.get<int>());
        }
      } else {
        fail(gpath + ".kind", "unknown kind '" + inst.kind + "'");
      }
    } else {
      fail(path, "needs either 'file' or 'generator'");
    }
    spec.instances.push_back(std::move(inst));
  }

  if (!doc.contains("algorithms") || !doc["algorithms"].is_array() || doc["algorithms"].empty()) {
    fail("algorithms", "must be a non-empty array");
  }
  for (std::size_t i = 0; i < doc["algorithms"].size(); ++i) {
    const std::string path = "algorithms[" + std::to_string(i) + "]";
    const json& item = doc["algorithms"][i];
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string()) {
      fail(path + ".name", "missing algorithm name");
    }
    AlgorithmSpec algo;
    algo.name = item["name"].get<std::string>();
    if (algo.name == "onepass") {
      algo.eps = require_double(item, path, "eps", 0.0);
      if (algo.eps < 0.0 || algo.eps > 1.0) fail(path + ".eps", "must lie in [0, 1]");
    } else if (algo.name == "incomplete" || algo.name == "asemi") {
      algo.s = require_int(item, path, "s", 1);
      algo.d = require_int(item, path, "d", 1);
      if (algo.name == "asemi") algo.p = require_int(item, path, "p", 1, 1);
    } else if (algo.name != "multipass" && algo.name != "greedy" && algo.name != "optimal" &&
               algo.name != "semi2") {
      fail(path + ".name", "unknown algorithm '" + algo.name + "'");
    }
    spec.algorithms.push_back(std::move(algo));
  }

  if (doc.contains("orders")) {
    if (!doc["orders"].is_array() || doc["orders"].empty()) {
      fail("orders", "must be a non-empty array");
    }
    for (std::size_t i = 0; i < doc["orders"].size(); ++i) {
      const std::string path = "orders[" + std::to_string(i) + "]";
      const json& item = doc["orders"][i];
      OrderSpec order;
      if (!item.is_object() || !item.contains("policy") || !item["policy"].is_string()) {
        fail(path + ".policy", "missing stream policy");
      }
      try {
        order.policy = parse_stream_order(item["policy"].get<std::string>());
      } catch (const ArgumentError& e) {
        fail(path + ".policy", e.what());
      }
      order.seed = require_seed(item, path, "seed");
      spec.orders.push_back(order);
    }
  } else {
    spec.orders.push_back(OrderSpec{});
  }

  spec.repetitions = require_int(doc, "$", "repetitions", 0, 1);
  if (doc.contains("include_timing")) {
    if (!doc["include_timing"].is_boolean()) fail("include_timing", "must be a bool");
    spec.include_timing = doc["include_timing"].get<bool>();
  }
  return spec;
}

ExperimentSpec parse_experiment_spec_file(const std::string& path) {
  json doc = json::parse(read_text_file(path));
  return parse_experiment_spec(doc);
}

namespace {

struct Instance {
  std::string label;
  BipartiteGraph graph;
};

BipartiteGraph patch_isolated_vertices(BipartiteGraph g, std::uint64_t seed) {
  std::vector<int> isolated;
  for (int a = 0; a < g.num_a(); ++a) {
    if (g.degree_a(a) == 0) isolated.push_back(a);
  }
  if (isolated.empty()) return g;
  std::mt19937_64 gen(rng::mix(seed ^ 0x1509ac2d1ULL));
  std::vector<Edge> edges = g.edges();
  for (int a : isolated) {
    edges.push_back(Edge{a, static_cast<int>(rng::below(gen, static_cast<std::uint64_t>(g.num_b())))});
  }
  return BipartiteGraph(g.num_a(), g.num_b(), std::move(edges));
}

std::vector<Instance> expand_instances(const ExperimentSpec& spec) {
  std::vector<Instance> out;
  for (const InstanceSpec& inst : spec.instances) {
    if (!inst.file.empty()) {
      BipartiteGraph g = load_graph_file(inst.file);
      out.push_back(Instance{inst.file, std::move(g)});
      continue;
    }
    for (int i = 0; i < inst.count; ++i) {
      std::uint64_t seed = inst.seed + static_cast<std::uint64_t>(i);
      std::ostringstream label;
      if (inst.kind == "complete") {
        label << "complete(n=" << inst.n << ",m=" << inst.m << ")";
        if (inst.count > 1) label << "#" << i;
        out.push_back(Instance{label.str(), make_complete(inst.n, inst.m)});
      } else if (inst.kind == "random") {
        BipartiteGraph g = make_random(inst.n, inst.m, inst.p, seed);
        if (inst.patch_isolated) g = patch_isolated_vertices(std::move(g), seed);
        label << "random(n=" << inst.n << ",m=" << inst.m << ",p=" << inst.p << ",seed=" << seed
              << ")";
        out.push_back(Instance{label.str(), std::move(g)});
      } else if (inst.kind == "hard_g1") {
        label << "hard_g1(n=" << inst.n << ",c=" << inst.c << ",eps=" << inst.eps
              << ",seed=" << seed << ")";
        out.push_back(Instance{label.str(), make_hard_g1(inst.n, inst.c, inst.eps, seed)});
      } else {
        label << "matching_g2(n=" << inst.n << ",|subset|=" << inst.subset.size() << ")";
        out.push_back(Instance{label.str(), make_matching_g2(inst.n, inst.subset)});
      }
    }
  }
  return out;
}

std::string algorithm_label(const AlgorithmSpec& algo) {
  std::ostringstream out;
  out << algo.name;
  if (algo.name == "onepass") out << "(eps=" << algo.eps << ")";
  if (algo.name == "incomplete") out << "(s=" << algo.s << ",d=" << algo.d << ")";
  if (algo.name == "asemi") out << "(s=" << algo.s << ",d=" << algo.d << ",p=" << algo.p << ")";
  return out.str();
}

std::string order_label(const OrderSpec& order) {
  std::ostringstream out;
  out << stream_order_name(order.policy) << "(seed=" << order.seed << ")";
  return out.str();
}

ResultRecord run_task(const Instance& inst, const AlgorithmSpec& algo, const OrderSpec& order,
                      int rep) {
  const BipartiteGraph& g = inst.graph;
  ResultRecord rec;
  rec.instance = inst.label;
  rec.algorithm = algorithm_label(algo);
  rec.rep = rep;
  rec.n = g.num_a();
  rec.m = g.num_b();
  rec.num_edges = g.num_edges();

  // Repetitions perturb the order seed deterministically.
  std::uint64_t seed = rep == 0 ? order.seed : rng::mix(order.seed ^ static_cast<std::uint64_t>(rep));
  OrderSpec effective{order.policy, seed};
  // The online greedy is only defined on vertex-arrival streams.
  if (algo.name == "greedy") effective.policy = StreamOrder::VertexArrival;
  rec.order = order_label(effective);

  auto started = std::chrono::steady_clock::now();
  EdgeStream stream = make_stream(g, effective.policy, effective.seed);

  int d_star = -1;
  if (g.num_a() <= kExactGuard) {
    d_star = optimal_semi(g).degmax();
    if (g.num_a() <= kOracleGuard) {
      try {
        if (brute_force_semi(g).degmax() != d_star) {
          throw std::logic_error("internal: exact solver disagrees with the brute-force oracle");
        }
      } catch (const GuardExceededError&) {
        // wide instances can exceed the enumeration guard even at n <= 8
      }
    }
  }

  auto finish = [&](int degmax, int size, bool complete, const SpaceLedger& ledger) {
    rec.degmax = degmax;
    rec.size = size;
    rec.complete = complete;
    rec.peak_edges = ledger.peak_edges;
    rec.passes = ledger.passes;
    rec.d_star = d_star;
    if (d_star > 0) rec.ratio = static_cast<double>(degmax) / d_star;
  };

  const int n = g.num_a();
  if (algo.name == "onepass") {
    auto res = one_pass_semi(stream, algo.eps);
    finish(res.semi.degmax(), res.semi.size(), res.semi.complete(), res.ledger);
    if (d_star > 0) {
      rec.bound_known = true;
      rec.bound = 4.0 * std::pow(n, (1.0 - algo.eps) / 2.0) * d_star;
      rec.bound_ok = rec.degmax <= rec.bound + 1e-9;
    }
  } else if (algo.name == "multipass") {
    auto res = multipass_semi(stream);
    finish(res.semi.degmax(), res.semi.size(), res.semi.complete(), res.ledger);
    if (d_star > 0) {
      rec.bound_known = true;
      rec.bound = 4.0 * ceil_log2(n) * d_star;
      rec.bound_ok = rec.degmax <= rec.bound;
    }
  } else if (algo.name == "greedy") {
    SemiMatching semi = online_greedy(stream);
    SpaceLedger ledger;
    ledger.passes = 1;
    ledger.note(static_cast<std::size_t>(semi.size()));
    finish(semi.degmax(), semi.size(), semi.complete(), ledger);
    if (d_star > 0) {
      rec.bound_known = true;
      rec.bound = static_cast<double>(ceil_log2(n + 1)) * d_star;
      rec.bound_ok = rec.degmax <= rec.bound;
    }
  } else if (algo.name == "optimal") {
    SemiMatching semi = optimal_semi(g);
    SpaceLedger ledger;
    ledger.passes = 1;
    ledger.note(static_cast<std::size_t>(g.num_edges()));
    finish(semi.degmax(), semi.size(), semi.complete(), ledger);
    if (d_star > 0) {
      rec.bound_known = true;
      rec.bound = d_star;
      rec.bound_ok = rec.degmax == d_star;
    }
  } else if (algo.name == "semi2") {
    SemiMatching semi = semi2(g);
    SpaceLedger ledger;
    ledger.passes = 1;
    ledger.note(static_cast<std::size_t>(g.num_edges()));
    finish(semi.degmax(), semi.size(), semi.complete(), ledger);
    if (d_star > 0) {
      rec.bound_known = true;
      rec.bound = static_cast<double>(ceil_log2(n + 1)) * d_star;
      rec.bound_ok = rec.degmax <= rec.bound;
    }
  } else if (algo.name == "incomplete") {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    auto res = incomplete_pass(stream, all, algo.s, algo.d);
    finish(res.result.degmax(), res.result.size(), res.result.size() == n, res.ledger);
    rec.bound_known = true;
    rec.bound = 2.0 * algo.d;
    rec.bound_ok = rec.degmax <= 2 * algo.d;
    if (d_star > 0 && algo.d >= d_star) {
      // Lemma size bound, exact rational comparison.
      long long k = res.k;
      long long lhs = static_cast<long long>(rec.size) * (algo.d + d_star);
      long long rhs = static_cast<long long>(n) * algo.d + algo.d * k * (algo.d + d_star);
      bool size_ok = rec.size >= n || lhs >= rhs;
      rec.bound_ok = rec.bound_ok && size_ok;
    }
  } else if (algo.name == "asemi") {
    auto res = asemi(stream, algo.s, algo.d, algo.p);
    finish(res.result.degmax(), res.result.size(), res.result.size() == n, res.ledger);
    rec.bound_known = true;
    rec.bound = 2.0 * algo.d * algo.p;
    rec.bound_ok = rec.degmax <= 2 * algo.d * algo.p;
  } else {
    throw ArgumentError("unknown algorithm '" + algo.name + "'");
  }

  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          started)
                    .count();
  return rec;
}

}  // namespace

std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec) {
  std::vector<Instance> instances = expand_instances(spec);
  struct Task {
    const Instance* inst;
    const AlgorithmSpec* algo;
    const OrderSpec* order;
    int rep;
  };
  std::vector<Task> tasks;
  for (const Instance& inst : instances) {
    for (const AlgorithmSpec& algo : spec.algorithms) {
      for (const OrderSpec& order : spec.orders) {
        for (int rep = 0; rep < spec.repetitions; ++rep) {
          tasks.push_back(Task{&inst, &algo, &order, rep});
        }
      }
    }
  }
  std::vector<ResultRecord> records(tasks.size());
  if (tasks.empty()) return records;

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&]() {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      try {
        const Task& t = tasks[idx];
        records[idx] = run_task(*t.inst, *t.algo, *t.order, t.rep);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json-lines" || name == "jsonl") return OutputFormat::JsonLines;
  if (name == "csv") return OutputFormat::Csv;
  throw ArgumentError("unknown output format: " + std::string(name));
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_double(double v) {
  return ordered_json(v).dump();  // shortest round-trip form, matches the JSON emitter
}

}  // namespace

std::string emit(std::span<const ResultRecord> records, OutputFormat format,
                 bool include_timing) {
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "schema,instance,algorithm,order,rep,n,m,edges,degmax,size,complete,d_star,ratio,"
           "bound,bound_ok,peak_edges,passes";
    if (include_timing) out << ",wall_ms";
    out << '\n';
    for (const ResultRecord& r : records) {
      out << r.schema << ',' << csv_field(r.instance) << ',' << csv_field(r.algorithm) << ','
          << csv_field(r.order) << ',' << r.rep << ',' << r.n << ',' << r.m << ',' << r.num_edges
          << ',' << r.degmax << ',' << r.size << ',' << (r.complete ? "true" : "false") << ',';
      if (r.d_star >= 0) out << r.d_star;
      out << ',';
      if (r.d_star > 0) out << format_double(r.ratio);
      out << ',';
      if (r.bound_known) out << format_double(r.bound);
      out << ',';
      if (r.bound_known) out << (r.bound_ok ? "true" : "false");
      out << ',' << r.peak_edges << ',' << r.passes;
      if (include_timing) out << ',' << format_double(r.wall_ms);
      out << '\n';
    }
    return out.str();
  }

  for (const ResultRecord& r : records) {
    ordered_json line;
    line["schema"] = r.schema;
    line["instance"] = r.instance;
    line["algorithm"] = r.algorithm;
    line["order"] = r.order;
    line["rep"] = r.rep;
    line["n"] = r.n;
    line["m"] = r.m;
    line["edges"] = r.num_edges;
    line["degmax"] = r.degmax;
    line["size"] = r.size;
    line["complete"] = r.complete;
    if (r.d_star >= 0) {
      line["d_star"] = r.d_star;
    } else {
      line["d_star"] = nullptr;
    }
    if (r.d_star > 0) {
      line["ratio"] = r.ratio;
    } else {
      line["ratio"] = nullptr;
    }
    if (r.bound_known) {
      line["bound"] = r.bound;
      line["bound_ok"] = r.bound_ok;
    } else {
      line["bound"] = nullptr;
      line["bound_ok"] = nullptr;
    }
    line["peak_edges"] = r.peak_edges;
    line["passes"] = r.passes;
    if (include_timing) line["wall_ms"] = r.wall_ms;
    out << line.dump() << '\n';
  }
  return out.str();
}

bool all_bounds_ok(std::span<const ResultRecord> records) {
  for (const ResultRecord& r : records) {
    if (r.bound_known && !r.bound_ok) return false;
  }
  return true;
}

}  // namespace semistream
