// entcover: greedy, exact optimum, alpha, and the spanning-tree certificate
// from the command line.
//
// Exit codes: 0 all checks hold, 1 a bound or certificate check failed,
// 2 input error, 3 size guard exceeded, 4 internal invariant broken.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "entcover/entcover.hpp"

namespace fs = std::filesystem;
using namespace entcover;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInput = 2, kGuard = 3, kInternal = 4 };

std::string join(const auto& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

void print_text(const Report& r, std::ostream& out) {
  out << std::setprecision(10);
  if (!r.id.empty()) out << "id: " << r.id << '\n';
  out << "kind: " << to_string(r.kind) << "  ground: " << r.ground_size << "  f(U): " << r.total << '\n';
  out << "greedy order: " << join(r.trace.order) << '\n';
  out << "greedy deltas: " << join(r.trace.deltas) << '\n';
  out << "greedy cover: " << join(r.trace.cover.x) << '\n';
  out << "greedy entropy (bits): " << r.greedy_entropy << '\n';
  if (r.exact_entropy) {
    out << "exact entropy (bits): " << *r.exact_entropy << "  (" << r.optimal_covers << " optimal covers)\n";
    out << "alpha: " << to_string(r.alpha->alpha) << '\n';
    out << "bound (alpha form): " << r.greedy_entropy << " <= " << r.alpha_rhs << "  slack " << r.alpha_rhs - r.greedy_entropy
        << '\n';
    out << "bound (alpha = 1): " << r.greedy_entropy << " <= " << r.unit_rhs << "  slack " << r.unit_rhs - r.greedy_entropy
        << '\n';
  }
  if (r.beta) {
    const auto& b = *r.beta;
    out << "beta certificate: " << (b.certified ? "pass" : "FAIL") << "  solutions " << b.solutions << "  moves "
        << b.moves << "  nonlocal " << b.nonlocal_moves << "  levels " << b.levels << '\n';
    out << "  biased " << b.biased << "  admissible " << b.admissible << "  loads " << b.loads_ok
        << "  capacity diagnostics " << b.capacity_violations << '\n';
    if (!b.witness.empty()) out << "  witness: " << b.witness << '\n';
  }
  if (r.exact_entropy) out << "verdict: " << (r.ok() ? "ok" : "VIOLATION") << '\n';
}

int threads_from_env() {
  if (const char* s = std::getenv("ENTCOVER_THREADS")) {
    const int t = std::atoi(s);
    if (t > 0) return t;
  }
  return 1;
}

struct Job {
  std::string id;
  std::function<Instance()> load;
};

struct Outcome {
  std::optional<Report> report;
  int code = kOk;
  std::string error;
};

Outcome run_job(const Job& job, std::optional<ProblemKind> kind, const AnalyzeOptions& opt) {
  Outcome o;
  try {
    const auto inst = job.load();
    o.report = analyze(inst, kind.value_or(default_kind(inst)), opt, job.id);
    o.code = o.report->ok() ? kOk : kViolation;
  } catch (const InputError& e) {
    o.code = kInput;
    o.error = e.what();
  } catch (const GuardError& e) {
    o.code = kGuard;
    o.error = e.what();
  } catch (const InvariantError& e) {
    o.code = kInternal;
    o.error = e.what();
  }
  return o;
}

int worst(int a, int b) {
  // A violation outranks every other outcome; otherwise keep the larger code.
  if (a == kViolation || b == kViolation) return kViolation;
  return std::max(a, b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-entropy covers: greedy, exact optimum, alpha and the spanning-tree certificate"};
  app.require_subcommand(1);

  std::string file, kind_name, tie_name = "lowest", out_path, dir, seeds;
  bool json = false, all_solutions = false;
  int sets = 5, elements = 8, vertices = 6;
  double density = 0.35, edge_p = 0.4;
  std::uint64_t seed = 1;

  auto* greedy = app.add_subcommand("greedy", "Run greedy and print its trace");
  greedy->add_option("file", file, "Instance file")->required();
  greedy->add_option("--kind", kind_name, "mesc | meo | mest");
  greedy->add_option("--tie-break", tie_name, "lowest | highest | random:SEED");
  greedy->add_flag("--json", json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Greedy vs exact optimum, alpha, bound and certificate");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("--kind", kind_name, "mesc | meo | mest");
  verify->add_option("--tie-break", tie_name, "lowest | highest | random:SEED");
  verify->add_flag("--all-solutions", all_solutions, "Certify every optimal spanning tree");
  verify->add_flag("--json", json, "Emit JSON");

  auto* reduce = app.add_subcommand("reduce", "Build the set-cover to spanning-tree gadget");
  reduce->add_option("file", file, "Set cover instance file")->required();
  reduce->add_option("--out", out_path, "Write the gadget graph here");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", kind_name, "mesc | meo | mest")->required();
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--sets", sets, "Number of sets (mesc)");
  gen->add_option("--elements", elements, "Number of elements (mesc)");
  gen->add_option("--density", density, "Set membership probability (mesc)");
  gen->add_option("--vertices", vertices, "Number of vertices (meo, mest)");
  gen->add_option("--edge-p", edge_p, "Extra edge probability (meo, mest)");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* batch = app.add_subcommand("batch", "Verify a directory of instances or a seed range");
  batch->add_option("--dir", dir, "Directory of instance files");
  batch->add_option("--seeds", seeds, "Seed range A:B (inclusive A, exclusive B)");
  batch->add_option("--kind", kind_name, "mesc | meo | mest");
  batch->add_option("--tie-break", tie_name, "lowest | highest | random:SEED");
  batch->add_option("--sets", sets, "Number of sets (mesc seeds)");
  batch->add_option("--elements", elements, "Number of elements (mesc seeds)");
  batch->add_option("--density", density, "Set membership probability (mesc seeds)");
  batch->add_option("--vertices", vertices, "Number of vertices (graph seeds)");
  batch->add_option("--edge-p", edge_p, "Extra edge probability (graph seeds)");
  batch->add_flag("--json", json, "One JSON object per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    std::optional<ProblemKind> kind;
    if (!kind_name.empty()) kind = parse_kind(kind_name);
    AnalyzeOptions opt;
    opt.tie = TieBreak::parse(tie_name);
    opt.all_solutions = all_solutions;

    if (*greedy || *verify) {
      opt.exact = verify->parsed();
      const auto inst = load_instance(file);
      const auto r = analyze(inst, kind.value_or(default_kind(inst)), opt, fs::path(file).filename().string());
      if (json)
        std::cout << to_json(r).dump() << '\n';
      else
        print_text(r, std::cout);
      return r.ok() ? kOk : kViolation;
    }

    if (*reduce) {
      const auto inst = load_instance(file);
      const auto* sc = std::get_if<SetCoverInstance>(&inst);
      if (!sc) throw InputError("reduce needs a set cover instance");
      const auto gadget = hardness_gadget(*sc);
      const int m = sc->n_sets(), n = sc->n_elements();
      if (out_path.empty()) {
        std::cout << serialize_instance(gadget.graph);
      } else {
        std::ofstream(out_path) << serialize_instance(gadget.graph);
      }
      std::cerr << std::setprecision(12) << "gadget: " << gadget.graph.n_vertices() << " vertices, "
                << gadget.graph.n_edges() << " edges\n"
                << "threshold map (stated form): mu = " << reduction_entropy_relation(m, n, 0.0) << " + "
                << n / (2.0 * (m + n)) << " * lambda\n"
                << "threshold map (tree edge count): mu = " << gadget_entropy_threshold(m, n, 0.0) << " + "
                << n / (2.0 * (m + n) - 1.0) << " * lambda\n";
      return kOk;
    }

    if (*gen) {
      const auto k = parse_kind(kind_name);
      const std::string text = k == ProblemKind::Mesc ? serialize_instance(random_set_cover(sets, elements, density, seed))
                                                      : serialize_instance(random_connected_graph(vertices, edge_p, seed));
      if (out_path.empty())
        std::cout << text;
      else
        std::ofstream(out_path) << text;
      return kOk;
    }

    // batch
    std::vector<Job> jobs;
    if (!dir.empty()) {
      if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file()) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& p : files) jobs.push_back({p.filename().string(), [p] { return load_instance(p.string()); }});
    } else if (!seeds.empty()) {
      const auto colon = seeds.find(':');
      if (colon == std::string::npos) throw InputError("--seeds expects A:B");
      std::uint64_t a = 0, b = 0;
      try {
        a = std::stoull(seeds.substr(0, colon));
        b = std::stoull(seeds.substr(colon + 1));
      } catch (const std::exception&) {
        throw InputError("--seeds expects A:B");
      }
      const auto k = kind.value_or(ProblemKind::Mesc);
      kind = k;
      for (auto s = a; s < b; ++s)
        jobs.push_back({"seed-" + std::to_string(s), [=]() -> Instance {
                          if (k == ProblemKind::Mesc) return random_set_cover(sets, elements, density, s);
                          return random_connected_graph(vertices, edge_p, s);
                        }});
    } else {
      throw InputError("batch needs --dir or --seeds");
    }

    std::vector<Outcome> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next++) < jobs.size();) results[i] = run_job(jobs[i], kind, opt);
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min<int>(threads_from_env(), static_cast<int>(std::max<std::size_t>(1, jobs.size())));
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = kOk;
    int violations = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const auto& o = results[i];
      code = worst(code, o.code);
      if (o.code == kViolation) ++violations;
      if (json) {
        nlohmann::json j = o.report ? to_json(*o.report) : nlohmann::json{{"id", jobs[i].id}, {"ok", false}};
        if (!o.error.empty()) j["error"] = o.error;
        std::cout << j.dump() << '\n';
      } else if (o.report) {
        std::cout << std::setprecision(8) << jobs[i].id << ": greedy " << o.report->greedy_entropy << " exact "
                  << *o.report->exact_entropy << " alpha " << to_string(o.report->alpha->alpha) << " slack "
                  << o.report->alpha_rhs - o.report->greedy_entropy << (o.report->ok() ? " ok" : " VIOLATION") << '\n';
      } else {
        std::cout << jobs[i].id << ": error: " << o.error << '\n';
      }
    }
    if (!json) std::cerr << jobs.size() << " instances, " << violations << " violations\n";
    return code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << " (exact checks are limited to 8 sets or vertices and f(U) <= 20; use greedy)\n";
    return kGuard;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
