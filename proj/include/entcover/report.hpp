// End-to-end analysis of one instance and its JSON form.
//
// JSON schema (one object per instance; entropies in bits, times in seconds):
//   id, kind, ground_size, total
//   greedy: {order, deltas, cover, tie_break, entropy_bits}
//   exact:  {entropy_bits, optimal_covers}                     (when computed)
//   alpha:  {value, numerator, denominator, cover_index}       (when computed)
//   bound:  {alpha_rhs_bits, alpha_slack_bits, unit_rhs_bits, unit_slack_bits, holds}
//   beta:   {certified, solutions, moves, nonlocal_moves, levels, biased,
//            admissible, loads_ok, capacity_violations, witness}  (mest only)
//   ok, elapsed_seconds
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "entcover/certify.hpp"
#include "entcover/exact.hpp"
#include "entcover/flow.hpp"
#include "entcover/greedy.hpp"
#include "entcover/instances.hpp"
#include "entcover/io.hpp"

namespace entcover {

struct BetaSummary {
  bool certified = false;
  std::size_t solutions = 0;
  std::size_t moves = 0;
  int nonlocal_moves = 0;
  int levels = 0;
  bool biased = false;
  bool admissible = false;
  bool loads_ok = false;
  int capacity_violations = 0;
  std::string witness;
  double corollary_rhs = 0.0;  // optimal + log2 e
  bool corollary_holds = false;
};

struct Report {
  std::string id;
  ProblemKind kind = ProblemKind::Mesc;
  int ground_size = 0;
  std::int64_t total = 0;

  GreedyTrace trace;
  std::string tie_break;
  double greedy_entropy = 0.0;

  std::optional<double> exact_entropy;
  std::size_t optimal_covers = 0;
  std::optional<AlphaResult> alpha;

  double alpha_rhs = 0.0;  // (1/alpha)(opt + log2 e) + (1 - 1/alpha) log2 N
  double unit_rhs = 0.0;   // opt + log2 e
  bool bound_holds = true;

  std::optional<BetaSummary> beta;
  double elapsed_seconds = 0.0;

  /// All applicable checks hold: the alpha-form bound, alpha = 1 for set
  /// cover and orientation, and the beta certificate for spanning trees.
  bool ok() const {
    if (!bound_holds) return false;
    if (kind != ProblemKind::Mest && alpha && alpha->alpha != Rational(1)) return false;
    if (beta && !(beta->certified && beta->corollary_holds)) return false;
    return true;
  }
};

struct AnalyzeOptions {
  TieBreak tie = TieBreak::lowest_index();
  bool exact = true;
  bool all_solutions = false;  // certify every optimal spanning tree
};

inline PolymatroidOracle oracle_for(const Instance& inst, ProblemKind kind) {
  if (const auto* sc = std::get_if<SetCoverInstance>(&inst)) {
    if (kind != ProblemKind::Mesc) throw InputError("a set cover file only supports --kind mesc");
    return mesc_oracle(*sc);
  }
  const auto& g = std::get<GraphInstance>(inst);
  if (kind == ProblemKind::Mesc) throw InputError("a graph file needs --kind meo or mest");
  return oracle_for(g, kind);
}

inline ProblemKind default_kind(const Instance& inst) {
  return std::holds_alternative<SetCoverInstance>(inst) ? ProblemKind::Mesc : ProblemKind::Meo;
}

inline Report analyze(const Instance& inst, ProblemKind kind, const AnalyzeOptions& opt = {}, std::string id = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto f = oracle_for(inst, kind);
  Report r;
  r.id = std::move(id);
  r.kind = kind;
  r.ground_size = f.size();
  r.total = f.total();
  r.trace = run_greedy(f, opt.tie);
  r.tie_break = opt.tie.name();
  r.greedy_entropy = entropy(r.trace.cover);

  if (opt.exact) {
    const auto best = exact_cover(f);
    r.exact_entropy = best.entropy;
    r.optimal_covers = best.covers.size();
    r.alpha = min_alpha(f, r.trace, best.covers);
    const double a = to_double(r.alpha->alpha);
    r.alpha_rhs = alpha_bound(best.entropy, a, r.total);
    r.unit_rhs = best.entropy + kLog2E;
    r.bound_holds = r.greedy_entropy <= r.alpha_rhs + kBoundSlack;

    if (kind == ProblemKind::Mest) {
      const auto& g = std::get<GraphInstance>(inst);
      const auto rep = verify_beta_one(g, opt.all_solutions, opt.tie);
      BetaSummary b;
      b.certified = rep.certified();
      b.solutions = rep.certificates.size();
      b.biased = b.admissible = b.loads_ok = true;
      for (const auto& c : rep.certificates) {
        b.moves += c.transformation.moves.size();
        b.nonlocal_moves += c.transformation.nonlocal_moves;
        b.levels = std::max(b.levels, c.transformation.flow.levels);
        b.biased = b.biased && c.biased;
        b.admissible = b.admissible && c.admissible.ok;
        b.loads_ok = b.loads_ok && c.loads_ok;
        b.capacity_violations += c.capacity_violations;
        if (b.witness.empty() && !c.admissible.ok) b.witness = c.admissible.reason;
      }
      b.corollary_rhs = rep.bound_rhs;
      b.corollary_holds = rep.bound_holds;
      r.beta = b;
    }
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json j;
  j["id"] = r.id;
  j["kind"] = to_string(r.kind);
  j["ground_size"] = r.ground_size;
  j["total"] = r.total;
  j["greedy"] = {{"order", r.trace.order},
                 {"deltas", r.trace.deltas},
                 {"cover", r.trace.cover.x},
                 {"tie_break", r.tie_break},
                 {"entropy_bits", r.greedy_entropy}};
  if (r.exact_entropy) j["exact"] = {{"entropy_bits", *r.exact_entropy}, {"optimal_covers", r.optimal_covers}};
  if (r.alpha)
    j["alpha"] = {{"value", to_double(r.alpha->alpha)},
                  {"numerator", r.alpha->alpha.numerator()},
                  {"denominator", r.alpha->alpha.denominator()},
                  {"cover_index", r.alpha->cover_index}};
  if (r.exact_entropy)
    j["bound"] = {{"alpha_rhs_bits", r.alpha_rhs},
                  {"alpha_slack_bits", r.alpha_rhs - r.greedy_entropy},
                  {"unit_rhs_bits", r.unit_rhs},
                  {"unit_slack_bits", r.unit_rhs - r.greedy_entropy},
                  {"holds", r.bound_holds}};
  if (r.beta) {
    const auto& b = *r.beta;
    j["beta"] = {{"certified", b.certified},
                 {"solutions", b.solutions},
                 {"moves", b.moves},
                 {"nonlocal_moves", b.nonlocal_moves},
                 {"levels", b.levels},
                 {"biased", b.biased},
                 {"admissible", b.admissible},
                 {"loads_ok", b.loads_ok},
                 {"capacity_violations", b.capacity_violations},
                 {"witness", b.witness},
                 {"corollary_rhs_bits", b.corollary_rhs},
                 {"corollary_holds", b.corollary_holds}};
  }
  j["ok"] = r.ok();
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace entcover
