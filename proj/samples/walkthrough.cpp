// Greedy vs optimum on a small spanning-tree instance, with alpha and the
// tree-move certificate.
#include <iostream>

#include "entcover/entcover.hpp"

int main() {
  using namespace entcover;
  const GraphInstance g(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  const auto f = mest_oracle(g);

  const auto trace = run_greedy(f);
  std::cout << "greedy cover:";
  for (auto x : trace.cover.x) std::cout << ' ' << x;
  std::cout << "  entropy " << entropy(trace.cover) << " bits\n";

  const auto opt = exact_cover(f);
  std::cout << "optimum entropy " << opt.entropy << " bits, " << opt.covers.size() << " optimal covers\n";

  const auto alpha = min_alpha(f, trace, opt.covers);
  std::cout << "alpha " << to_string(alpha.alpha) << ", bound " << alpha_bound(opt.entropy, to_double(alpha.alpha), f.total())
            << " bits\n";

  const auto beta = verify_beta_one(g);
  const auto& cert = beta.certificates.front();
  std::cout << "certificate " << (cert.passes() ? "passes" : "fails") << " with " << cert.transformation.moves.size()
            << " moves:\n";
  for (const auto& m : cert.transformation.moves)
    std::cout << "  " << to_string(m.kind) << " (" << m.removed.u << ',' << m.removed.v << ")@" << m.from_owner << " -> ("
              << m.added.u << ',' << m.added.v << ")@" << m.to_owner << '\n';
}
