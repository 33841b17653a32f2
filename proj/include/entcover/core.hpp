// Ground sets, covers, the entropy objective and the polymatroid oracle.
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entcover {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (files, arguments, covers).
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An exhaustive routine was asked to run beyond its size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Signals a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Subsets
// ---------------------------------------------------------------------------

/// Subset of the ground set {0..m-1}, bit i set iff element i is present.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 63;

constexpr Mask bit(int i) noexcept { return Mask{1} << i; }
constexpr Mask full_mask(int m) noexcept { return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1; }
constexpr bool contains(Mask s, int i) noexcept { return (s >> i) & 1U; }
constexpr int popcount(Mask s) noexcept { return std::popcount(s); }

inline std::vector<int> elements_of(Mask s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline std::string mask_to_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int i : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Ground set and oracle
// ---------------------------------------------------------------------------

class GroundSet {
 public:
  explicit GroundSet(int m, std::vector<std::string> labels = {}) : m_(m), labels_(std::move(labels)) {
    if (m_ < 1) throw InputError("ground set must have at least one element");
    if (m_ > kMaxGround) throw GuardError("ground set larger than 63 elements");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != m_)
      throw InputError("label count does not match ground set size");
  }

  int size() const noexcept { return m_; }
  Mask all() const noexcept { return full_mask(m_); }

  std::string label(int i) const {
    return labels_.empty() ? std::to_string(i) : labels_[static_cast<std::size_t>(i)];
  }

 private:
  int m_;
  std::vector<std::string> labels_;
};

/// An integer-valued set function on a ground set. The wrapped callable must
/// be deterministic; polymatroid properties are checked by check_polymatroid,
/// not assumed.
class PolymatroidOracle {
 public:
  using Fn = std::function<std::int64_t(Mask)>;

  PolymatroidOracle(GroundSet ground, Fn eval) : ground_(std::move(ground)), eval_(std::move(eval)) {}

  const GroundSet& ground() const noexcept { return ground_; }
  int size() const noexcept { return ground_.size(); }

  std::int64_t operator()(Mask s) const { return eval_(s); }
  std::int64_t eval(Mask s) const { return eval_(s); }

  /// N = f(U).
  std::int64_t total() const { return eval_(ground_.all()); }
  std::int64_t singleton(int i) const { return eval_(bit(i)); }

 private:
  GroundSet ground_;
  Fn eval_;
};

// ---------------------------------------------------------------------------
// Covers and entropy
// ---------------------------------------------------------------------------

/// Integer allocation X_j per ground element.
struct Cover {
  std::vector<std::int64_t> x;

  Cover() = default;
  explicit Cover(std::vector<std::int64_t> values) : x(std::move(values)) {}

  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto v : x) s += v;
    return s;
  }
  std::size_t size() const noexcept { return x.size(); }

  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

inline constexpr double kLog2E = std::numbers::log2e;

/// -p log2 p with the 0 log 0 = 0 convention.
inline double plogp_term(std::int64_t part, std::int64_t total) {
  if (part <= 0) return 0.0;
  const double p = static_cast<double>(part) / static_cast<double>(total);
  return -p * std::log2(p);
}

/// Shannon entropy in bits of the distribution x / sum(x).
inline double entropy(std::span<const std::int64_t> x) {
  std::int64_t n = 0;
  for (auto v : x) {
    if (v < 0) throw InputError("negative allocation in cover");
    n += v;
  }
  if (n <= 0) throw InputError("degenerate cover");
  double h = 0.0;
  for (auto v : x) h += plogp_term(v, n);
  return h;
}

inline double entropy(const Cover& c) { return entropy(std::span<const std::int64_t>(c.x)); }

inline std::vector<double> to_distribution(const Cover& c) {
  const std::int64_t n = c.total();
  if (n <= 0) throw InputError("degenerate cover");
  std::vector<double> p;
  p.reserve(c.size());
  for (auto v : c.x) p.push_back(static_cast<double>(v) / static_cast<double>(n));
  return p;
}

// ---------------------------------------------------------------------------
// Exhaustive checks
// ---------------------------------------------------------------------------

struct CoverCheck {
  bool ok = true;
  std::optional<Mask> witness;  // first violated subset, if any
  explicit operator bool() const noexcept { return ok; }
};

inline constexpr int kMaxValidateGround = 24;

/// Checks x_j >= 0, sum x = f(U) and x(S) <= f(S) for all 2^m subsets.
/// Totality is checked first (witness U), then singletons, then every subset
/// in increasing mask order.
inline CoverCheck validate_cover(const PolymatroidOracle& f, const Cover& cover) {
  const int m = f.size();
  if (static_cast<int>(cover.size()) != m) throw InputError("cover length does not match ground set");
  if (m > kMaxValidateGround) throw GuardError("exhaustive validation infeasible");

  if (cover.total() != f.total()) return {false, f.ground().all()};
  for (int j = 0; j < m; ++j) {
    const auto xj = cover.x[static_cast<std::size_t>(j)];
    if (xj < 0 || xj > f.singleton(j)) return {false, bit(j)};
  }
  // Subset sums by lowest-bit recurrence.
  const Mask n_sub = Mask{1} << m;
  std::vector<std::int64_t> sum(n_sub, 0);
  for (Mask s = 1; s < n_sub; ++s) {
    const int low = std::countr_zero(s);
    sum[s] = sum[s & (s - 1)] + cover.x[static_cast<std::size_t>(low)];
    if (sum[s] > f(s)) return {false, s};
  }
  return {};
}

struct PolymatroidCheck {
  bool ok = true;
  std::string property;  // "normalized", "nonnegative", "monotone" or "submodular"
  Mask s = 0;
  Mask t = 0;
  explicit operator bool() const noexcept { return ok; }
};

inline constexpr int kMaxPolymatroidCheckGround = 16;

/// Exhaustive normalization / monotonicity / submodularity check. Uses the
/// local forms f(S) <= f(S+i) and f(S+i)+f(S+j) >= f(S+i+j)+f(S), which are
/// equivalent to the global definitions; counterexample pairs are reported
/// in the global form (S, T).
inline PolymatroidCheck check_polymatroid(const PolymatroidOracle& f) {
  const int m = f.size();
  if (m > kMaxPolymatroidCheckGround) throw GuardError("polymatroid check limited to 16 elements");
  const Mask n_sub = Mask{1} << m;
  std::vector<std::int64_t> v(n_sub);
  for (Mask s = 0; s < n_sub; ++s) v[s] = f(s);

  if (v[0] != 0) return {false, "normalized", 0, 0};
  for (Mask s = 0; s < n_sub; ++s)
    if (v[s] < 0) return {false, "nonnegative", s, s};
  for (Mask s = 0; s < n_sub; ++s)
    for (int i = 0; i < m; ++i)
      if (!contains(s, i) && v[s] > v[s | bit(i)]) return {false, "monotone", s, s | bit(i)};
  for (Mask s = 0; s < n_sub; ++s)
    for (int i = 0; i < m; ++i) {
      if (contains(s, i)) continue;
      for (int j = i + 1; j < m; ++j) {
        if (contains(s, j)) continue;
        const Mask si = s | bit(i), sj = s | bit(j);
        if (v[si] + v[sj] < v[si | sj] + v[s]) return {false, "submodular", si, sj};
      }
    }
  return {};
}

}  // namespace entcover
