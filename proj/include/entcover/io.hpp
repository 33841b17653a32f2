// Line-oriented text format for instances.
//
//   mesc <m> <n>              graph <n_vertices> <n_edges>
//   <elements of set 0>       <u> <v>
//   ...                       ...
//
// '#' starts a comment. Indices are 0-based. Serialization is canonical:
// elements within a set and endpoints within an edge are ascending.
#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entcover/instances.hpp"

namespace entcover {

using Instance = std::variant<SetCoverInstance, GraphInstance>;

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

inline int to_index(const std::string& tok, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + tok + "'", line);
  }
  if (used != tok.size()) throw InputError("expected an integer, got '" + tok + "'", line);
  if (v < 0 || v > 1'000'000) throw InputError("integer out of range: " + tok, line);
  return static_cast<int>(v);
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw InputError("empty instance file");
  const auto& head = lines.front();
  if (head.tokens.size() != 3) throw InputError("header must be 'mesc m n' or 'graph n_vertices n_edges'", head.number);

  const int a = detail::to_index(head.tokens[1], head.number);
  const int b = detail::to_index(head.tokens[2], head.number);
  const auto body_count = static_cast<int>(lines.size()) - 1;

  // Re-raise semantic errors with the line that triggered them where we can.
  if (head.tokens[0] == "mesc") {
    if (body_count != a)
      throw InputError("header declares " + std::to_string(a) + " sets but file has " + std::to_string(body_count),
                       body_count < a ? lines.back().number : lines[static_cast<std::size_t>(a) + 1].number);
    std::vector<std::vector<int>> sets;
    for (int i = 1; i <= a; ++i) {
      const auto& ln = lines[static_cast<std::size_t>(i)];
      std::vector<int> s;
      for (const auto& t : ln.tokens) {
        const int e = detail::to_index(t, ln.number);
        if (e >= b) throw InputError("element index " + t + " out of range", ln.number);
        s.push_back(e);
      }
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("set repeats an element", ln.number);
      sets.push_back(std::move(s));
    }
    try {
      return SetCoverInstance(b, std::move(sets));
    } catch (const InputError& e) {
      throw InputError(e.what(), head.number);
    }
  }
  if (head.tokens[0] == "graph") {
    if (body_count != b)
      throw InputError("header declares " + std::to_string(b) + " edges but file has " + std::to_string(body_count),
                       body_count < b ? lines.back().number : lines[static_cast<std::size_t>(b) + 1].number);
    std::vector<Edge> edges;
    for (int k = 1; k <= b; ++k) {
      const auto& ln = lines[static_cast<std::size_t>(k)];
      if (ln.tokens.size() != 2) throw InputError("edge line must be 'u v'", ln.number);
      const int u = detail::to_index(ln.tokens[0], ln.number);
      const int v = detail::to_index(ln.tokens[1], ln.number);
      if (u >= a || v >= a) throw InputError("vertex index out of range", ln.number);
      if (u == v) throw InputError("self-loop", ln.number);
      const Edge e(u, v);
      for (const auto& prev : edges)
        if (prev == e) throw InputError("duplicate edge", ln.number);
      edges.push_back(e);
    }
    try {
      return GraphInstance(a, std::move(edges));
    } catch (const InputError& e) {
      throw InputError(e.what(), head.number);
    }
  }
  throw InputError("unknown instance type '" + head.tokens[0] + "'", head.number);
}

inline std::string serialize_instance(const SetCoverInstance& inst) {
  std::ostringstream out;
  out << "mesc " << inst.n_sets() << ' ' << inst.n_elements() << '\n';
  for (const auto& s : inst.sets()) {
    for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << s[k];
    out << '\n';
  }
  return out.str();
}

inline std::string serialize_instance(const GraphInstance& g) {
  std::ostringstream out;
  out << "graph " << g.n_vertices() << ' ' << g.n_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline std::string serialize_instance(const Instance& inst) {
  return std::visit([](const auto& i) { return serialize_instance(i); }, inst);
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace entcover
