#pragma once

// Line-oriented instance files:
//
//   c <comment>
//   p wtds <n> <m> <k>
//   v <id> [<weight>]        weight defaults to 1
//   e <u> <v> [<mult>]       mult in {1, 2}, repeated lines saturate at 2
//
// Vertices are 1..n. The declared m is informational only.

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace wtds {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::int64_t parse_int(const std::string& tok, std::size_t line, const char* field) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer ") + field + ", got '" + tok + "'");
  }
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
  Instance inst;
  std::optional<std::int64_t> n;
  std::map<VertexId, std::size_t> weight_line;
  std::string raw;
  std::size_t line = 0;

  auto vertex = [&](const std::string& tok) {
    const std::int64_t id = detail::parse_int(tok, line, "vertex id");
    if (id < 1 || id > *n)
      throw ParseError(line, "vertex id " + tok + " outside 1.." + std::to_string(*n));
    return VertexId{static_cast<std::uint32_t>(id)};
  };

  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (n) throw ParseError(line, "duplicate header");
      if (tok.size() != 5 || tok[1] != "wtds") throw ParseError(line, "header must be 'p wtds <n> <m> <k>'");
      n = detail::parse_int(tok[2], line, "n");
      if (*n < 0 || *n > 1'000'000) throw ParseError(line, "n out of range");
      if (detail::parse_int(tok[3], line, "m") < 0) throw ParseError(line, "negative m");
      inst.k = detail::parse_int(tok[4], line, "k");
      for (std::int64_t i = 1; i <= *n; ++i) {
        inst.graph.add_vertex(VertexId{static_cast<std::uint32_t>(i)});
        inst.weight[VertexId{static_cast<std::uint32_t>(i)}] = 1;
      }
      continue;
    }
    if (!n) throw ParseError(line, "'" + tok[0] + "' line before header");

    if (tok[0] == "v") {
      if (tok.size() < 2 || tok.size() > 3) throw ParseError(line, "expected 'v <id> [<weight>]'");
      const VertexId v = vertex(tok[1]);
      if (auto [it, fresh] = weight_line.emplace(v, line); !fresh)
        throw ParseError(line, "vertex " + tok[1] + " already weighted on line " + std::to_string(it->second));
      const std::int64_t w = tok.size() == 3 ? detail::parse_int(tok[2], line, "weight") : 1;
      if (w < 1) throw ParseError(line, "weight must be positive");
      inst.weight[v] = w;
    } else if (tok[0] == "e") {
      if (tok.size() < 3 || tok.size() > 4) throw ParseError(line, "expected 'e <u> <v> [<mult>]'");
      const VertexId u = vertex(tok[1]), v = vertex(tok[2]);
      if (u == v) throw ParseError(line, "self-loop at vertex " + tok[1]);
      const std::int64_t m = tok.size() == 4 ? detail::parse_int(tok[3], line, "multiplicity") : 1;
      if (m != 1 && m != 2) throw ParseError(line, "multiplicity must be 1 or 2");
      inst.graph.add_edge(u, v, static_cast<int>(m));
    } else {
      throw ParseError(line, "unknown line type '" + tok[0] + "'");
    }
  }
  if (!n) throw ParseError(line, "missing 'p wtds' header");
  return inst;
}

inline Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

/// Writes `inst` with ids renumbered 1..n in ascending order of the original
/// ids. If that changes any id, "c map <new> <old>" lines record the mapping.
inline void write_instance(std::ostream& out, const Instance& inst) {
  const auto vs = inst.graph.vertices();
  std::map<VertexId, std::uint32_t> fresh;
  bool renamed = false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    fresh[vs[i]] = static_cast<std::uint32_t>(i + 1);
    renamed |= vs[i].value != i + 1;
  }
  const auto edges = inst.graph.edges();
  out << "p wtds " << vs.size() << ' ' << edges.size() << ' ' << inst.k << '\n';
  if (renamed)
    for (VertexId v : vs) out << "c map " << fresh[v] << ' ' << v.value << '\n';
  for (VertexId v : vs) out << "v " << fresh[v] << ' ' << inst.weight.at(v) << '\n';
  for (const Edge& e : edges) {
    out << "e " << fresh[e.u] << ' ' << fresh[e.v];
    if (e.multiplicity != 1) out << ' ' << e.multiplicity;
    out << '\n';
  }
}

inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

}  // namespace wtds
