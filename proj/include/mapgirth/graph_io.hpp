#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapgirth/errors.hpp"
#include "mapgirth/graph.hpp"

namespace mapgirth {

enum class GraphFormat { Graph6, EdgeList };

namespace detail {

constexpr int kG6Offset = 63;          // printable 6-bit chunks start at '?'
constexpr int kG6MaxOrder = 258047;    // largest order of the 4-byte header form

inline int g6_value(char c, std::size_t pos) {
  const int v = static_cast<unsigned char>(c) - kG6Offset;
  if (v < 0 || v > 63)
    throw ParseError("graph6: invalid character at position " + std::to_string(pos));
  return v;
}

// Upper-triangle bit index of pair (i, j) with i < j, column-major:
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
inline std::size_t pair_bit_index(int i, int j) {
  return static_cast<std::size_t>(j) * (static_cast<std::size_t>(j) - 1) / 2 +
         static_cast<std::size_t>(i);
}

inline std::size_t triangle_bits(long long n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

}  // namespace detail

/// Decodes one graph6 line (optionally prefixed with ">>graph6<<").
inline Graph parse_graph6(std::string_view text) {
  // Trim trailing newline/whitespace.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6: orders above " + std::to_string(detail::kG6MaxOrder) +
                       " are not supported");
    if (text.size() < 4) throw ParseError("graph6: truncated order header");
    n = (static_cast<long long>(detail::g6_value(text[1], 1)) << 12) |
        (detail::g6_value(text[2], 2) << 6) | detail::g6_value(text[3], 3);
    pos = 4;
  } else {
    n = detail::g6_value(text[0], 0);
    pos = 1;
  }

  const std::size_t bits = detail::triangle_bits(n);
  const std::size_t chunks = (bits + 5) / 6;
  if (text.size() - pos != chunks)
    throw ParseError("graph6: expected " + std::to_string(chunks) + " data characters, got " +
                     std::to_string(text.size() - pos));

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  int i = 0, j = 1;  // current pair, tracked in column-major order
  for (std::size_t c = 0; c < chunks; ++c) {
    const int v = detail::g6_value(text[pos + c], pos + c);
    for (int k = 5; k >= 0 && bit < bits; --k, ++bit) {
      if ((v >> k) & 1) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
    // Padding past the triangle must stay zero or round-trips break.
    if (bit >= bits) {
      const std::size_t spare = 6 * (c + 1) - bits;
      if (spare > 0 && (v & ((1u << spare) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string serialize_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > detail::kG6MaxOrder)
    throw std::invalid_argument("graph6: order too large to encode");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kG6Offset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + detail::kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + detail::kG6Offset));
    out.push_back(static_cast<char>((n & 63) + detail::kG6Offset));
  }
  const std::size_t bits = detail::triangle_bits(n);
  std::vector<unsigned char> chunk((bits + 5) / 6, 0);
  for (auto [u, v] : g.edges()) {
    const std::size_t bit = detail::pair_bit_index(u, v);
    chunk[bit / 6] |= static_cast<unsigned char>(1u << (5 - bit % 6));
  }
  for (unsigned char c : chunk) out.push_back(static_cast<char>(c + detail::kG6Offset));
  return out;
}

/// Edge-list format: one "u v" pair per line, '#' starts a comment.
/// An optional "# nodes: N" directive pins the vertex count so graphs with
/// trailing isolated vertices survive a round-trip; otherwise the count is
/// one past the largest id seen.
inline Graph parse_edge_list(const std::string& text) {
  constexpr long long kMaxVertexId = 100000000;
  std::vector<std::pair<int, int>> edges;
  long long declared_n = -1;
  long long max_id = -1;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream directive(line.substr(hash + 1));
      std::string word;
      long long value = 0;
      if (directive >> word >> value && word == "nodes:" && value >= 0) declared_n = value;
      line.erase(hash);
    }
    std::istringstream tokens(line);
    long long ids[2];
    int count = 0;
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      long long id;
      try {
        id = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("edge list: non-numeric token '" + tok + "' on line " +
                         std::to_string(line_no));
      }
      if (used != tok.size())
        throw ParseError("edge list: non-numeric token '" + tok + "' on line " +
                         std::to_string(line_no));
      if (id < 0 || id > kMaxVertexId)
        throw ParseError("edge list: vertex id " + tok + " out of range on line " +
                         std::to_string(line_no));
      ids[count++] = id;
      if (count == 2) {
        edges.emplace_back(static_cast<int>(ids[0]), static_cast<int>(ids[1]));
        max_id = std::max({max_id, ids[0], ids[1]});
        count = 0;
      }
    }
    if (count != 0) throw ParseError("edge list: odd token count on line " + std::to_string(line_no));
  }
  long long n = max_id + 1;
  if (declared_n >= 0) {
    if (declared_n < n)
      throw ParseError("edge list: vertex id " + std::to_string(max_id) +
                       " exceeds declared node count " + std::to_string(declared_n));
    n = declared_n;
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = "# nodes: " + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? serialize_graph6(g) : serialize_edge_list(g);
}

/// Dense graph plus the original node names, for front ends that accept
/// arbitrary string labels. Labels are assigned dense ids in order of first
/// appearance; purely numeric files keep their ids only by coincidence of
/// that order.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

inline LabeledGraph parse_labeled_edge_list(const std::string& text) {
  std::map<std::string, int> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto intern = [&](const std::string& tok) {
    auto [it, fresh] = ids.try_emplace(tok, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(tok);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string a, b;
    while (tokens >> a) {
      if (!(tokens >> b))
        throw ParseError("edge list: odd token count on line " + std::to_string(line_no));
      const int first = intern(a);
      const int second = intern(b);
      edges.emplace_back(first, second);
    }
  }
  return {Graph::from_edges(static_cast<int>(labels.size()), edges), std::move(labels)};
}

}  // namespace mapgirth
