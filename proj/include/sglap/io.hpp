#pragma once

// Edge-list text format.
//
//   # comment
//   n 4          optional header, must precede the first edge
//   1 2 +        one edge per line: "<i> <j> <s>", s in {+, -, +1, -1}
//   2 3 -1
//
// Vertices are 1-based. Without a header the order is the largest index seen.
// Blank lines are ignored, CRLF line endings accepted.

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sglap/signed_graph.hpp"

namespace sglap {

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_count(std::string_view tok, std::size_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline bool parse_sign(std::string_view tok, Sign& out) {
  if (tok == "+" || tok == "+1") {
    out = Sign::Positive;
    return true;
  }
  if (tok == "-" || tok == "-1") {
    out = Sign::Negative;
    return true;
  }
  return false;
}

}  // namespace detail

inline SignedGraph parse_signed_graph(std::istream& in) {
  std::optional<std::size_t> header_order;
  std::vector<SignedEdge> edges;
  std::vector<std::size_t> edge_lines;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t max_index = 0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "n") {
      if (header_order) throw ParseError(line_no, "repeated header");
      if (!edges.empty()) throw ParseError(line_no, "header after first edge");
      std::size_t count = 0;
      if (tokens.size() != 2 || !detail::parse_count(tokens[1], count) || count == 0) {
        throw ParseError(line_no, "malformed header, expected \"n <count>\" with count >= 1");
      }
      header_order = count;
      continue;
    }

    if (tokens.size() < 3) {
      if (tokens.size() == 2) throw ParseError(line_no, "missing sign token");
      throw ParseError(line_no, "malformed edge line");
    }
    if (tokens.size() > 3) throw ParseError(line_no, "trailing tokens on edge line");
    std::size_t i = 0, j = 0;
    if (!detail::parse_count(tokens[0], i) || !detail::parse_count(tokens[1], j)) {
      throw ParseError(line_no, "malformed vertex index");
    }
    Sign s{};
    if (!detail::parse_sign(tokens[2], s)) {
      throw ParseError(line_no, "bad sign token \"" + std::string(tokens[2]) + "\"");
    }
    if (i == 0 || j == 0 || (header_order && (i > *header_order || j > *header_order))) {
      throw ParseError(line_no, "vertex index out of range");
    }
    if (i == j) throw ParseError(line_no, "self-loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (!seen.emplace(i, j).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    }
    max_index = std::max(max_index, j);
    edges.push_back({i - 1, j - 1, s});
  }

  std::size_t order = header_order.value_or(max_index);
  if (order == 0) throw ParseError(line_no, "empty graph without a header");
  return SignedGraph(order, std::move(edges));
}

inline SignedGraph parse_signed_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_signed_graph(in);
}

inline void serialize_signed_graph(const SignedGraph& g, std::ostream& out) {
  out << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << (e.sign == Sign::Positive ? '+' : '-') << '\n';
  }
}

inline std::string serialize_signed_graph(const SignedGraph& g) {
  std::ostringstream out;
  serialize_signed_graph(g, out);
  return out.str();
}

}  // namespace sglap
