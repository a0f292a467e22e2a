#include <cctype>
#include <charconv>
#include <sstream>

#include "lappoly/error.hpp"
#include "lappoly/graph.hpp"

namespace lappoly {

namespace {

constexpr int kBias = 63;
constexpr int kMaxGraph6Order = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) {
    throw Error(ErrorCode::MalformedGraph6,
                "byte " + std::to_string(c) + " at offset " + std::to_string(pos) +
                    " outside the graph6 range 63..126");
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() < 4) throw Error(ErrorCode::MalformedGraph6, "truncated order header");
    if (static_cast<unsigned char>(text[1]) == 126) {
      throw Error(ErrorCode::MalformedGraph6, "orders above 258047 are not supported");
    }
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet(text, pos);
  } else {
    n = sextet(text, 0);
    pos = 1;
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw Error(ErrorCode::MalformedGraph6,
                "length " + std::to_string(text.size()) + " does not match order " +
                    std::to_string(n) + " (expected " + std::to_string(expected) + ")");
  }

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text, expected - 1);
    if (last & ((1 << (6 - k % 6)) - 1)) {
      throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::BadParameter, "graph too large for graph6");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view token, int line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::MalformedEdgeList,
                "line " + std::to_string(line_no) + ": '" + std::string(token) +
                    "' is not an integer");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string_view>>> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto toks = tokens(text.substr(start, end - start));
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
    start = end + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::MalformedEdgeList, "missing vertex count");
  if (lines[0].second.size() != 1) {
    throw Error(ErrorCode::MalformedEdgeList, "first line must hold only the vertex count");
  }
  const long n = parse_int(lines[0].second[0], lines[0].first);
  if (n < 0) throw Error(ErrorCode::MalformedEdgeList, "negative vertex count");

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, toks] = lines[i];
    if (toks.size() != 2) {
      throw Error(ErrorCode::MalformedEdgeList,
                  "line " + std::to_string(no) + ": expected 'u v'");
    }
    const long u = parse_int(toks[0], no);
    const long v = parse_int(toks[1], no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::EndpointOutOfRange,
                  "line " + std::to_string(no) + ": endpoint out of range [0, " +
                      std::to_string(n) + ")");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace lappoly
