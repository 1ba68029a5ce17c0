#include "setgraph/graph6.hpp"

#include "setgraph/errors.hpp"

namespace setgraph {

namespace {

constexpr int kOffset = 63;

std::size_t packed_length(int order) {
  const std::size_t pairs = static_cast<std::size_t>(order) * (order - 1) / 2;
  return (pairs + 5) / 6;
}

}  // namespace

std::string g6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + packed_length(n));
  out.push_back(static_cast<char>(n + kOffset));
  int value = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        value = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kOffset));
  return out;
}

Graph g6_decode(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text)
    if (c < kOffset || c > 126) throw Graph6Error("illegal graph6 character code " + std::to_string(static_cast<int>(c)));
  const int n = text[0] - kOffset;
  if (n > kMaxOrder) throw Graph6Error("graph6 orders above " + std::to_string(kMaxOrder) + " are not supported");
  if (text.size() != 1 + packed_length(n))
    throw Graph6Error("graph6 length " + std::to_string(text.size()) + " does not match order " + std::to_string(n));

  std::vector<Mask> rows(n, 0);
  std::size_t pos = 1;
  int shift = -1, value = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (shift < 0) {
        value = text[pos++] - kOffset;
        shift = 5;
      }
      if ((value >> shift--) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (shift >= 0 && (value & ((1 << (shift + 1)) - 1)) != 0) throw Graph6Error("nonzero graph6 padding bits");
  return Graph::from_adjacency(std::move(rows));
}

Graph6File read_graph6_stream(std::istream& in) {
  Graph6File file;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with(">>graph6<<")) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      file.graphs.push_back({number, g6_decode(line)});
    } catch (const Graph6Error& e) {
      file.errors.push_back({number, e.what()});
    }
  }
  return file;
}

}  // namespace setgraph
