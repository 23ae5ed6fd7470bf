#include "degpow/cli/graph6.hpp"

namespace degpow::cli {

namespace {
constexpr std::string_view header = ">>graph6<<";
constexpr int offset = 63;
}

SmallGraph parse_graph6(std::string_view text) {
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text) {
    const int v = static_cast<unsigned char>(c);
    if (v < offset || v > 126) throw Graph6Error("graph6: byte out of range 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - offset;
  if (n == 63) throw Graph6Error("graph6: multi-byte orders exceed the 8-vertex limit");
  if (n < 1 || n > SmallGraph::max_order)
    throw Graph6Error("graph6: order " + std::to_string(n) + " outside [1, 8]");

  const int bits = pair_count(n);
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != 1 + body)
    throw Graph6Error("graph6: expected " + std::to_string(1 + body) + " bytes, got " +
                      std::to_string(text.size()));

  SmallGraph g(n);
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - offset;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (; bit < static_cast<int>(body) * 6; ++bit) {
    const int byte = static_cast<unsigned char>(text[1 + bit / 6]) - offset;
    if ((byte >> (5 - bit % 6)) & 1) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string encode_graph6(const SmallGraph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(offset + n));
  const int bits = pair_count(n);
  std::string body(static_cast<std::size_t>((bits + 5) / 6), '\0');
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v)) body[bit / 6] = static_cast<char>(body[bit / 6] | (1 << (5 - bit % 6)));
  for (char& c : body) c = static_cast<char>(c + offset);
  return out + body;
}

} // namespace degpow::cli
