#include "domina/graph6.hpp"

#include "domina/error.hpp"

namespace domina {

namespace {
constexpr int kBias = 63;
constexpr int kMaxG6Order = 62;

int data_char_count(int n) { return (n * (n - 1) / 2 + 5) / 6; }
}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  if (line.empty()) fail(Errc::MalformedGraph6, "empty line");

  const unsigned char first = static_cast<unsigned char>(line[0]);
  if (first == 126) fail(Errc::UnsupportedOrder, "multi-byte size form (n > 62) not supported");
  if (first < 63 || first > 126) fail(Errc::MalformedGraph6, "size byte outside 63..126");
  const int n = first - kBias;
  line.remove_prefix(1);

  const int expect = data_char_count(n);
  if (static_cast<int>(line.size()) != expect)
    fail(Errc::MalformedGraph6, "expected " + std::to_string(expect) + " data characters, got " +
                                    std::to_string(line.size()));

  std::vector<VertexSet> rows(n, VertexSet(n));
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const unsigned char c = static_cast<unsigned char>(line[bit / 6]);
      if (c < 63 || c > 126) fail(Errc::MalformedGraph6, "data byte outside 63..126");
      if ((c - kBias) >> (5 - bit % 6) & 1) {
        rows[u].set(v);
        rows[v].set(u);
      }
    }
  }
  return Graph::from_adjacency(n, std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxG6Order)
    fail(Errc::UnsupportedOrder, "order " + std::to_string(n) + " exceeds graph6 limit 62");
  std::string out;
  out.reserve(1 + data_char_count(n));
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
  return out;
}

}  // namespace domina
