#include "seidelab/graph.hpp"

#include <algorithm>

namespace seidelab {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxByte = 126;

void check_vertex(int n, int v) {
  if (v < 0 || v >= n)
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside graph of order " + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw std::out_of_range("graph order must be in [1, 64], got " +
                            std::to_string(n));
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.rows_[v] = full_mask(n) & ~vertex_bit(v);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.set_edge(i, j);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

void Graph::set_edge(int i, int j, bool present) {
  check_vertex(n_, i);
  check_vertex(n_, j);
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
  if (present) {
    rows_[i] |= vertex_bit(j);
    rows_[j] |= vertex_bit(i);
  } else {
    rows_[i] &= ~vertex_bit(j);
    rows_[j] &= ~vertex_bit(i);
  }
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertices();
  std::vector<int> index(n_, -1);
  int m = 0;
  for (int v = 0; v < n_; ++v)
    if ((keep >> v) & 1U) index[v] = m++;
  Graph h(m);
  for (int v = 0; v < n_; ++v) {
    if (index[v] < 0) continue;
    for (int u = v + 1; u < n_; ++u)
      if (index[u] >= 0 && adjacent(v, u)) h.set_edge(index[v], index[u]);
  }
  return h;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size does not match graph order");
  Graph h(n_);
  for (int v = 0; v < n_; ++v) {
    VertexMask row = 0;
    for (VertexMask r = rows_[v]; r; r &= r - 1)
      row |= vertex_bit(perm[std::countr_zero(r)]);
    h.rows_[perm[v]] = row;
  }
  return h;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) h.set_edge(i, j);
  return h;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int byte = static_cast<unsigned char>(text[i]);
    if (byte < kGraph6Bias || byte > kGraph6MaxByte)
      throw Graph6Error("byte value " + std::to_string(byte) +
                            " outside [63,126]",
                        i);
  }
  const int n = static_cast<unsigned char>(text[0]) - kGraph6Bias;
  if (n == kGraph6MaxByte - kGraph6Bias)
    throw Graph6Error("multi-byte graph6 size headers are not supported", 0);
  if (n < 1) throw Graph6Error("graph order 0 is not supported", 0);

  const int bits = graph6_bit_count(n);
  const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected)
    throw Graph6Error("expected " + std::to_string(expected) +
                          " bytes for order " + std::to_string(n) + ", got " +
                          std::to_string(text.size()),
                      std::min(text.size(), expected));

  Graph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1) g.set_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = expected - 1;
    const int byte = static_cast<unsigned char>(text[last]) - kGraph6Bias;
    const int pad = 6 - bits % 6;
    if (byte & ((1 << pad) - 1))
      throw Graph6Error("nonzero padding bits", last);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw std::out_of_range("graph6 encoding supports n <= 62, got " +
                            std::to_string(n));
  const int bits = graph6_bit_count(n);
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(kGraph6Bias + n);
  std::vector<int> packed((bits + 5) / 6, 0);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) packed[k / 6] |= 1 << (5 - k % 6);
  for (std::size_t b = 0; b < packed.size(); ++b)
    out[1 + b] = static_cast<char>(kGraph6Bias + packed[b]);
  return out;
}

SeidelMatrix::SeidelMatrix(int n, std::vector<std::int8_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (static_cast<std::size_t>(n) * n != entries_.size())
    throw std::invalid_argument("Seidel matrix entry count mismatch");
  for (int i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0)
      throw std::invalid_argument("Seidel matrix diagonal must be zero");
    for (int j = i + 1; j < n; ++j) {
      const int a = (*this)(i, j);
      if ((a != 1 && a != -1) || a != (*this)(j, i))
        throw std::invalid_argument(
            "Seidel matrix off-diagonal entries must be symmetric +-1");
    }
  }
}

SeidelMatrix seidel_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::int8_t> s(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s[i * n + j] = g.adjacent(i, j) ? -1 : 1;
  return SeidelMatrix(n, std::move(s));
}

}  // namespace seidelab
