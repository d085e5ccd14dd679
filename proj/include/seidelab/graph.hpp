#ifndef SEIDELAB_GRAPH_HPP
#define SEIDELAB_GRAPH_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seidelab {

/// Bit set over vertex indices 0..63; bit v is vertex v.
using VertexMask = std::uint64_t;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

/// Mask with the low n bits set.
constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (vertex_bit(n) - 1);
}

/**
 * Simple undirected graph on the dense vertex set {0, ..., n-1}, n <= 64.
 *
 * Each vertex owns one 64-bit adjacency row. Rows are kept symmetric and the
 * diagonal is always empty, so a Graph value is a valid simple graph at every
 * point of its lifetime.
 */
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }

  bool adjacent(int i, int j) const { return (rows_[i] >> j) & 1U; }

  /// Open neighbourhood N(v) as a mask.
  VertexMask neighborhood(int v) const { return rows_[v]; }

  /// Closed neighbourhood N[v].
  VertexMask closed_neighborhood(int v) const {
    return rows_[v] | vertex_bit(v);
  }

  VertexMask vertices() const { return full_mask(n_); }

  int degree(int v) const { return std::popcount(rows_[v]); }

  std::size_t edge_count() const;

  /// Adds or removes the edge {i, j}; i == j is rejected.
  void set_edge(int i, int j, bool present = true);

  void toggle_edge(int i, int j) { set_edge(i, j, !adjacent(i, j)); }

  /// Subgraph induced on the vertices of `keep`, relabelled in increasing order.
  Graph induced(VertexMask keep) const;

  /// Relabels so that vertex v of this graph becomes vertex perm[v].
  Graph permuted(const std::vector<int>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.rows_[v] != b.rows_[v]) return false;
    return true;
  }

 private:
  int n_;
  std::array<VertexMask, kMaxOrder> rows_{};
};

/// Flips adjacency on every off-diagonal pair.
Graph complement(const Graph& g);

/// Raised by parse_graph6; offset() is the 0-based byte position at fault.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest order expressible with a one-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/**
 * Decodes one graph6 line (no trailing newline). Only the one-byte size
 * header is accepted; padding bits in the last byte must be zero.
 */
Graph parse_graph6(std::string_view text);

/// Canonical graph6 string for g; throws std::out_of_range if n > 62.
std::string encode_graph6(const Graph& g);

/// Number of edge bits in graph6 order for an order-n graph, i.e. C(n,2).
constexpr int graph6_bit_count(int n) { return n * (n - 1) / 2; }

/**
 * Seidel matrix S(G): zero diagonal, -1 on adjacent pairs and +1 otherwise.
 * Stored dense row-major as signed bytes.
 */
class SeidelMatrix {
 public:
  SeidelMatrix(int n, std::vector<std::int8_t> entries);

  int order() const { return n_; }
  int operator()(int i, int j) const { return entries_[i * n_ + j]; }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  friend bool operator==(const SeidelMatrix&, const SeidelMatrix&) = default;

 private:
  int n_;
  std::vector<std::int8_t> entries_;
};

SeidelMatrix seidel_matrix(const Graph& g);

}  // namespace seidelab

#endif  // SEIDELAB_GRAPH_HPP
