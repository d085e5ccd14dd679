#include "seidelab/seidel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace seidelab {

namespace {

// Switch so that vertex 0 is adjacent to everything else.
Graph normalize_pivot(const Graph& g) {
  const VertexMask far = g.vertices() & ~g.closed_neighborhood(0);
  return switch_graph(g, SwitchingSet{far});
}

}  // namespace

Graph switch_graph(const Graph& g, SwitchingSet w) {
  const int n = g.order();
  const VertexMask inside = w.subset & g.vertices();
  const VertexMask outside = g.vertices() & ~inside;
  Graph h = g;
  for (int v = 0; v < n; ++v) {
    // Flip v against the other side of the partition, once per pair.
    const VertexMask across = ((inside >> v) & 1U) ? outside : inside;
    for (VertexMask r = across & ~full_mask(v + 1); r; r &= r - 1)
      h.toggle_edge(v, std::countr_zero(r));
  }
  return h;
}

ScEquivalence is_sc_equivalent_to_complete(const Graph& g) {
  const int n = g.order();
  const VertexMask far = g.vertices() & ~g.closed_neighborhood(0);
  const Graph h = switch_graph(g, SwitchingSet{far});

  const VertexMask rest = g.vertices() & ~vertex_bit(0);
  bool clique = true;
  bool independent = true;
  for (int v = 1; v < n; ++v) {
    const VertexMask row = h.neighborhood(v) & rest;
    if (row != (rest & ~vertex_bit(v))) clique = false;
    if (row != 0) independent = false;
  }

  ScEquivalence result;
  if (clique) {
    result.equivalent = true;
    result.switching = SwitchingSet{far};
  } else if (independent) {
    // A further switch on {0} isolates vertex 0 and leaves the empty graph.
    result.equivalent = true;
    result.switching = SwitchingSet{far ^ vertex_bit(0)};
    result.complemented = true;
  }
  return result;
}

OddPairCount count_odd_pairs(const Graph& g) {
  const int n = g.order();
  if (n < 4) return 0;
  const VertexMask all = g.vertices();
  OddPairCount total = 0;
  // For X = {a, b}, the parity of edges from X to c is bit c of
  // N(a) xor N(b). A disjoint Y = {c, d} is odd iff c and d disagree, so each
  // X contributes (#ones) * (#zeros) over the vertices outside X.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const VertexMask others = all & ~(vertex_bit(a) | vertex_bit(b));
      const VertexMask parity =
          (g.neighborhood(a) ^ g.neighborhood(b)) & others;
      const int ones = std::popcount(parity);
      const int zeros = std::popcount(others) - ones;
      total += static_cast<OddPairCount>(ones) * zeros;
    }
  }
  return total;
}

std::string switching_class_key(const Graph& g) {
  const int n = g.order();
  if (n > kSwitchingKeyMaxOrder)
    throw std::out_of_range("switching_class_key supports n <= 8, got " +
                            std::to_string(n));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const Graph gc = complement(g);
  std::string best;
  bool first = true;
  do {
    for (const Graph* base : {&g, &gc}) {
      std::string code = encode_graph6(normalize_pivot(base->permuted(perm)));
      if (first || code < best) {
        best = std::move(code);
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace seidelab
