#ifndef SEIDELAB_SEIDEL_HPP
#define SEIDELAB_SEIDEL_HPP

#include <cstdint>
#include <string>

#include "seidelab/graph.hpp"

namespace seidelab {

/// The part V1 of a switching partition (V1, V2). Empty and full sets are the
/// identity switch.
struct SwitchingSet {
  VertexMask subset = 0;
};

/// Seidel switching: toggles every pair with exactly one endpoint in w.
Graph switch_graph(const Graph& g, SwitchingSet w);

/// Result of testing SC-equivalence to K_n, with a witness:
/// switch_graph(g, switching) equals K_n, or its complement when
/// `complemented` is set.
struct ScEquivalence {
  bool equivalent = false;
  SwitchingSet switching;
  bool complemented = false;
};

/**
 * Decides whether g is SC-equivalent to K_n. Vertex 0 is made universal by
 * switching on the vertices outside N[0]; the answer is yes iff the other
 * n-1 vertices then induce a complete or an empty graph.
 */
ScEquivalence is_sc_equivalent_to_complete(const Graph& g);

/// N_op(G): ordered pairs (X, Y) of disjoint 2-sets with an odd number of
/// X-Y edges. Always even.
using OddPairCount = std::uint64_t;

OddPairCount count_odd_pairs(const Graph& g);

/// Total number of ordered pairs of disjoint 2-subsets, n(n-1)(n-2)(n-3)/4.
constexpr std::uint64_t ordered_disjoint_pair_count(int n) {
  if (n < 4) return 0;
  const std::uint64_t m = static_cast<std::uint64_t>(n);
  return m * (m - 1) * (m - 2) * (m - 3) / 4;
}

inline constexpr int kSwitchingKeyMaxOrder = 8;

/**
 * Canonical key of the SC-class of g: the least graph6 string over all vertex
 * relabellings of g and of its complement, each normalised so that vertex 0
 * is universal. Brute force over n! relabellings, so n <= 8.
 */
std::string switching_class_key(const Graph& g);

}  // namespace seidelab

#endif  // SEIDELAB_SEIDEL_HPP
