#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iq/numeric.hpp"

// The objects under test: a finite interaction is a symmetric, loop-free
// graph on ordered state pairs. Edges are stored as unordered pairs of
// ordered pairs, sorted and deduplicated, so the symmetric closure is
// represented canonically.
namespace iq {

using StatePair = std::pair<int, int>;

/// Unordered edge of the pair graph; endpoints kept sorted (a < b).
struct PairEdge {
  StatePair a;
  StatePair b;

  PairEdge(StatePair x, StatePair y) : a(x), b(y) {
    if (b < a) std::swap(a, b);
  }
  friend auto operator<=>(const PairEdge&, const PairEdge&) = default;
};

class Interaction {
 public:
  /// Validates ranges, rejects loops, sorts and deduplicates.
  Interaction(int states, const std::vector<PairEdge>& edges);

  int states() const { return states_; }
  const std::vector<PairEdge>& edges() const { return edges_; }

  int pair_index(StatePair p) const { return p.first * states_ + p.second; }
  StatePair pair_of(int index) const { return {index / states_, index % states_}; }

  /// Adjacency lists of the pair graph, indexed by pair_index; sorted.
  const std::vector<std::vector<int>>& pair_adjacency() const { return adjacency_; }

  friend bool operator==(const Interaction& x, const Interaction& y) {
    return x.states_ == y.states_ && x.edges_ == y.edges_;
  }

 private:
  int states_;
  std::vector<PairEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Parses the canonical serialization: {"states": n, "edges": [[[s,t],[s2,t2]], ...]}.
Interaction load_interaction(const std::string& text);
std::string save_interaction(const Interaction& i);

std::set<StatePair> pair_component(const Interaction& i, StatePair start);

/// One row e_s + e_t - e_s' - e_t' per edge; conserved quantities are exactly
/// its rational kernel, and its row lattice is the relation lattice.
IntMatrix relation_matrix(const Interaction& i);

struct ExchangeabilityResult {
  bool exchangeable;
  std::optional<StatePair> witness;  // lexicographically least failing (s, t)
};
ExchangeabilityResult is_exchangeable(const Interaction& i);

/// Integer bases of the conserved-quantity space: `full` solves the edge
/// relation system; `normalized` additionally vanishes at the base point and,
/// together with the all-ones vector, spans the same space as `full`.
struct ConservedBasis {
  IntMatrix full;
  IntMatrix normalized;
  int base_point = 0;
};
ConservedBasis conserved_basis(const Interaction& i, int base_point = 0);

/// True iff xi(s)+xi(t) = xi(s')+xi(t') along every edge.
bool satisfies_conservation(const Interaction& i, const IntVector& xi);

struct SeparabilityResult {
  bool separable;
  std::optional<StatePair> witness;  // least inseparable pair (s, t), s < t
};
SeparabilityResult is_separable(const Interaction& i);
SeparabilityResult is_separable(const Interaction& i, const ConservedBasis& basis);

/// Assignment of a state to each site 0..|X|-1.
using Configuration = std::vector<int>;

Int conserved_sum(const IntVector& xi, const Configuration& eta);

/// Finite connected site graph; undirected edges, no loops, no multiples.
struct SiteGraph {
  int size = 0;
  std::vector<std::pair<int, int>> edges;  // x < y, sorted, unique

  static SiteGraph from_edges(int size, std::vector<std::pair<int, int>> edges);
  static SiteGraph complete(int size);
  static SiteGraph path(int size);
  static SiteGraph star(int size);
  static SiteGraph cycle(int size);
};

}  // namespace iq
