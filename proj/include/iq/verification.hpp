#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iq/binomial.hpp"
#include "iq/interaction.hpp"

// The defining notions made executable on explicit configuration spaces.
// Everything here enumerates S^X directly and is the independent check the
// algebraic pipeline is validated against.
namespace iq {

/// Fully enumerated configuration space (S^X, Phi_E) with its component
/// structure. Configurations are indexed with site 0 most significant, so
/// index order coincides with lexicographic order on assignments.
class ConfigurationSpace {
 public:
  ConfigurationSpace(Interaction interaction, SiteGraph graph, std::uint64_t cap);

  const Interaction& interaction() const { return interaction_; }
  const SiteGraph& graph() const { return graph_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t encode(const Configuration& eta) const;
  Configuration decode(std::uint64_t index) const;

  /// Phi_E neighbors of one configuration, enumerated on demand.
  std::vector<std::uint64_t> moves(std::uint64_t index) const;

  int component_of(std::uint64_t index) const { return component_[index]; }
  int component_of(const Configuration& eta) const { return component_[encode(eta)]; }
  int component_count() const { return component_count_; }

 private:
  Interaction interaction_;
  SiteGraph graph_;
  std::uint64_t size_;
  std::vector<int> component_;
  int component_count_;
};

inline constexpr std::uint64_t kDefaultSpaceCap = 1'000'000;

ConfigurationSpace build_space(const Interaction& i, const SiteGraph& g,
                               std::uint64_t cap = kDefaultSpaceCap);

bool same_component(const ConfigurationSpace& cs, const Configuration& a, const Configuration& b);

struct Counterexample {
  Configuration eta;
  Configuration eta_prime;
  SiteGraph graph;
};

struct CounterexampleSearch {
  std::optional<Counterexample> counterexample;
  int verified_up_to = 0;  // meaningful when no counterexample was found
};

/// Searches complete graphs of 1..max_sites sites for two configurations
/// with equal conserved sums in distinct components. Deterministic: smallest
/// site count first, then lexicographically least (eta, eta') pair. Absence
/// up to max_sites is evidence, not proof.
CounterexampleSearch search_counterexample(const Interaction& i, int max_sites,
                                           std::uint64_t space_cap = kDefaultSpaceCap);

/// Property check: random configurations can reach their site transpositions.
/// Requires an exchangeable interaction; must then always pass.
bool swap_reachability_check(const Interaction& i, const SiteGraph& g, int trials,
                             std::uint64_t seed, std::uint64_t space_cap = kDefaultSpaceCap);

/// Exhaustively verifies, on one site graph, that two configurations share a
/// component iff their multiset images are congruent. Requires exchangeability.
bool components_match_congruence(const Interaction& i, const SiteGraph& g,
                                 std::uint64_t space_cap = kDefaultSpaceCap,
                                 const WorkLimit& limit = {});

struct EquivalenceResult {
  bool equivalent;
  std::optional<std::vector<int>> bijection;  // state s of the first maps to bijection[s]
};

/// Equivalence of interactions: some relabeling of states pulls one conserved
/// space back onto the other. Permutation search; states capped at 8.
EquivalenceResult equivalent(const Interaction& i1, const Interaction& i2);

/// Largest interaction whose conserved quantities contain the span of the
/// given rows: connects all distinct ordered pairs with equal row sums.
Interaction maximal_interaction(const IntMatrix& basis_rows, int states);
Interaction maximal_interaction(const ConservedBasis& basis, int states);

}  // namespace iq
