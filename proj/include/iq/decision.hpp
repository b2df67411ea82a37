#pragma once

#include <optional>
#include <vector>

#include "iq/binomial.hpp"
#include "iq/verification.hpp"

// The full decision pipeline: exchangeability, separability, the torsion
// pre-check on the relation lattice, and the ideal-equality test that settles
// cancellativity and power-cancellativity in one comparison. Verdicts carry
// certificates, and every negative certificate is re-verified against the
// explicit configuration space before it is emitted.
namespace iq {

struct DecideLimits {
  int base_point = 0;
  WorkLimit work{};
  std::uint64_t space_cap = kDefaultSpaceCap;  // counterexample re-verification
  bool run_all_stages = false;  // compute algebraic stages even after an early failure
};

struct Verdict {
  bool exchangeable = false;
  std::optional<StatePair> exchangeable_witness;
  bool separable = false;
  std::optional<StatePair> separable_witness;
  ConservedBasis conserved;
  std::optional<bool> torsion_free;                       // unset when stages skipped
  std::optional<std::vector<Int>> elementary_divisors;
  std::optional<bool> lattice_ideal_equal;
  std::optional<Binomial> witness_binomial;               // in the lattice ideal only
  bool irreducibly_quantified = false;
  std::optional<Counterexample> counterexample;
};

/// Lattice spanned by one vector e_s + e_t - e_s' - e_t' per edge, in HNF.
Lattice relation_lattice(const Interaction& i);

Verdict decide(const Interaction& i, const DecideLimits& limits = {});

/// Converts an algebraic witness (a homogeneous binomial in the lattice ideal
/// but not the relation ideal) into two configurations on the complete graph
/// of its degree. Both certificate facts are re-verified; failure of either
/// indicates an internal bug and throws soundness_error.
Counterexample counterexample_from_witness(const Interaction& i, const Binomial& w,
                                           std::uint64_t space_cap = kDefaultSpaceCap);

/// Nonnegative shifts of the normalized conserved basis; each row induces a
/// homomorphism into (N, +), and together with the length they separate
/// congruence classes of an irreducibly quantified interaction.
std::vector<IntVector> separating_homs(const Interaction& i, const Verdict& v);

}  // namespace iq
