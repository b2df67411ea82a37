#include "iq/decision.hpp"

#include <algorithm>

#include "iq/errors.hpp"

namespace iq {

Lattice relation_lattice(const Interaction& i) {
  return Lattice::from_rows(relation_matrix(i), i.states());
}

Counterexample counterexample_from_witness(const Interaction& i, const Binomial& w,
                                           std::uint64_t space_cap) {
  if (w.is_zero()) throw std::invalid_argument("the zero binomial is not a witness");
  if (!w.is_homogeneous())
    throw std::invalid_argument("a witness binomial must be degree-balanced");
  if (w.lead().size() != i.states())
    throw std::invalid_argument("witness variable count does not match the interaction");

  Configuration eta = element_to_configuration(w.lead());
  Configuration eta_prime = element_to_configuration(w.trail());
  SiteGraph graph = SiteGraph::complete(static_cast<int>(w.lead_degree()));

  // Certificate fact one: every conserved quantity sums equally.
  ConservedBasis basis = conserved_basis(i, 0);
  for (Eigen::Index r = 0; r < basis.full.rows(); ++r) {
    IntVector xi = basis.full.row(r).transpose();
    if (conserved_sum(xi, eta) != conserved_sum(xi, eta_prime))
      throw soundness_error("witness violates a conserved quantity");
  }
  // Certificate fact two: the configurations are in distinct components.
  ConfigurationSpace space = build_space(i, graph, space_cap);
  if (same_component(space, eta, eta_prime))
    throw soundness_error("witness configurations are connected");

  return {std::move(eta), std::move(eta_prime), std::move(graph)};
}

Verdict decide(const Interaction& i, const DecideLimits& limits) {
  Verdict v;

  ExchangeabilityResult exchangeable = is_exchangeable(i);
  v.exchangeable = exchangeable.exchangeable;
  v.exchangeable_witness = exchangeable.witness;

  v.conserved = conserved_basis(i, limits.base_point);
  SeparabilityResult separable = is_separable(i, v.conserved);
  v.separable = separable.separable;
  v.separable_witness = separable.witness;

  const bool gate = v.exchangeable && v.separable;
  if (!gate && !limits.run_all_stages) return v;

  Lattice lattice = relation_lattice(i);
  SmithDecomposition smith = smith_normal_form(lattice.basis());
  bool torsion_free = true;
  for (const Int& d : smith.elementary_divisors)
    if (d != 1) torsion_free = false;
  v.torsion_free = torsion_free;
  v.elementary_divisors = smith.elementary_divisors;

  GroebnerBasis relation_ideal = presentation_ideal(presentation_of(i), limits.work);
  GroebnerBasis saturated_ideal =
      lattice_ideal(saturate(lattice), MonomialOrder(i.states()), limits.work);

  // The relation ideal always sits inside the lattice ideal.
  for (const Binomial& b : relation_ideal.elements())
    if (!reduce(b, saturated_ideal).is_zero())
      throw soundness_error("relation ideal escapes the lattice ideal");

  IdealComparison comparison = ideal_equal(relation_ideal, saturated_ideal);
  v.lattice_ideal_equal = comparison.equal;
  v.witness_binomial = comparison.witness;
  if (!torsion_free && comparison.equal)
    throw soundness_error("torsion present but the ideals compare equal");

  v.irreducibly_quantified = gate && comparison.equal;
  if (gate && !comparison.equal)
    v.counterexample = counterexample_from_witness(i, *comparison.witness, limits.space_cap);
  return v;
}

std::vector<IntVector> separating_homs(const Interaction& i, const Verdict& v) {
  if (!v.irreducibly_quantified)
    throw std::invalid_argument("separating homomorphisms exist for irreducibly quantified verdicts");
  if (v.conserved.normalized.cols() != i.states())
    throw std::invalid_argument("verdict does not belong to this interaction");

  std::vector<IntVector> homs;
  homs.reserve(static_cast<std::size_t>(v.conserved.normalized.rows()));
  for (Eigen::Index r = 0; r < v.conserved.normalized.rows(); ++r) {
    IntVector xi = v.conserved.normalized.row(r).transpose();
    Int lowest = 0;
    for (Eigen::Index s = 0; s < xi.size(); ++s) lowest = std::min(lowest, xi[s]);
    if (lowest < 0)
      for (Eigen::Index s = 0; s < xi.size(); ++s) xi[s] -= lowest;
    homs.push_back(std::move(xi));
  }
  return homs;
}

}  // namespace iq
