#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iq/congruence.hpp"
#include "iq/exact_linalg.hpp"
#include "iq/numeric.hpp"

// Pure-difference binomial ideals decide the semigroup congruence at scale:
// a reduced Groebner basis of the relation ideal turns congruence testing
// into monomial normal forms, and per-variable saturation under orders with
// the chosen variable cheapest yields the lattice ideal of the saturated
// relation lattice. Everything here is exponent-vector arithmetic; the
// pure-difference shape is closed under S-pairs and reduction, so no
// coefficient bookkeeping exists anywhere.
namespace iq {

/// Graded reverse lexicographic order, optionally on permuted variables.
/// The permutation lists variables from most significant to cheapest.
class MonomialOrder {
 public:
  explicit MonomialOrder(int vars);
  MonomialOrder(int vars, std::vector<int> significance);
  static MonomialOrder cheapest_last(int vars, int var);

  int vars() const { return vars_; }
  const std::vector<int>& significance() const { return significance_; }

  /// +1 when u > v, 0 when equal, -1 when u < v.
  int compare(const Exponents& u, const Exponents& v) const;
  bool less(const Exponents& u, const Exponents& v) const { return compare(u, v) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  int vars_;
  std::vector<int> significance_;
};

/// x^lead - x^trail with lead >= trail in the owning order; lead == trail
/// encodes zero (normalized to the zero exponent pair).
class Binomial {
 public:
  static Binomial oriented(const MonomialOrder& order, Exponents u, Exponents v);
  static Binomial zero(int vars);

  const Exponents& lead() const { return lead_; }
  const Exponents& trail() const { return trail_; }
  bool is_zero() const { return matrix_equal(lead_, trail_); }
  std::int64_t lead_degree() const { return degree(lead_); }
  bool is_homogeneous() const { return degree(lead_) == degree(trail_); }

  friend bool operator==(const Binomial& x, const Binomial& y) {
    return matrix_equal(x.lead_, y.lead_) && matrix_equal(x.trail_, y.trail_);
  }

 private:
  Binomial(Exponents lead, Exponents trail) : lead_(std::move(lead)), trail_(std::move(trail)) {}
  Exponents lead_;
  Exponents trail_;
};

/// Reduced, interreduced, confluent basis; canonical for (ideal, order).
/// Elements are sorted ascending by the order on leads.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Binomial> elements)
      : order_(std::move(order)), elements_(std::move(elements)) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<Binomial>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  MonomialOrder order_;
  std::vector<Binomial> elements_;
};

struct WorkLimit {
  std::uint64_t spair_reductions = 100'000;  // per Groebner-basis computation
};

/// Full normal form of a monomial under lead -> trail rewriting.
Exponents monomial_normal_form(Exponents m, const std::vector<Binomial>& elements);

/// Normal form of a binomial; zero iff the binomial lies in the ideal.
Binomial reduce(const Binomial& b, const GroebnerBasis& g);

/// Reduced Groebner basis of the ideal generated by `gens`.
GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                         const WorkLimit& limit = {});

/// (I : x_var^inf) for a homogeneous ideal, via a degrevlex order with x_var
/// cheapest; result is re-expressed as a reduced basis in g's own order.
GroebnerBasis saturate_by_variable(const GroebnerBasis& g, int var, const WorkLimit& limit = {});

/// (I : (x_0...x_{n-1})^inf): per-variable saturations iterated to a fixed point.
GroebnerBasis saturate_all(const GroebnerBasis& g, const WorkLimit& limit = {});

/// Reduced basis of the lattice ideal I_L; callers pass a saturated lattice.
/// Membership: x^u - x^v lies in I_L iff u - v lies in L.
GroebnerBasis lattice_ideal(const Lattice& l, const MonomialOrder& order,
                            const WorkLimit& limit = {});

struct IdealComparison {
  bool equal;
  std::optional<Binomial> witness;  // order-least element of exactly one ideal
};
IdealComparison ideal_equal(const GroebnerBasis& g1, const GroebnerBasis& g2);

/// Reduced basis of the relation ideal of a presentation, natural order.
GroebnerBasis presentation_ideal(const Presentation& p, const WorkLimit& limit = {});

/// Scalable congruence test; must agree with congruent() wherever the
/// brute-force cap allows.
bool semigroup_equal(const GroebnerBasis& presentation_basis, const Exponents& u,
                     const Exponents& v);
bool semigroup_equal(const Presentation& p, const Exponents& u, const Exponents& v,
                     const WorkLimit& limit = {});

/// Best-effort standalone cancellativity flag: the ideal is saturated with
/// respect to every single variable. Does not detect torsion by itself.
bool is_cancellative(const GroebnerBasis& g, const WorkLimit& limit = {});

}  // namespace iq
