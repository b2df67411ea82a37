#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "iq/binomial.hpp"
#include "iq/decision.hpp"
#include "iq/errors.hpp"

using namespace iq;

namespace {

Exponents exps(std::initializer_list<std::int64_t> values) {
  Exponents u(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (std::int64_t v : values) u[k++] = v;
  return u;
}

Binomial bin(const MonomialOrder& order, std::initializer_list<std::int64_t> u,
             std::initializer_list<std::int64_t> v) {
  return Binomial::oriented(order, exps(u), exps(v));
}

Interaction random_swapful_interaction(int states, std::mt19937_64& rng, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<PairEdge> edges;
  for (int s = 0; s < states; ++s)
    for (int t = s + 1; t < states; ++t)
      edges.emplace_back(StatePair{s, t}, StatePair{t, s});
  for (int p = 0; p < states * states; ++p)
    for (int q = p + 1; q < states * states; ++q)
      if (coin(rng) < density)
        edges.emplace_back(StatePair{p / states, p % states}, StatePair{q / states, q % states});
  return Interaction(states, edges);
}

}  // namespace

TEST_CASE("degrevlex ordering") {
  MonomialOrder o(3);
  CHECK(o.compare(exps({2, 0, 0}), exps({0, 2, 0})) > 0);   // x0^2 > x1^2
  CHECK(o.compare(exps({0, 2, 0}), exps({1, 0, 1})) > 0);   // x1^2 > x0*x2
  CHECK(o.compare(exps({1, 1, 0}), exps({0, 2, 0})) > 0);   // x0*x1 > x1^2
  CHECK(o.compare(exps({0, 0, 3}), exps({2, 0, 0})) > 0);   // degree dominates
  CHECK(o.compare(exps({1, 1, 0}), exps({1, 1, 0})) == 0);

  // with x0 cheapest, x0-heavy monomials become small
  MonomialOrder cheap0 = MonomialOrder::cheapest_last(3, 0);
  CHECK(cheap0.compare(exps({2, 0, 0}), exps({0, 2, 0})) < 0);
  CHECK_THROWS_AS(MonomialOrder(3, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("orientation and the zero binomial") {
  MonomialOrder o(2);
  Binomial b = bin(o, {0, 2}, {2, 0});
  CHECK(matrix_equal(b.lead(), exps({2, 0})));
  CHECK(matrix_equal(b.trail(), exps({0, 2})));
  CHECK(bin(o, {1, 1}, {1, 1}).is_zero());
  CHECK_THROWS_AS(Binomial::oriented(o, exps({-1, 0}), exps({0, 0})), std::invalid_argument);
}

TEST_CASE("reduction of binomials") {
  MonomialOrder o(2);
  GroebnerBasis g = buchberger({bin(o, {2, 0}, {0, 2})}, o);

  CHECK(reduce(bin(o, {2, 0}, {0, 2}), g).is_zero());
  CHECK(reduce(bin(o, {3, 0}, {1, 2}), g).is_zero());  // x0^3 -> x0*x1^2
  Binomial untouched = reduce(bin(o, {1, 0}, {0, 1}), g);
  CHECK_FALSE(untouched.is_zero());
  CHECK(matrix_equal(untouched.lead(), exps({1, 0})));
}

TEST_CASE("buchberger on pinned inputs") {
  MonomialOrder o3(3);
  GroebnerBasis twisted = buchberger({bin(o3, {1, 0, 1}, {0, 2, 0})}, o3);
  REQUIRE(twisted.elements().size() == 1);
  CHECK(matrix_equal(twisted.elements()[0].lead(), exps({0, 2, 0})));   // x1^2 > x0*x2
  CHECK(matrix_equal(twisted.elements()[0].trail(), exps({1, 0, 1})));

  GroebnerBasis chain = buchberger({bin(o3, {2, 0, 0}, {0, 2, 0}), bin(o3, {0, 2, 0}, {0, 0, 2})}, o3);
  REQUIRE(chain.elements().size() == 2);
  // interreduction rewrites the trail x1^2 to x2^2
  CHECK(matrix_equal(chain.elements()[0].lead(), exps({0, 2, 0})));
  CHECK(matrix_equal(chain.elements()[0].trail(), exps({0, 0, 2})));
  CHECK(matrix_equal(chain.elements()[1].lead(), exps({2, 0, 0})));
  CHECK(matrix_equal(chain.elements()[1].trail(), exps({0, 0, 2})));
  CHECK(reduce(bin(o3, {2, 0, 0}, {0, 0, 2}), chain).is_zero());  // membership by transitivity

  GroebnerBasis empty = buchberger({}, o3);
  CHECK(empty.empty());
  CHECK_FALSE(reduce(bin(o3, {1, 0, 0}, {0, 1, 0}), empty).is_zero());
}

TEST_CASE("reduced bases are canonical under generator shuffles") {
  std::mt19937_64 rng(17);
  MonomialOrder o(4);
  std::uniform_int_distribution<int> var(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Binomial> gens;
    for (int k = 0; k < 5; ++k) {
      Exponents u = Exponents::Zero(4), v = Exponents::Zero(4);
      u[var(rng)] += 1;
      u[var(rng)] += 1;
      v[var(rng)] += 1;
      v[var(rng)] += 1;
      Binomial b = Binomial::oriented(o, u, v);
      if (!b.is_zero()) gens.push_back(b);
    }
    GroebnerBasis reference = buchberger(gens, o);
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(buchberger(gens, o) == reference);
    }
    // every element of a degree-balanced input's basis stays balanced
    for (const Binomial& b : reference.elements()) CHECK(b.is_homogeneous());
  }
}

TEST_CASE("variable saturation on pinned inputs") {
  MonomialOrder o3(3);
  GroebnerBasis common = buchberger({bin(o3, {1, 1, 0}, {1, 0, 1})}, o3);
  GroebnerBasis dropped = saturate_by_variable(common, 0);
  REQUIRE(dropped.elements().size() == 1);
  CHECK(matrix_equal(dropped.elements()[0].lead(), exps({0, 1, 0})));
  CHECK(matrix_equal(dropped.elements()[0].trail(), exps({0, 0, 1})));

  GroebnerBasis prime = buchberger({bin(o3, {1, 0, 1}, {0, 2, 0})}, o3);
  CHECK(saturate_by_variable(prime, 1) == prime);

  GroebnerBasis empty = buchberger({}, o3);
  CHECK(saturate_by_variable(empty, 0) == empty);
}

TEST_CASE("full saturation on pinned inputs") {
  MonomialOrder o3(3);
  GroebnerBasis common = buchberger({bin(o3, {1, 1, 0}, {1, 0, 1})}, o3);
  GroebnerBasis saturated = saturate_all(common);
  REQUIRE(saturated.elements().size() == 1);
  CHECK(matrix_equal(saturated.elements()[0].lead(), exps({0, 1, 0})));

  // no common monomial factor: already a fixed point, torsion invisible here
  MonomialOrder o2(2);
  GroebnerBasis torsion = buchberger({bin(o2, {2, 0}, {0, 2})}, o2);
  CHECK(saturate_all(torsion) == torsion);

  CHECK(saturate_all(buchberger({}, o2)) == buchberger({}, o2));
}

TEST_CASE("lattice ideals on pinned inputs") {
  MonomialOrder o2(2), o3(3);
  GroebnerBasis line = lattice_ideal(Lattice::from_rows([] {
                                       IntMatrix m(1, 2);
                                       m << 1, -1;
                                       return m;
                                     }(), 2), o2);
  REQUIRE(line.elements().size() == 1);
  CHECK(matrix_equal(line.elements()[0].lead(), exps({1, 0})));
  CHECK(matrix_equal(line.elements()[0].trail(), exps({0, 1})));

  GroebnerBasis twisted = lattice_ideal(Lattice::from_rows([] {
                                          IntMatrix m(1, 3);
                                          m << 1, -2, 1;
                                          return m;
                                        }(), 3), o3);
  REQUIRE(twisted.elements().size() == 1);
  CHECK(matrix_equal(twisted.elements()[0].lead(), exps({0, 2, 0})));
  CHECK(matrix_equal(twisted.elements()[0].trail(), exps({1, 0, 1})));

  CHECK(lattice_ideal(Lattice::zero(3), o3).empty());
}

TEST_CASE("lattice ideal membership matches lattice membership") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 15; ++trial) {
    IntMatrix rows(2, 4);
    for (Eigen::Index i = 0; i < 2; ++i) {
      long sum = 0;
      for (Eigen::Index j = 0; j < 3; ++j) {
        long e = entry(rng);
        rows(i, j) = e;
        sum += e;
      }
      rows(i, 3) = -sum;  // keep rows degree balanced
    }
    Lattice sat = saturate(Lattice::from_rows(rows, 4));
    MonomialOrder o(4);
    GroebnerBasis ideal = lattice_ideal(sat, o);

    std::uniform_int_distribution<std::int64_t> mult(0, 3);
    for (int probe = 0; probe < 40; ++probe) {
      Exponents u(4), v(4);
      for (int k = 0; k < 4; ++k) {
        u[k] = mult(rng);
        v[k] = mult(rng);
      }
      IntVector diff(4);
      for (int k = 0; k < 4; ++k) diff[k] = Int(static_cast<long>(u[k] - v[k]));
      bool in_lattice = sat.contains(diff);
      bool in_ideal = reduce(Binomial::oriented(o, u, v), ideal).is_zero();
      CHECK(in_lattice == in_ideal);
    }
  }
}

TEST_CASE("ideal comparison finds order-least witnesses") {
  MonomialOrder o3(3);
  GroebnerBasis twisted_gens = buchberger({bin(o3, {1, 0, 1}, {0, 2, 0})}, o3);
  GroebnerBasis twisted_lattice = lattice_ideal(Lattice::from_rows([] {
                                                  IntMatrix m(1, 3);
                                                  m << 1, -2, 1;
                                                  return m;
                                                }(), 3), o3);
  CHECK(ideal_equal(twisted_gens, twisted_lattice).equal);

  GroebnerBasis common = buchberger({bin(o3, {1, 1, 0}, {1, 0, 1})}, o3);
  GroebnerBasis saturated = saturate_all(common);
  IdealComparison cmp = ideal_equal(common, saturated);
  CHECK_FALSE(cmp.equal);
  REQUIRE(cmp.witness.has_value());
  CHECK(matrix_equal(cmp.witness->lead(), exps({0, 1, 0})));
  CHECK(matrix_equal(cmp.witness->trail(), exps({0, 0, 1})));
  CHECK_FALSE(reduce(*cmp.witness, common).is_zero());

  CHECK(ideal_equal(buchberger({}, o3), buchberger({}, o3)).equal);
}

TEST_CASE("semigroup equality through the ideal") {
  Presentation p;
  p.generators = 2;
  p.relations.push_back({exps({2, 0}), exps({0, 2})});
  CHECK(semigroup_equal(p, exps({2, 0}), exps({0, 2})));
  CHECK_FALSE(semigroup_equal(p, exps({1, 0}), exps({0, 1})));
  CHECK(semigroup_equal(p, exps({1, 1}), exps({1, 1})));
}

TEST_CASE("ideal route and brute force agree on random interactions") {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 10; ++trial) {
    Interaction i = random_swapful_interaction(3, rng, 0.15);
    Presentation p = presentation_of(i);
    GroebnerBasis gb = presentation_ideal(p);
    for (std::int64_t d : {1, 2, 3, 4}) {
      CongruenceClasses classes = congruence_classes(p, d);
      for (std::size_t a = 0; a < classes.vectors.size(); ++a)
        for (std::size_t b = a; b < classes.vectors.size(); ++b) {
          bool oracle = classes.class_id[a] == classes.class_id[b];
          bool ideal = semigroup_equal(gb, classes.vectors[a], classes.vectors[b]);
          CHECK(oracle == ideal);
        }
    }
  }
}

TEST_CASE("relation ideal always sits inside its saturated lattice ideal") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 12; ++trial) {
    Interaction i = random_swapful_interaction(4, rng, 0.1);
    GroebnerBasis sigma = presentation_ideal(presentation_of(i));
    GroebnerBasis lat = lattice_ideal(saturate(relation_lattice(i)), MonomialOrder(4));
    for (const Binomial& b : sigma.elements()) CHECK(reduce(b, lat).is_zero());
  }
}

TEST_CASE("cancellativity flag and torsion jointly match ideal equality") {
  std::mt19937_64 rng(4097);
  for (int trial = 0; trial < 12; ++trial) {
    Interaction i = random_swapful_interaction(3, rng, 0.2);
    GroebnerBasis sigma = presentation_ideal(presentation_of(i));
    Lattice l = relation_lattice(i);
    GroebnerBasis lat = lattice_ideal(saturate(l), MonomialOrder(3));
    bool equal = ideal_equal(sigma, lat).equal;
    bool cancellative = is_cancellative(sigma);
    bool torsion_free = is_torsion_free_quotient(l);
    CHECK(equal == (cancellative && torsion_free));
  }
}

TEST_CASE("variable saturation rejects unbalanced ideals") {
  MonomialOrder o(2);
  GroebnerBasis skew = buchberger({bin(o, {2, 0}, {0, 1})}, o);
  CHECK_THROWS_AS(saturate_by_variable(skew, 0), std::invalid_argument);
}

TEST_CASE("the work limit is an explicit error") {
  MonomialOrder o(3);
  std::vector<Binomial> gens = {bin(o, {2, 0, 0}, {0, 2, 0}), bin(o, {0, 2, 0}, {0, 0, 2}),
                                bin(o, {1, 1, 0}, {0, 1, 1}), bin(o, {1, 0, 1}, {0, 2, 0})};
  WorkLimit tiny{1};
  CHECK_THROWS_AS(buchberger(gens, o, tiny), resource_limit_error);
}
