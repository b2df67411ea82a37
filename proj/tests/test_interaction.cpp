#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iq/errors.hpp"
#include "iq/exact_linalg.hpp"
#include "iq/interaction.hpp"

using namespace iq;

namespace {

Interaction from_json(const std::string& text) { return load_interaction(text); }

Interaction random_interaction(int states, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<PairEdge> edges;
  for (int p = 0; p < states * states; ++p)
    for (int q = p + 1; q < states * states; ++q)
      if (coin(rng) < density)
        edges.emplace_back(StatePair{p / states, p % states}, StatePair{q / states, q % states});
  return Interaction(states, edges);
}

}  // namespace

TEST_CASE("loading validates and canonicalizes") {
  Interaction minimal = from_json(R"({"states":2,"edges":[[[0,1],[1,0]]]})");
  CHECK(minimal.states() == 2);
  CHECK(minimal.edges().size() == 1);

  CHECK_THROWS_AS(from_json(R"({"states":2,"edges":[[[0,1],[0,1]]]})"), input_error);
  CHECK_THROWS_AS(from_json(R"({"states":0,"edges":[]})"), input_error);
  CHECK_THROWS_AS(from_json(R"({"states":2,"edges":[[[0,2],[1,0]]]})"), input_error);
  CHECK_THROWS_AS(from_json(R"({"states":2})"), input_error);
  CHECK_THROWS_AS(from_json("not json"), input_error);
  CHECK_THROWS_AS(from_json(R"({"states":1099511627776,"edges":[]})"), input_error);
  CHECK_THROWS_AS(from_json(R"({"states":2,"edges":[[[0,1],[1,"x"]]]})"), input_error);

  // reversed duplicates merge under set semantics
  Interaction dedup = from_json(R"({"states":3,"edges":[[[0,2],[1,1]],[[1,1],[0,2]]]})");
  CHECK(dedup.edges().size() == 1);

  // loading a serialization round-trips to the identical object
  CHECK(from_json(save_interaction(dedup)) == dedup);
  CHECK(from_json(save_interaction(minimal)) == minimal);
}

TEST_CASE("pair components by frontier expansion") {
  Interaction swap2 = from_json(R"({"states":2,"edges":[[[0,1],[1,0]]]})");
  CHECK(pair_component(swap2, {0, 1}) == std::set<StatePair>{{0, 1}, {1, 0}});

  Interaction empty2 = from_json(R"({"states":2,"edges":[]})");
  CHECK(pair_component(empty2, {0, 1}) == std::set<StatePair>{{0, 1}});

  Interaction chain = from_json(R"({"states":3,"edges":[[[0,2],[1,1]],[[1,1],[2,0]]]})");
  CHECK(pair_component(chain, {0, 2}) == std::set<StatePair>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("pair components partition the pair graph") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Interaction i = random_interaction(3, 0.25, rng);
    for (int p = 0; p < 9; ++p)
      for (int q = 0; q < 9; ++q) {
        auto cp = pair_component(i, {p / 3, p % 3});
        auto cq = pair_component(i, {q / 3, q % 3});
        bool disjoint = true;
        for (const StatePair& x : cp)
          if (cq.count(x)) disjoint = false;
        CHECK((cp == cq || disjoint));
      }
  }
}

TEST_CASE("exchangeability and its witness") {
  CHECK(is_exchangeable(from_json(R"({"states":2,"edges":[[[0,1],[1,0]]]})")).exchangeable);

  auto empty = is_exchangeable(from_json(R"({"states":2,"edges":[]})"));
  CHECK_FALSE(empty.exchangeable);
  CHECK(empty.witness == StatePair{0, 1});

  auto chain = is_exchangeable(from_json(R"({"states":3,"edges":[[[0,2],[1,1]],[[1,1],[2,0]]]})"));
  CHECK_FALSE(chain.exchangeable);
  CHECK(chain.witness == StatePair{0, 1});  // (0,2) reaches (2,0), but (0,1) is isolated
}

TEST_CASE("adding the missing swap edge never breaks exchangeability") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Interaction i = random_interaction(3, 0.15, rng);
    Interaction current = i;
    for (int round = 0; round < 9; ++round) {
      auto r = is_exchangeable(current);
      if (r.exchangeable) break;
      auto [s, t] = *r.witness;
      std::vector<PairEdge> edges = current.edges();
      edges.emplace_back(StatePair{s, t}, StatePair{t, s});
      current = Interaction(current.states(), edges);
    }
    CHECK(is_exchangeable(current).exchangeable);
  }
}

TEST_CASE("conserved bases on pinned inputs") {
  // the swap relation is vacuous: the kernel is the whole plane
  ConservedBasis swap2 = conserved_basis(from_json(R"({"states":2,"edges":[[[0,1],[1,0]]]})"));
  CHECK(swap2.full.rows() == 2);
  CHECK(swap2.normalized.rows() == 1);
  CHECK(swap2.normalized(0, 0) == 0);
  CHECK(swap2.normalized(0, 1) == 1);

  ConservedBasis free3 = conserved_basis(from_json(R"({"states":3,"edges":[]})"));
  CHECK(free3.full.rows() == 3);
  CHECK(free3.normalized.rows() == 2);
  CHECK(free3.normalized(0, 0) == 0);
  CHECK(free3.normalized(1, 0) == 0);

  ConservedBasis twisted = conserved_basis(from_json(R"({"states":3,"edges":[[[0,2],[1,1]]]})"));
  CHECK(twisted.full.rows() == 2);
  REQUIRE(twisted.normalized.rows() == 1);
  CHECK(twisted.normalized(0, 0) == 0);
  CHECK(twisted.normalized(0, 1) == 1);
  CHECK(twisted.normalized(0, 2) == 2);

  // configurable base point
  ConservedBasis based = conserved_basis(from_json(R"({"states":3,"edges":[[[0,2],[1,1]]]})"), 1);
  REQUIRE(based.normalized.rows() == 1);
  CHECK(based.normalized(0, 1) == 0);
}

TEST_CASE("every basis row satisfies the conservation law on every edge") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    Interaction i = random_interaction(4, 0.2, rng);
    ConservedBasis basis = conserved_basis(i);
    for (Eigen::Index r = 0; r < basis.full.rows(); ++r)
      CHECK(satisfies_conservation(i, basis.full.row(r).transpose()));
    for (Eigen::Index r = 0; r < basis.normalized.rows(); ++r) {
      CHECK(satisfies_conservation(i, basis.normalized.row(r).transpose()));
      CHECK(basis.normalized(r, 0) == 0);
    }
    // the constant function is always conserved and lies in the full span
    Lattice span = Lattice::from_rows(basis.full, i.states());
    IntVector ones = IntVector::Constant(i.states(), 1);
    CHECK(span.contains(ones));
    // normalized plus constants spans the full space
    IntMatrix stacked(basis.normalized.rows() + 1, i.states());
    stacked.topRows(basis.normalized.rows()) = basis.normalized;
    stacked.row(basis.normalized.rows()) = ones.transpose();
    CHECK(matrix_equal(row_space_canonical(stacked), row_space_canonical(basis.full)));
  }
}

TEST_CASE("separability and its witness") {
  CHECK(is_separable(from_json(R"({"states":3,"edges":[[[0,2],[1,1]]]})")).separable);
  CHECK(is_separable(from_json(R"({"states":3,"edges":[]})")).separable);

  auto flip = is_separable(from_json(R"({"states":2,"edges":[[[0,0],[1,1]]]})"));
  CHECK_FALSE(flip.separable);
  CHECK(flip.witness == StatePair{0, 1});
}

TEST_CASE("conserved sums") {
  IntVector xi01(2);
  xi01 << 0, 1;
  CHECK(conserved_sum(xi01, {0, 0, 0}) == 0);
  IntVector xi(3);
  xi << 0, 1, 2;
  CHECK(conserved_sum(xi, {0, 2}) == 2);
  CHECK(conserved_sum(xi, {1, 1}) == 2);  // a conserved collision
}

TEST_CASE("site graph constructors validate") {
  CHECK(SiteGraph::complete(1).edges.empty());
  CHECK(SiteGraph::complete(4).edges.size() == 6);
  CHECK(SiteGraph::path(4).edges.size() == 3);
  CHECK(SiteGraph::star(4).edges.size() == 3);
  CHECK(SiteGraph::cycle(4).edges.size() == 4);
  CHECK_THROWS_AS(SiteGraph::from_edges(3, {{0, 1}}), input_error);      // disconnected
  CHECK_THROWS_AS(SiteGraph::from_edges(2, {{0, 0}}), input_error);      // loop
  CHECK_THROWS_AS(SiteGraph::from_edges(2, {{0, 5}}), input_error);      // range
  CHECK(SiteGraph::from_edges(2, {{1, 0}, {0, 1}}).edges.size() == 1);   // dedup
}

TEST_CASE("single-state interactions are trivial but valid") {
  Interaction one = from_json(R"({"states":1,"edges":[]})");
  CHECK(is_exchangeable(one).exchangeable);
  CHECK(is_separable(one).separable);
  ConservedBasis basis = conserved_basis(one);
  CHECK(basis.full.rows() == 1);
  CHECK(basis.normalized.rows() == 0);
}
