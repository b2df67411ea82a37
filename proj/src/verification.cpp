#include "iq/verification.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "iq/errors.hpp"

namespace iq {
namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

void unite(std::vector<int>& parent, int x, int y) {
  x = find_root(parent, x);
  y = find_root(parent, y);
  if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
}

}  // namespace

ConfigurationSpace::ConfigurationSpace(Interaction interaction, SiteGraph graph,
                                       std::uint64_t cap)
    : interaction_(std::move(interaction)), graph_(std::move(graph)) {
  const int n = interaction_.states();
  size_ = 1;
  for (int x = 0; x < graph_.size; ++x) {
    if (size_ > cap / static_cast<std::uint64_t>(n))
      throw resource_limit_error("configuration space exceeds the cap of " + std::to_string(cap));
    size_ *= static_cast<std::uint64_t>(n);
  }

  std::vector<int> parent(size_);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::uint64_t idx = 0; idx < size_; ++idx)
    for (std::uint64_t other : moves(idx)) unite(parent, static_cast<int>(idx), static_cast<int>(other));

  component_.assign(size_, -1);
  component_count_ = 0;
  for (std::uint64_t idx = 0; idx < size_; ++idx) {
    int root = find_root(parent, static_cast<int>(idx));
    if (component_[static_cast<std::size_t>(root)] < 0)
      component_[static_cast<std::size_t>(root)] = component_count_++;
    component_[idx] = component_[static_cast<std::size_t>(root)];
  }
}

std::uint64_t ConfigurationSpace::encode(const Configuration& eta) const {
  if (static_cast<int>(eta.size()) != graph_.size)
    throw std::invalid_argument("configuration does not match the site count");
  const int n = interaction_.states();
  std::uint64_t idx = 0;
  for (int state : eta) {
    if (state < 0 || state >= n) throw std::invalid_argument("state out of range");
    idx = idx * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(state);
  }
  return idx;
}

Configuration ConfigurationSpace::decode(std::uint64_t index) const {
  const int n = interaction_.states();
  Configuration eta(static_cast<std::size_t>(graph_.size));
  for (int x = graph_.size - 1; x >= 0; --x) {
    eta[static_cast<std::size_t>(x)] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return eta;
}

std::vector<std::uint64_t> ConfigurationSpace::moves(std::uint64_t index) const {
  const int n = interaction_.states();
  Configuration eta = decode(index);
  std::vector<std::uint64_t> out;
  auto apply = [&](int x, int y) {
    int p = eta[static_cast<std::size_t>(x)] * n + eta[static_cast<std::size_t>(y)];
    for (int q : interaction_.pair_adjacency()[static_cast<std::size_t>(p)]) {
      Configuration next = eta;
      next[static_cast<std::size_t>(x)] = q / n;
      next[static_cast<std::size_t>(y)] = q % n;
      out.push_back(encode(next));
    }
  };
  for (const auto& [x, y] : graph_.edges) {
    apply(x, y);
    apply(y, x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConfigurationSpace build_space(const Interaction& i, const SiteGraph& g, std::uint64_t cap) {
  return ConfigurationSpace(i, g, cap);
}

bool same_component(const ConfigurationSpace& cs, const Configuration& a, const Configuration& b) {
  return cs.component_of(a) == cs.component_of(b);
}

CounterexampleSearch search_counterexample(const Interaction& i, int max_sites,
                                           std::uint64_t space_cap) {
  if (max_sites < 1) throw std::invalid_argument("max_sites must be at least 1");
  ConservedBasis basis = conserved_basis(i, 0);

  for (int sites = 1; sites <= max_sites; ++sites) {
    ConfigurationSpace space = build_space(i, SiteGraph::complete(sites), space_cap);

    std::map<IntVector, std::vector<std::uint64_t>, IntVectorLess> groups;
    for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
      Configuration eta = space.decode(idx);
      IntVector signature(basis.normalized.rows());
      for (Eigen::Index r = 0; r < basis.normalized.rows(); ++r)
        signature[r] = conserved_sum(basis.normalized.row(r).transpose(), eta);
      groups[signature].push_back(idx);
    }

    std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
    for (const auto& [signature, members] : groups) {
      for (std::size_t a = 0; a < members.size() && (!best || members[a] < best->first); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          if (space.component_of(members[a]) != space.component_of(members[b])) {
            std::pair<std::uint64_t, std::uint64_t> candidate{members[a], members[b]};
            if (!best || candidate < *best) best = candidate;
            break;
          }
        }
      }
    }
    if (best)
      return {Counterexample{space.decode(best->first), space.decode(best->second),
                             SiteGraph::complete(sites)},
              sites};
  }
  return {std::nullopt, max_sites};
}

bool swap_reachability_check(const Interaction& i, const SiteGraph& g, int trials,
                             std::uint64_t seed, std::uint64_t space_cap) {
  if (!is_exchangeable(i).exchangeable)
    throw std::invalid_argument("swap reachability requires an exchangeable interaction");
  if (g.size < 2) return true;  // no site pair to transpose

  ConfigurationSpace space = build_space(i, g, space_cap);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> state(0, i.states() - 1);
  std::uniform_int_distribution<int> site(0, g.size - 1);

  for (int trial = 0; trial < trials; ++trial) {
    Configuration eta(static_cast<std::size_t>(g.size));
    for (int& v : eta) v = state(rng);
    int x = site(rng);
    int y = site(rng);
    while (y == x) y = site(rng);
    Configuration swapped = eta;
    std::swap(swapped[static_cast<std::size_t>(x)], swapped[static_cast<std::size_t>(y)]);
    if (!same_component(space, eta, swapped)) return false;
  }
  return true;
}

bool components_match_congruence(const Interaction& i, const SiteGraph& g,
                                 std::uint64_t space_cap, const WorkLimit& limit) {
  if (!is_exchangeable(i).exchangeable)
    throw std::invalid_argument("the congruence comparison requires an exchangeable interaction");

  ConfigurationSpace space = build_space(i, g, space_cap);
  GroebnerBasis gb = presentation_ideal(presentation_of(i), limit);

  std::map<Exponents, int, ExponentsLess> class_of_form;
  std::map<int, Exponents, std::less<int>> form_of_class;
  for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
    Exponents counts = configuration_to_element(space.decode(idx), i.states());
    Exponents form = monomial_normal_form(std::move(counts), gb.elements());
    int component = space.component_of(idx);

    auto [it, inserted] = class_of_form.try_emplace(form, component);
    if (!inserted && it->second != component) return false;
    auto [jt, fresh] = form_of_class.try_emplace(component, form);
    if (!fresh && !matrix_equal(jt->second, form)) return false;
  }
  return true;
}

EquivalenceResult equivalent(const Interaction& i1, const Interaction& i2) {
  if (i1.states() != i2.states()) return {false, std::nullopt};
  const int n = i1.states();
  if (n > 8) throw resource_limit_error("equivalence search is capped at 8 states");

  IntMatrix target = row_space_canonical(conserved_basis(i1, 0).full);
  IntMatrix source = conserved_basis(i2, 0).full;

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    IntMatrix pulled(source.rows(), n);
    for (Eigen::Index r = 0; r < source.rows(); ++r)
      for (int s = 0; s < n; ++s) pulled(r, s) = source(r, perm[static_cast<std::size_t>(s)]);
    if (matrix_equal(row_space_canonical(pulled), target)) return {true, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {false, std::nullopt};
}

Interaction maximal_interaction(const IntMatrix& basis_rows, int states) {
  if (basis_rows.rows() > 0 && basis_rows.cols() != states)
    throw std::invalid_argument("basis rows do not match the state count");

  std::map<IntVector, std::vector<StatePair>, IntVectorLess> groups;
  for (int s = 0; s < states; ++s) {
    for (int t = 0; t < states; ++t) {
      IntVector signature(basis_rows.rows());
      for (Eigen::Index r = 0; r < basis_rows.rows(); ++r)
        signature[r] = basis_rows(r, s) + basis_rows(r, t);
      groups[signature].emplace_back(s, t);
    }
  }

  std::vector<PairEdge> edges;
  for (const auto& [signature, pairs] : groups)
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b) edges.emplace_back(pairs[a], pairs[b]);
  return Interaction(states, edges);
}

Interaction maximal_interaction(const ConservedBasis& basis, int states) {
  return maximal_interaction(basis.full, states);
}

}  // namespace iq
