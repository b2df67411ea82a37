#include "iq/interaction.hpp"

#include <algorithm>
#include <deque>

#include <json.hpp>

#include "iq/errors.hpp"
#include "iq/exact_linalg.hpp"

namespace iq {

Interaction::Interaction(int states, const std::vector<PairEdge>& edges) : states_(states) {
  if (states < 1) throw input_error("an interaction needs at least one state");
  for (const PairEdge& e : edges) {
    for (int v : {e.a.first, e.a.second, e.b.first, e.b.second})
      if (v < 0 || v >= states) throw input_error("state index out of range");
    if (e.a == e.b) throw input_error("loop edge on the pair graph is not allowed");
  }
  edges_ = edges;
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(static_cast<std::size_t>(states_) * states_, {});
  for (const PairEdge& e : edges_) {
    adjacency_[pair_index(e.a)].push_back(pair_index(e.b));
    adjacency_[pair_index(e.b)].push_back(pair_index(e.a));
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

namespace {

// Generous bound; the practical envelope is single digits, and it keeps
// adjacency storage for the pair graph trivially small.
constexpr std::int64_t kMaxStates = 1024;

int parse_state(const nlohmann::json& j) {
  if (!j.is_number_integer()) throw input_error("state indices must be integers");
  std::int64_t v = j.get<std::int64_t>();
  if (v < 0 || v >= kMaxStates) throw input_error("state index out of range");
  return static_cast<int>(v);
}

StatePair parse_pair(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw input_error("an ordered pair must be a two-element integer array");
  return {parse_state(j[0]), parse_state(j[1])};
}

}  // namespace

Interaction load_interaction(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("states") || !j.contains("edges"))
    throw input_error("interaction must be an object with 'states' and 'edges'");
  if (!j["states"].is_number_integer()) throw input_error("'states' must be an integer");
  std::int64_t states = j["states"].get<std::int64_t>();
  if (states < 1) throw input_error("an interaction needs at least one state");
  if (states > kMaxStates) throw input_error("state count too large");
  int n = static_cast<int>(states);
  if (!j["edges"].is_array()) throw input_error("'edges' must be an array");
  std::vector<PairEdge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw input_error("each edge must be a pair of ordered pairs");
    edges.emplace_back(parse_pair(e[0]), parse_pair(e[1]));
  }
  return Interaction(n, edges);
}

std::string save_interaction(const Interaction& i) {
  nlohmann::ordered_json j;
  j["states"] = i.states();
  auto edges = nlohmann::ordered_json::array();
  for (const PairEdge& e : i.edges())
    edges.push_back({{e.a.first, e.a.second}, {e.b.first, e.b.second}});
  j["edges"] = std::move(edges);
  return j.dump();
}

std::set<StatePair> pair_component(const Interaction& i, StatePair start) {
  const int n = i.states();
  if (start.first < 0 || start.first >= n || start.second < 0 || start.second >= n)
    throw std::invalid_argument("start pair out of range");
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::deque<int> frontier{i.pair_index(start)};
  seen[static_cast<std::size_t>(frontier.front())] = 1;
  std::set<StatePair> component;
  while (!frontier.empty()) {
    int p = frontier.front();
    frontier.pop_front();
    component.insert(i.pair_of(p));
    for (int q : i.pair_adjacency()[static_cast<std::size_t>(p)]) {
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = 1;
        frontier.push_back(q);
      }
    }
  }
  return component;
}

ExchangeabilityResult is_exchangeable(const Interaction& i) {
  const int n = i.states();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      auto component = pair_component(i, {s, t});
      if (!component.count({t, s})) return {false, StatePair{s, t}};
    }
  }
  return {true, std::nullopt};
}

IntMatrix relation_matrix(const Interaction& i) {
  const int n = i.states();
  IntMatrix a = IntMatrix::Zero(static_cast<Eigen::Index>(i.edges().size()), n);
  Eigen::Index row = 0;
  for (const PairEdge& e : i.edges()) {
    a(row, e.a.first) += 1;
    a(row, e.a.second) += 1;
    a(row, e.b.first) -= 1;
    a(row, e.b.second) -= 1;
    ++row;
  }
  return a;
}

ConservedBasis conserved_basis(const Interaction& i, int base_point) {
  const int n = i.states();
  if (base_point < 0 || base_point >= n) throw std::invalid_argument("base point out of range");
  IntMatrix a = relation_matrix(i);
  ConservedBasis basis;
  basis.base_point = base_point;
  basis.full = rational_kernel(a);

  IntMatrix pinned(a.rows() + 1, n);
  pinned.topRows(a.rows()) = a;
  pinned.row(a.rows()).setZero();
  pinned(a.rows(), base_point) = 1;
  basis.normalized = rational_kernel(pinned);
  return basis;
}

bool satisfies_conservation(const Interaction& i, const IntVector& xi) {
  if (xi.size() != i.states()) return false;
  for (const PairEdge& e : i.edges())
    if (xi[e.a.first] + xi[e.a.second] != xi[e.b.first] + xi[e.b.second]) return false;
  return true;
}

SeparabilityResult is_separable(const Interaction& i) {
  return is_separable(i, conserved_basis(i, 0));
}

SeparabilityResult is_separable(const Interaction& i, const ConservedBasis& basis) {
  const int n = i.states();
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      bool separated = false;
      for (Eigen::Index r = 0; r < basis.normalized.rows() && !separated; ++r)
        if (basis.normalized(r, s) != basis.normalized(r, t)) separated = true;
      if (!separated) return {false, StatePair{s, t}};
    }
  }
  return {true, std::nullopt};
}

Int conserved_sum(const IntVector& xi, const Configuration& eta) {
  Int sum = 0;
  for (int state : eta) {
    if (state < 0 || state >= xi.size()) throw std::invalid_argument("configuration state out of range");
    sum += xi[state];
  }
  return sum;
}

SiteGraph SiteGraph::from_edges(int size, std::vector<std::pair<int, int>> edges) {
  if (size < 1) throw input_error("a site graph needs at least one site");
  for (auto& [x, y] : edges) {
    if (x == y) throw input_error("site graph loops are not allowed");
    if (x < 0 || y < 0 || x >= size || y >= size) throw input_error("site index out of range");
    if (y < x) std::swap(x, y);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Connectivity check.
  std::vector<char> seen(static_cast<std::size_t>(size), 0);
  std::deque<int> frontier{0};
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    for (const auto& [a, b] : edges) {
      int other = a == x ? b : (b == x ? a : -1);
      if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
        seen[static_cast<std::size_t>(other)] = 1;
        ++reached;
        frontier.push_back(other);
      }
    }
  }
  if (reached != size) throw input_error("site graph must be connected");

  SiteGraph g;
  g.size = size;
  g.edges = std::move(edges);
  return g;
}

SiteGraph SiteGraph::complete(int size) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < size; ++x)
    for (int y = x + 1; y < size; ++y) edges.emplace_back(x, y);
  return from_edges(size, std::move(edges));
}

SiteGraph SiteGraph::path(int size) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x + 1 < size; ++x) edges.emplace_back(x, x + 1);
  return from_edges(size, std::move(edges));
}

SiteGraph SiteGraph::star(int size) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 1; x < size; ++x) edges.emplace_back(0, x);
  return from_edges(size, std::move(edges));
}

SiteGraph SiteGraph::cycle(int size) {
  if (size < 3) return path(size);
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x + 1 < size; ++x) edges.emplace_back(x, x + 1);
  edges.emplace_back(0, size - 1);
  return from_edges(size, std::move(edges));
}

}  // namespace iq
