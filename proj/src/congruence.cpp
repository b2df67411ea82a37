#include "iq/congruence.hpp"

#include <algorithm>
#include <numeric>

#include "iq/errors.hpp"

namespace iq {

Presentation presentation_of(const Interaction& i) {
  Presentation p;
  p.generators = i.states();
  p.relations.reserve(i.edges().size());
  for (const PairEdge& e : i.edges()) {
    Relation r;
    r.lhs = Exponents::Zero(p.generators);
    r.rhs = Exponents::Zero(p.generators);
    r.lhs[e.a.first] += 1;
    r.lhs[e.a.second] += 1;
    r.rhs[e.b.first] += 1;
    r.rhs[e.b.second] += 1;
    p.relations.push_back(std::move(r));
  }
  return p;
}

Exponents configuration_to_element(const Configuration& eta, int states) {
  Exponents u = Exponents::Zero(states);
  for (int state : eta) {
    if (state < 0 || state >= states) throw std::invalid_argument("state out of range");
    u[state] += 1;
  }
  return u;
}

Configuration element_to_configuration(const Exponents& u) {
  if (degree(u) < 1) throw std::invalid_argument("a semigroup element has positive length");
  Configuration eta;
  eta.reserve(static_cast<std::size_t>(degree(u)));
  for (Eigen::Index s = 0; s < u.size(); ++s) {
    if (u[s] < 0) throw std::invalid_argument("negative multiplicity");
    for (std::int64_t k = 0; k < u[s]; ++k) eta.push_back(static_cast<int>(s));
  }
  return eta;
}

Int count_degree_vectors(int n, std::int64_t d) {
  Int c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + d - 1),
               static_cast<unsigned long>(d));
  return c;
}

std::vector<Exponents> enumerate_degree(int n, std::int64_t d, std::uint64_t cap) {
  if (n < 1 || d < 0) throw std::invalid_argument("bad enumeration parameters");
  Int total = count_degree_vectors(n, d);
  if (total > Int(static_cast<unsigned long>(cap)))
    throw resource_limit_error("degree enumeration needs " + total.get_str() +
                               " vectors, cap is " + std::to_string(cap));
  std::vector<Exponents> out;
  out.reserve(static_cast<std::size_t>(total.get_ui()));
  Exponents u = Exponents::Zero(n);
  u[0] = d;
  for (;;) {
    out.push_back(u);
    // Next vector in decreasing lexicographic order: move one unit from the
    // rightmost positive non-final coordinate and flush the tail after it.
    Eigen::Index k = -1;
    for (Eigen::Index i = n - 2; i >= 0; --i)
      if (u[i] > 0) {
        k = i;
        break;
      }
    if (k < 0) break;
    std::int64_t tail = u[n - 1];
    u[n - 1] = 0;
    u[k] -= 1;
    u[k + 1] = tail + 1;
    for (Eigen::Index i = k + 2; i < n; ++i) {
      u[k + 1] += u[i];
      u[i] = 0;
    }
  }
  return out;
}

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

int CongruenceClasses::index_of(const Exponents& u) const {
  // enumerate_degree emits decreasing lex order
  auto it = std::lower_bound(vectors.begin(), vectors.end(), u,
                             [](const Exponents& a, const Exponents& b) { return lex_less(b, a); });
  if (it == vectors.end() || !matrix_equal(*it, u)) return -1;
  return static_cast<int>(it - vectors.begin());
}

int CongruenceClasses::class_of(const Exponents& u) const {
  int idx = index_of(u);
  if (idx < 0) throw std::invalid_argument("vector does not have the enumerated degree");
  return class_id[static_cast<std::size_t>(idx)];
}

CongruenceClasses congruence_classes(const Presentation& p, std::int64_t deg,
                                     std::uint64_t cap) {
  if (deg < 1) throw std::invalid_argument("degree must be positive");
  CongruenceClasses result;
  result.degree = deg;
  result.vectors = enumerate_degree(p.generators, deg, cap);

  const int count = static_cast<int>(result.vectors.size());
  std::vector<int> parent(static_cast<std::size_t>(count));
  std::iota(parent.begin(), parent.end(), 0);

  auto apply_moves = [&](int idx, const Exponents& from, const Exponents& to) {
    const Exponents& u = result.vectors[static_cast<std::size_t>(idx)];
    bool applicable = true;
    for (Eigen::Index i = 0; i < u.size(); ++i)
      if (u[i] < from[i]) {
        applicable = false;
        break;
      }
    if (!applicable) return;
    Exponents v = u - from + to;
    int j = result.index_of(v);
    unite(parent, idx, j);
  };

  for (int idx = 0; idx < count; ++idx) {
    for (const Relation& r : p.relations) {
      apply_moves(idx, r.lhs, r.rhs);
      apply_moves(idx, r.rhs, r.lhs);
    }
  }

  result.class_id.assign(static_cast<std::size_t>(count), -1);
  int next = 0;
  for (int idx = 0; idx < count; ++idx) {
    int root = find_root(parent, idx);
    if (result.class_id[static_cast<std::size_t>(root)] < 0)
      result.class_id[static_cast<std::size_t>(root)] = next++;
    result.class_id[static_cast<std::size_t>(idx)] =
        result.class_id[static_cast<std::size_t>(root)];
  }
  result.class_count = next;
  return result;
}

bool congruent(const Presentation& p, const Exponents& u, const Exponents& v,
               std::uint64_t cap) {
  if (u.size() != p.generators || v.size() != p.generators)
    throw std::invalid_argument("vector size does not match generator count");
  if (degree(u) != degree(v)) return false;
  if (matrix_equal(u, v)) return true;
  CongruenceClasses classes = congruence_classes(p, degree(u), cap);
  return classes.class_of(u) == classes.class_of(v);
}

bool is_commutative_consistent(const Interaction& i) { return is_exchangeable(i).exchangeable; }

}  // namespace iq
