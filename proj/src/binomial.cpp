#include "iq/binomial.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "iq/errors.hpp"

namespace iq {

MonomialOrder::MonomialOrder(int vars) : vars_(vars), significance_(static_cast<std::size_t>(vars)) {
  std::iota(significance_.begin(), significance_.end(), 0);
}

MonomialOrder::MonomialOrder(int vars, std::vector<int> significance)
    : vars_(vars), significance_(std::move(significance)) {
  std::vector<char> seen(static_cast<std::size_t>(vars), 0);
  if (significance_.size() != static_cast<std::size_t>(vars))
    throw std::invalid_argument("significance must list every variable once");
  for (int v : significance_) {
    if (v < 0 || v >= vars || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("significance must list every variable once");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

MonomialOrder MonomialOrder::cheapest_last(int vars, int var) {
  std::vector<int> sig;
  sig.reserve(static_cast<std::size_t>(vars));
  for (int v = 0; v < vars; ++v)
    if (v != var) sig.push_back(v);
  sig.push_back(var);
  return MonomialOrder(vars, std::move(sig));
}

int MonomialOrder::compare(const Exponents& u, const Exponents& v) const {
  std::int64_t du = degree(u), dv = degree(v);
  if (du != dv) return du > dv ? 1 : -1;
  for (int k = vars_ - 1; k >= 0; --k) {
    int var = significance_[static_cast<std::size_t>(k)];
    if (u[var] != v[var]) return u[var] < v[var] ? 1 : -1;
  }
  return 0;
}

Binomial Binomial::oriented(const MonomialOrder& order, Exponents u, Exponents v) {
  if (u.size() != order.vars() || v.size() != order.vars())
    throw std::invalid_argument("exponent size does not match the order");
  if ((u.array() < 0).any() || (v.array() < 0).any())
    throw std::invalid_argument("monomial exponents must be nonnegative");
  int c = order.compare(u, v);
  if (c == 0) return zero(order.vars());
  if (c < 0) u.swap(v);
  return Binomial(std::move(u), std::move(v));
}

Binomial Binomial::zero(int vars) {
  return Binomial(Exponents::Zero(vars), Exponents::Zero(vars));
}

Exponents monomial_normal_form(Exponents m, const std::vector<Binomial>& elements) {
  bool rewrote = true;
  while (rewrote) {
    rewrote = false;
    for (const Binomial& e : elements) {
      if (e.is_zero()) continue;
      if ((m.array() >= e.lead().array()).all()) {
        m += e.trail() - e.lead();
        rewrote = true;
        break;
      }
    }
  }
  return m;
}

Binomial reduce(const Binomial& b, const GroebnerBasis& g) {
  if (b.is_zero()) return Binomial::zero(g.order().vars());
  Exponents u = monomial_normal_form(b.lead(), g.elements());
  Exponents v = monomial_normal_form(b.trail(), g.elements());
  return Binomial::oriented(g.order(), std::move(u), std::move(v));
}

namespace {

Binomial s_pair(const MonomialOrder& order, const Binomial& f, const Binomial& g) {
  Exponents m = f.lead().cwiseMax(g.lead());
  return Binomial::oriented(order, m - f.lead() + f.trail(), m - g.lead() + g.trail());
}

bool disjoint_leads(const Binomial& f, const Binomial& g) {
  return (f.lead().cwiseMin(g.lead()).array() == 0).all();
}

bool divides(const Exponents& d, const Exponents& m) {
  return (m.array() >= d.array()).all();
}

struct BinomialOrderLess {
  const MonomialOrder& order;
  bool operator()(const Binomial& x, const Binomial& y) const {
    int c = order.compare(x.lead(), y.lead());
    if (c != 0) return c < 0;
    return order.compare(x.trail(), y.trail()) < 0;
  }
};

// Minimal then fully interreduced basis; assumes `basis` is already a
// (possibly redundant) Groebner basis of the ideal.
std::vector<Binomial> interreduce(std::vector<Binomial> basis, const MonomialOrder& order) {
  std::erase_if(basis, [](const Binomial& b) { return b.is_zero(); });
  std::sort(basis.begin(), basis.end(), BinomialOrderLess{order});

  std::vector<Binomial> minimal;
  for (const Binomial& b : basis) {
    bool redundant = false;
    for (const Binomial& m : minimal)
      if (divides(m.lead(), b.lead())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(b);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Binomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Exponents nf = monomial_normal_form(minimal[i].trail(), others);
      if (!matrix_equal(nf, minimal[i].trail())) {
        minimal[i] = Binomial::oriented(order, minimal[i].lead(), std::move(nf));
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), BinomialOrderLess{order});
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order,
                         const WorkLimit& limit) {
  std::vector<Binomial> basis;
  for (const Binomial& g : gens) {
    Binomial b = Binomial::oriented(order, g.lead(), g.trail());
    if (!b.is_zero()) basis.push_back(std::move(b));
  }
  std::sort(basis.begin(), basis.end(), BinomialOrderLess{order});
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  std::deque<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pending.emplace_back(i, j);

  std::uint64_t work = 0;
  while (!pending.empty()) {
    auto [i, j] = pending.front();
    pending.pop_front();
    if (disjoint_leads(basis[i], basis[j])) continue;
    if (++work > limit.spair_reductions)
      throw resource_limit_error("Groebner work limit of " +
                                 std::to_string(limit.spair_reductions) +
                                 " S-pair reductions exceeded");
    Binomial s = s_pair(order, basis[i], basis[j]);
    if (s.is_zero()) continue;
    Exponents u = monomial_normal_form(s.lead(), basis);
    Exponents v = monomial_normal_form(s.trail(), basis);
    Binomial r = Binomial::oriented(order, std::move(u), std::move(v));
    if (r.is_zero()) continue;
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pending.emplace_back(k, basis.size() - 1);
  }

  return GroebnerBasis(order, interreduce(std::move(basis), order));
}

GroebnerBasis saturate_by_variable(const GroebnerBasis& g, int var, const WorkLimit& limit) {
  if (var < 0 || var >= g.order().vars()) throw std::invalid_argument("variable out of range");
  // The divide-out shortcut is only valid for homogeneous ideals.
  for (const Binomial& b : g.elements())
    if (!b.is_homogeneous())
      throw std::invalid_argument("variable saturation requires a degree-balanced ideal");
  if (g.empty()) return g;

  MonomialOrder cheap = MonomialOrder::cheapest_last(g.order().vars(), var);
  GroebnerBasis recomputed = buchberger(g.elements(), cheap, limit);

  std::vector<Binomial> divided;
  divided.reserve(recomputed.elements().size());
  for (const Binomial& b : recomputed.elements()) {
    std::int64_t m = std::min(b.lead()[var], b.trail()[var]);
    Exponents u = b.lead();
    Exponents v = b.trail();
    u[var] -= m;
    v[var] -= m;
    divided.push_back(Binomial::oriented(g.order(), std::move(u), std::move(v)));
  }
  return buchberger(divided, g.order(), limit);
}

GroebnerBasis saturate_all(const GroebnerBasis& g, const WorkLimit& limit) {
  GroebnerBasis current = g;
  for (;;) {
    GroebnerBasis next = current;
    for (int var = 0; var < g.order().vars(); ++var) next = saturate_by_variable(next, var, limit);
    if (next == current) return current;
    current = std::move(next);
  }
}

GroebnerBasis lattice_ideal(const Lattice& l, const MonomialOrder& order, const WorkLimit& limit) {
  if (l.ambient_dim() != order.vars())
    throw std::invalid_argument("lattice dimension does not match the order");
  std::vector<Binomial> gens;
  gens.reserve(static_cast<std::size_t>(l.rank()));
  for (Eigen::Index r = 0; r < l.rank(); ++r) {
    Exponents pos = Exponents::Zero(order.vars());
    Exponents neg = Exponents::Zero(order.vars());
    for (Eigen::Index j = 0; j < l.ambient_dim(); ++j) {
      std::int64_t e = to_int64(l.basis()(r, j));
      if (e > 0) pos[j] = e;
      if (e < 0) neg[j] = -e;
    }
    gens.push_back(Binomial::oriented(order, std::move(pos), std::move(neg)));
  }
  return saturate_all(buchberger(gens, order, limit), limit);
}

IdealComparison ideal_equal(const GroebnerBasis& g1, const GroebnerBasis& g2) {
  if (!(g1.order() == g2.order()))
    throw std::invalid_argument("ideal comparison requires a common order");
  if (g1.elements() == g2.elements()) return {true, std::nullopt};

  std::optional<Binomial> witness;
  BinomialOrderLess less{g1.order()};
  auto consider = [&](const Binomial& b) {
    if (!witness || less(b, *witness)) witness = b;
  };
  for (const Binomial& b : g1.elements())
    if (!reduce(b, g2).is_zero()) consider(b);
  for (const Binomial& b : g2.elements())
    if (!reduce(b, g1).is_zero()) consider(b);
  if (!witness)
    throw soundness_error("distinct reduced bases but mutual membership holds");
  return {false, witness};
}

GroebnerBasis presentation_ideal(const Presentation& p, const WorkLimit& limit) {
  MonomialOrder order(p.generators);
  std::vector<Binomial> gens;
  gens.reserve(p.relations.size());
  for (const Relation& r : p.relations)
    gens.push_back(Binomial::oriented(order, r.lhs, r.rhs));
  return buchberger(gens, order, limit);
}

bool semigroup_equal(const GroebnerBasis& presentation_basis, const Exponents& u,
                     const Exponents& v) {
  if (degree(u) != degree(v)) return false;  // relations preserve length
  return reduce(Binomial::oriented(presentation_basis.order(), u, v), presentation_basis)
      .is_zero();
}

bool semigroup_equal(const Presentation& p, const Exponents& u, const Exponents& v,
                     const WorkLimit& limit) {
  return semigroup_equal(presentation_ideal(p, limit), u, v);
}

bool is_cancellative(const GroebnerBasis& g, const WorkLimit& limit) {
  for (int var = 0; var < g.order().vars(); ++var)
    if (!(saturate_by_variable(g, var, limit) == g)) return false;
  return true;
}

}  // namespace iq
