#include "iq/exact_linalg.hpp"

#include <cassert>
#include <utility>

namespace iq {
namespace {

// Row-style HNF elimination in place. Every row operation is mirrored on
// *companion when given, so passing the identity yields a unimodular U with
// U * input = result.
Eigen::Index hnf_eliminate(IntMatrix& a, IntMatrix* companion) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  auto swap_rows = [&](Eigen::Index x, Eigen::Index y) {
    if (x == y) return;
    a.row(x).swap(a.row(y));
    if (companion) companion->row(x).swap(companion->row(y));
  };
  auto negate_row = [&](Eigen::Index x) {
    a.row(x) = -a.row(x);
    if (companion) companion->row(x) = -companion->row(x);
  };
  auto add_multiple = [&](Eigen::Index dst, Eigen::Index src, const Int& c) {
    if (c == 0) return;
    a.row(dst) -= c * a.row(src);
    if (companion) companion->row(dst) -= c * companion->row(src);
  };

  Eigen::Index t = 0;
  for (Eigen::Index j = 0; j < cols && t < rows; ++j) {
    // Euclidean elimination below row t in column j.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        if (a(i, j) == 0) continue;
        if (best < 0 || mpz_cmpabs(a(i, j).get_mpz_t(), a(best, j).get_mpz_t()) < 0) best = i;
      }
      if (best < 0) break;
      swap_rows(t, best);
      if (a(t, j) < 0) negate_row(t);
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, j) == 0) continue;
        add_multiple(i, t, floor_div(a(i, j), a(t, j)));
        if (a(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (t < rows && a(t, j) != 0) {
      for (Eigen::Index i = 0; i < t; ++i) add_multiple(i, t, floor_div(a(i, j), a(t, j)));
      ++t;
    }
  }
  return t;  // rank; rows t.. are zero
}

// Smith elimination. Column operations are mirrored as row operations on
// *vinv (initialized to the identity), maintaining vinv = V^-1 where
// U * input * V = diag(divisors); the top `rank` rows of V^-1 then span the
// saturation of the input's row lattice.
SmithDecomposition snf_eliminate(IntMatrix& a, IntMatrix* vinv) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (vinv) *vinv = IntMatrix::Identity(cols, cols);

  auto swap_cols = [&](Eigen::Index x, Eigen::Index y) {
    if (x == y) return;
    a.col(x).swap(a.col(y));
    if (vinv) vinv->row(x).swap(vinv->row(y));
  };
  auto col_sub_multiple = [&](Eigen::Index dst, Eigen::Index src, const Int& q) {
    // col dst -= q * col src  ==>  row src of V^-1 += q * row dst of V^-1
    if (q == 0) return;
    a.col(dst) -= q * a.col(src);
    if (vinv) vinv->row(src) += q * vinv->row(dst);
  };

  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows && pi < 0; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    a.row(t).swap(a.row(pi));
    swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot (row operations only).
      for (;;) {
        if (a(t, t) < 0) a.row(t) = -a.row(t);
        bool again = false;
        for (Eigen::Index i = t + 1; i < rows; ++i) {
          if (a(i, t) == 0) continue;
          a.row(i) -= floor_div(a(i, t), a(t, t)) * a.row(t);
          if (a(i, t) != 0) {
            a.row(t).swap(a.row(i));
            again = true;
            break;
          }
        }
        if (!again) break;
      }
      // Clear row t right of the pivot (column operations; swaps may
      // repopulate column t below).
      for (;;) {
        bool again = false;
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(t, j) == 0) continue;
          col_sub_multiple(j, t, floor_div(a(t, j), a(t, t)));
          if (a(t, j) != 0) {
            swap_cols(t, j);
            again = true;
          }
        }
        if (!again) break;
      }
      bool col_clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (a(i, t) != 0) col_clean = false;
      if (col_clean) break;
    }

    // Enforce divisibility of the trailing block by the pivot.
    bool divides_all = true;
    for (Eigen::Index i = t + 1; i < rows && divides_all; ++i)
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.row(t) += a.row(i);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;  // pivot row polluted on purpose; re-eliminate

    if (a(t, t) < 0) a.row(t) = -a.row(t);
    ++t;
  }

  SmithDecomposition d;
  d.rank = t;
  d.elementary_divisors.reserve(static_cast<std::size_t>(t));
  for (Eigen::Index i = 0; i < t; ++i) d.elementary_divisors.push_back(a(i, i));
  return d;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix m) {
  Eigen::Index rank = hnf_eliminate(m, nullptr);
  IntMatrix h = m.topRows(rank);
  return h;
}

Lattice Lattice::zero(Eigen::Index ambient_dim) {
  Lattice l;
  l.dim_ = ambient_dim;
  l.basis_ = IntMatrix(0, ambient_dim);
  return l;
}

Lattice Lattice::from_rows(const IntMatrix& rows, Eigen::Index ambient_dim) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim)
    throw std::invalid_argument("lattice rows do not match ambient dimension");
  Lattice l;
  l.dim_ = ambient_dim;
  IntMatrix padded = rows;
  if (padded.cols() != ambient_dim) padded.resize(0, ambient_dim);
  l.basis_ = hermite_normal_form(std::move(padded));
  return l;
}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != dim_) return false;
  IntVector w = v;
  Eigen::Index col = 0;
  for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
    while (col < dim_ && basis_(r, col) == 0) ++col;
    assert(col < dim_);
    const Int& pivot = basis_(r, col);
    if (w[col] % pivot != 0) return false;
    Int q = w[col] / pivot;
    if (q != 0) w -= q * basis_.row(r).transpose();
  }
  for (Eigen::Index i = 0; i < dim_; ++i)
    if (w[i] != 0) return false;
  return true;
}

SmithDecomposition smith_normal_form(IntMatrix m) { return snf_eliminate(m, nullptr); }

IntMatrix rational_kernel(const IntMatrix& m) {
  const Eigen::Index n = m.cols();
  IntMatrix a = m.transpose();
  IntMatrix u = IntMatrix::Identity(n, n);
  Eigen::Index rank = hnf_eliminate(a, &u);
  IntMatrix kernel = u.bottomRows(n - rank);
  return hermite_normal_form(std::move(kernel));
}

IntMatrix row_space_canonical(const IntMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  RatMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = Rat(m(i, j));

  Eigen::Index t = 0;
  for (Eigen::Index j = 0; j < cols && t < rows; ++j) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      if (a(i, j) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(t).swap(a.row(pivot));
    Rat lead = a(t, j);
    for (Eigen::Index k = j; k < cols; ++k) a(t, k) /= lead;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == t || a(i, j) == 0) continue;
      Rat f = a(i, j);
      for (Eigen::Index k = j; k < cols; ++k) a(i, k) -= f * a(t, k);
    }
    ++t;
  }

  IntMatrix out(t, cols);
  for (Eigen::Index i = 0; i < t; ++i) {
    Int lcm_den = 1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      Int den = a(i, j).get_den();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    IntVector row(cols);
    Int content = 0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      Rat scaled = a(i, j) * Rat(lcm_den);
      row[j] = scaled.get_num();
      content = gcd(content, row[j]);
    }
    if (content > 1)
      for (Eigen::Index j = 0; j < cols; ++j) row[j] /= content;
    out.row(i) = row.transpose();
  }
  return out;
}

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  IntMatrix a = l.basis();
  IntMatrix vinv;
  SmithDecomposition d = snf_eliminate(a, &vinv);
  return Lattice::from_rows(vinv.topRows(d.rank), l.ambient_dim());
}

bool is_torsion_free_quotient(const Lattice& l) {
  SmithDecomposition d = smith_normal_form(l.basis());
  for (const Int& e : d.elementary_divisors)
    if (e != 1) return false;
  return true;
}

}  // namespace iq
