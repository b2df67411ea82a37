#pragma once

#include <vector>

#include "iq/numeric.hpp"

// Exact integer linear algebra over dense Eigen matrices with GMP entries:
// Hermite and Smith normal forms, rational kernels with primitive integer
// bases, and lattice saturation. All routines are exact; entry growth during
// elimination is absorbed by arbitrary-precision arithmetic.
//
// Conventions: matrices act on row vectors, lattices are row lattices. The
// canonical Hermite normal form used throughout is row-style echelon with
// positive pivots, entries above each pivot reduced into [0, pivot), and
// zero rows dropped, which makes lattice equality a structural comparison.
namespace iq {

struct SmithDecomposition {
  std::vector<Int> elementary_divisors;  // positive, d1 | d2 | ...
  Eigen::Index rank = 0;                 // == elementary_divisors.size()
};

/// Integer row lattice in a fixed ambient dimension; basis kept in canonical HNF.
class Lattice {
 public:
  Lattice() = default;

  static Lattice zero(Eigen::Index ambient_dim);
  /// Canonicalizes the given spanning rows (they need not be independent).
  static Lattice from_rows(const IntMatrix& rows, Eigen::Index ambient_dim);

  const IntMatrix& basis() const { return basis_; }
  Eigen::Index ambient_dim() const { return dim_; }
  Eigen::Index rank() const { return basis_.rows(); }

  bool contains(const IntVector& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && matrix_equal(a.basis_, b.basis_);
  }

 private:
  IntMatrix basis_{0, 0};
  Eigen::Index dim_ = 0;
};

/// Canonical row-style Hermite normal form; zero rows are dropped, so the
/// result is the canonical basis of the input's row lattice.
IntMatrix hermite_normal_form(IntMatrix m);

SmithDecomposition smith_normal_form(IntMatrix m);

/// Primitive integer basis, in HNF, of { x in Q^cols : m x = 0 }.
/// The 0-row matrix yields the identity basis.
IntMatrix rational_kernel(const IntMatrix& m);

/// Canonical primitive-integer representative of the rational row space
/// (reduced row echelon form over Q, each row scaled to content 1 with a
/// positive leading entry). Unique per row space; usable for subspace equality.
IntMatrix row_space_canonical(const IntMatrix& m);

/// Saturation (R-span of L) intersected with Z^n, computed by a Smith
/// change of basis: divide the elementary divisors out of the basis.
Lattice saturate(const Lattice& l);

/// True iff Z^dim / L is torsion-free, i.e. every elementary divisor of the
/// basis is 1. Independent of the saturate() code path.
bool is_torsion_free_quotient(const Lattice& l);

}  // namespace iq
