#pragma once

#include <cstdint>
#include <vector>

#include "iq/interaction.hpp"
#include "iq/numeric.hpp"

// The commutative semigroup attached to an interaction, presented on one
// generator per state with one length-preserving degree-2 relation per edge.
// This module carries the brute-force side of every congruence question:
// exhaustive per-degree class enumeration, kept deliberately independent of
// the Groebner-basis engine so the two can be played against each other.
namespace iq {

struct Relation {
  Exponents lhs;
  Exponents rhs;
  friend bool operator==(const Relation& x, const Relation& y) {
    return matrix_equal(x.lhs, y.lhs) && matrix_equal(x.rhs, y.rhs);
  }
};

struct Presentation {
  int generators = 0;
  std::vector<Relation> relations;
};

/// One relation e_s + e_t = e_s' + e_t' per edge. The commutative reading is
/// faithful to the word-level semigroup only for exchangeable interactions;
/// the decision pipeline enforces that gate.
Presentation presentation_of(const Interaction& i);

/// Multiset image of a configuration: counts[k] = number of sites in state k.
Exponents configuration_to_element(const Configuration& eta, int states);

/// Canonical preimage: state 0 repeated u[0] times, then state 1, ...
Configuration element_to_configuration(const Exponents& u);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Number of exponent vectors of total degree d over n variables.
Int count_degree_vectors(int n, std::int64_t d);

/// All exponent vectors of degree d, in decreasing lexicographic order.
/// Throws resource_limit_error when the count exceeds `cap`.
std::vector<Exponents> enumerate_degree(int n, std::int64_t d,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// Partition of all degree-d exponent vectors into congruence classes,
/// computed by exhausting single-relation rewrite moves.
struct CongruenceClasses {
  std::int64_t degree = 0;
  std::vector<Exponents> vectors;  // enumerate_degree order
  std::vector<int> class_id;       // parallel to vectors
  int class_count = 0;

  int index_of(const Exponents& u) const;  // -1 when absent
  int class_of(const Exponents& u) const;
};

CongruenceClasses congruence_classes(const Presentation& p, std::int64_t degree,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Brute-force congruence test; the oracle path. Vectors of different degree
/// are never congruent (the relations are length-preserving).
bool congruent(const Presentation& p, const Exponents& u, const Exponents& v,
               std::uint64_t cap = kDefaultEnumerationCap);

/// The commutative encoding above is valid exactly when this holds.
bool is_commutative_consistent(const Interaction& i);

}  // namespace iq
