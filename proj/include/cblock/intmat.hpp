#pragma once

#include "cblock/rational.hpp"

#include <vector>

namespace cblock {

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVec multiply(const IntMatrix& a, const IntVec& v);
RatMatrix to_rational(const IntMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVec multiply(const RatMatrix& a, const RatVec& v);

// Exact determinant by fraction-free elimination.
Int determinant(const IntMatrix& m);

// Inverse over Q. Throws std::domain_error for singular input.
RatMatrix inverse(const RatMatrix& m);
inline RatMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

// Row-style Hermite normal form of the lattice spanned by the rows of `gens`.
// Returns a basis (one row per rank), echelon with positive pivots and
// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_basis(const IntMatrix& gens);

// Invariant factors d_1 | d_2 | ... of a square nonsingular matrix, so that
// Z^n / (column span of m) is the product of the cyclic groups Z/d_i.
IntVec smith_invariants(const IntMatrix& m);

// True when v lies in the row lattice of the basis `rows` (square, nonsingular).
bool in_row_lattice(const IntMatrix& rows, const IntVec& v);

// Least common multiple of all denominators in m.
Int common_denominator(const RatMatrix& m);

}  // namespace cblock
