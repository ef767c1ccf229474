#pragma once

// Pell equations x^2 - D y^2 = 1 solved from the continued fraction of
// sqrt(D), plus the norm-2 form x^2 - d y^2 = 2 reached by composing a seed
// with powers of the fundamental unit.

#include <cstddef>
#include <vector>

#include "kgonal/exactmath.hpp"
#include "kgonal/figurate.hpp"

namespace kgonal {

/// (x, y) with x^2 - disc*y^2 == norm, x > 0, y >= 0.
struct PellSolution {
  BigInt x;
  BigInt y;
  BigInt disc;
  int norm = 1;

  bool satisfies_norm() const { return x * x - disc * y * y == norm; }

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// sqrt(disc) = [a0; period, period, ...] with the minimal period, whose
/// last element is always 2*a0.
struct CFExpansion {
  BigInt disc;
  BigInt a0;
  std::vector<BigInt> period;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

/// Throws DomainError when D < 2 or D is a perfect square.
CFExpansion cf_expand(const BigInt& disc);

/// Least nontrivial solution of x^2 - D y^2 = 1, from the convergent at the
/// end of the first period (of the second period when its length is odd).
PellSolution pell_fundamental(const BigInt& disc);

/// First `count` nontrivial solutions, fundamental first; (1, 0) is never
/// emitted.
std::vector<PellSolution> pell_solutions(const BigInt& disc, std::size_t count);

/// Brahmagupta composition (x, y) o (u, v) = (xu + d y v, x v + y u). Norms
/// multiply; the discriminants must agree.
PellSolution compose(const PellSolution& p, const PellSolution& q);

/// Seed first, then seed o eps^j for j = 1, 2, ... where eps is the
/// fundamental unit of d. Throws DomainError if the seed does not have
/// norm 2 over d.
std::vector<PellSolution> norm_two_solutions(const BigInt& d, const PellSolution& seed,
                                             std::size_t count);

/// True iff ((kb - (k-2)A)/2)^2 - k(k-2)((A-b)/2)^2 == 1. Throws DomainError
/// when either half is not an integer.
bool eq2_check(const PolygonParams& params, const BigInt& A, const BigInt& b);

/// Even-k form of the same equation: Z = (kb - (k-2)A)/2, W = A - b and
/// Z^2 - (k(k-2)/4) W^2 == 1. Throws DomainError for odd k or a
/// non-integral Z.
bool eq2_check_even(const PolygonParams& params, const BigInt& A, const BigInt& b);

}  // namespace kgonal
