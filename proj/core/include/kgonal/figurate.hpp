#pragma once

// Polygonal numbers P(n;k) = ((k-2)n^2 + (4-k)n) / 2 and centered polygonal
// numbers C(m;k) = (km^2 - km + 2) / 2, forward and inverse.

#include <optional>

#include "kgonal/exactmath.hpp"

namespace kgonal {

/// Polygon order k >= 3 together with D = k(k-2) = (k-1)^2 - 1.
class PolygonParams {
 public:
  /// Throws DomainError for k < 3.
  explicit PolygonParams(long k);

  long k() const { return k_; }
  const BigInt& disc() const { return disc_; }

  friend bool operator==(const PolygonParams&, const PolygonParams&) = default;

 private:
  long k_;
  BigInt disc_;
};

/// n-th k-gonal number, n >= 1.
BigInt polygonal(const BigInt& n, const PolygonParams& params);

/// m-th centered k-gonal number, m >= 1. C(0;k) also equals 1, so m = 0 is
/// rejected to keep every value's witness index unique.
BigInt centered(const BigInt& m, const PolygonParams& params);

/// n >= 1 with polygonal(n) == x, if any. Requires x >= 1.
std::optional<BigInt> invert_polygonal(const BigInt& x, const PolygonParams& params);

/// m >= 1 with centered(m) == x, if any. Requires x >= 1.
std::optional<BigInt> invert_centered(const BigInt& x, const PolygonParams& params);

}  // namespace kgonal
