#pragma once

// Brute-force ground truth for the closed form. The oracle walks the k-gonal
// and centered k-gonal sequences side by side and keeps their common values;
// it relies only on forward evaluation from figurate.

#include <cstddef>
#include <optional>
#include <vector>

#include "kgonal/exactmath.hpp"
#include "kgonal/figurate.hpp"

namespace kgonal {

/// A value with witnesses: polygonal(n) == centered(m) == value.
struct CommonValue {
  BigInt n;
  BigInt m;
  BigInt value;

  friend bool operator==(const CommonValue&, const CommonValue&) = default;
};

/// Every common value <= limit, ascending, via a two-pointer merge.
/// Throws DomainError for limit < 1.
std::vector<CommonValue> enumerate_common(const PolygonParams& params, const BigInt& limit);

struct Divergence {
  std::size_t index = 0;                 // position in the ordered sequence
  std::optional<CommonValue> expected;   // oracle side; absent if exhausted
  std::optional<CommonValue> actual;     // closed-form side; absent if exhausted
};

struct OracleReport {
  long k = 0;
  BigInt limit;
  std::vector<CommonValue> matches;
  bool closed_form_agreement = false;
  std::optional<Divergence> first_divergence;
};

/// Runs enumerate_common against IntersectionStream up to `limit`.
/// Disagreement is reported, not thrown.
OracleReport compare(const PolygonParams& params, const BigInt& limit);

}  // namespace kgonal
