#include "kgonal/figurate.hpp"

#include <string>

namespace kgonal {

PolygonParams::PolygonParams(long k) : k_(k) {
  if (k < 3) {
    throw DomainError("polygon order must be >= 3, got " + std::to_string(k));
  }
  disc_ = BigInt(k) * (k - 2);
}

namespace {

void require_positive(const BigInt& v, const char* who) {
  if (v < 1) {
    throw DomainError(std::string(who) + ": argument must be >= 1, got " + v.get_str());
  }
}

}  // namespace

BigInt polygonal(const BigInt& n, const PolygonParams& params) {
  require_positive(n, "polygonal");
  const long k = params.k();
  return exact_div((k - 2) * n * n + (4 - k) * n, 2, "polygonal numerator");
}

BigInt centered(const BigInt& m, const PolygonParams& params) {
  require_positive(m, "centered");
  const long k = params.k();
  return exact_div(k * m * m - k * m + 2, 2, "centered numerator");
}

// x = P(n;k)  <=>  (k-2)n^2 + (4-k)n - 2x = 0
//             <=>  n = (k-4 + sqrt((4-k)^2 + 8(k-2)x)) / (2(k-2))
std::optional<BigInt> invert_polygonal(const BigInt& x, const PolygonParams& params) {
  require_positive(x, "invert_polygonal");
  const long k = params.k();
  const BigInt disc = BigInt((4 - k) * (4 - k)) + 8 * BigInt(k - 2) * x;
  auto root = is_perfect_square(disc);
  if (!root) {
    return std::nullopt;
  }
  BigInt num = *root + (k - 4);
  BigInt den = 2 * BigInt(k - 2);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    return std::nullopt;
  }
  BigInt n = num / den;
  if (n < 1) {
    return std::nullopt;
  }
  return n;
}

// x = C(m;k)  <=>  km^2 - km + 2 - 2x = 0
//             <=>  m = (k + sqrt(k^2 + 8k(x-1))) / (2k)
std::optional<BigInt> invert_centered(const BigInt& x, const PolygonParams& params) {
  require_positive(x, "invert_centered");
  const long k = params.k();
  const BigInt disc = BigInt(k) * k + 8 * BigInt(k) * (x - 1);
  auto root = is_perfect_square(disc);
  if (!root) {
    return std::nullopt;
  }
  BigInt num = *root + k;
  BigInt den = 2 * BigInt(k);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    return std::nullopt;
  }
  return num / den;
}

}  // namespace kgonal
