#pragma once

// Exact integer utilities and arithmetic in the quadratic ring Z[sqrt(D)].
//
// Nothing here ever touches floating point. Elements a + b*sqrt(D) are
// carried as integer pairs, and powers of the unit k-1 + sqrt(k(k-2)) are
// rationalized into the pair (s_i, u_i) so that callers only ever divide
// integers by integers.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace kgonal {

using BigInt = mpz_class;

/// Thrown when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an identity that must hold by construction fails. Seeing one
/// means there is a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Floor of the square root: r with r^2 <= x < (r+1)^2.
/// Integer Newton iteration; throws DomainError for x < 0.
BigInt isqrt(const BigInt& x);

/// r with r^2 == x, or nullopt when x is not a perfect square.
std::optional<BigInt> is_perfect_square(const BigInt& x);

/// Exact quotient num / den. Throws InvariantViolation (carrying `what`)
/// when den does not divide num.
BigInt exact_div(const BigInt& num, const BigInt& den, const char* what);

std::string to_string(const BigInt& x);

/// a + b*sqrt(disc), disc > 0 and not a perfect square.
class QuadInt {
 public:
  QuadInt(BigInt a, BigInt b, BigInt disc);

  static QuadInt one(const BigInt& disc);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& disc() const { return disc_; }

  /// a^2 - disc*b^2
  BigInt norm() const;
  QuadInt conjugate() const;

  friend bool operator==(const QuadInt&, const QuadInt&) = default;

 private:
  struct Unchecked {};
  QuadInt(BigInt a, BigInt b, BigInt disc, Unchecked);

  friend QuadInt quad_mul(const QuadInt& p, const QuadInt& q);

  BigInt a_;
  BigInt b_;
  BigInt disc_;
};

/// Throws DomainError when the discriminants differ.
QuadInt quad_mul(const QuadInt& p, const QuadInt& q);

/// p^e by repeated squaring; p^0 is the identity.
QuadInt quad_pow(const QuadInt& p, std::uint64_t e);

/// s_i = alpha^i + beta^i and u_i = (alpha^i - beta^i) / sqrt(k(k-2)),
/// where alpha, beta = k-1 +- sqrt(k(k-2)). Both obey
/// x_{i+1} = 2(k-1) x_i - x_{i-1}, and s_i^2 - k(k-2) u_i^2 = 4.
struct LucasPair {
  long k = 0;
  std::uint64_t index = 0;
  BigInt s;
  BigInt u;

  friend bool operator==(const LucasPair&, const LucasPair&) = default;
};

/// Linear-recurrence route. Throws DomainError for k < 3.
LucasPair lucas_pair(long k, std::uint64_t i);

/// Independent route through quad_pow: alpha^i = (s_i + u_i sqrt(D)) / 2.
LucasPair lucas_pair_via_power(long k, std::uint64_t i);

/// The unit alpha = k-1 + sqrt(k(k-2)) as a ring element.
QuadInt polygon_unit(long k);

/// Steps (s_i, u_i) forward one index at a time. Holds the current and next
/// pair so that each advance costs a constant number of bignum operations.
class LucasSequence {
 public:
  /// Positioned at index `start` (computed by the recurrence from 0).
  explicit LucasSequence(long k, std::uint64_t start = 0);

  const LucasPair& current() const { return cur_; }
  const LucasPair& next() const { return next_; }
  void advance();

 private:
  BigInt trace_;  // 2(k-1)
  LucasPair cur_;
  LucasPair next_;
};

}  // namespace kgonal
