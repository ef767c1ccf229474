#include "kgonal/exactmath.hpp"

#include <utility>

namespace kgonal {

BigInt isqrt(const BigInt& x) {
  if (sgn(x) < 0) {
    throw DomainError("isqrt: negative argument " + x.get_str());
  }
  if (x < 2) {
    return x;
  }
  // Start above the root: 2^ceil(bits/2) > sqrt(x). From any start above the
  // root, Newton steps decrease strictly until they reach floor(sqrt(x)), so
  // the first non-decreasing step marks the answer.
  const auto bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, (bits + 1) / 2);
  while (true) {
    BigInt y = (r + x / r) / 2;
    if (y >= r) {
      return r;
    }
    r = std::move(y);
  }
}

std::optional<BigInt> is_perfect_square(const BigInt& x) {
  BigInt r = isqrt(x);
  if (r * r == x) {
    return r;
  }
  return std::nullopt;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (sgn(den) == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw InvariantViolation(std::string(what) + ": " + num.get_str() + " is not divisible by " +
                             den.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

QuadInt::QuadInt(BigInt a, BigInt b, BigInt disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {
  if (sgn(disc_) <= 0) {
    throw DomainError("QuadInt: discriminant must be positive, got " + disc_.get_str());
  }
  if (is_perfect_square(disc_)) {
    throw DomainError("QuadInt: discriminant " + disc_.get_str() + " is a perfect square");
  }
}

QuadInt::QuadInt(BigInt a, BigInt b, BigInt disc, Unchecked)
    : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {}

QuadInt QuadInt::one(const BigInt& disc) { return QuadInt(1, 0, disc); }

BigInt QuadInt::norm() const { return a_ * a_ - disc_ * b_ * b_; }

QuadInt QuadInt::conjugate() const { return QuadInt(a_, -b_, disc_, Unchecked{}); }

QuadInt quad_mul(const QuadInt& p, const QuadInt& q) {
  if (p.disc_ != q.disc_) {
    throw DomainError("quad_mul: discriminants differ (" + p.disc_.get_str() + " vs " +
                      q.disc_.get_str() + ")");
  }
  BigInt a = p.a_ * q.a_ + p.disc_ * p.b_ * q.b_;
  BigInt b = p.a_ * q.b_ + q.a_ * p.b_;
  return QuadInt(std::move(a), std::move(b), p.disc_, QuadInt::Unchecked{});
}

QuadInt quad_pow(const QuadInt& p, std::uint64_t e) {
  QuadInt result = QuadInt::one(p.disc());
  QuadInt base = p;
  while (e != 0) {
    if (e & 1U) {
      result = quad_mul(result, base);
    }
    e >>= 1;
    if (e != 0) {
      base = quad_mul(base, base);
    }
  }
  return result;
}

namespace {

void require_polygon_order(long k, const char* who) {
  if (k < 3) {
    throw DomainError(std::string(who) + ": polygon order must be >= 3, got " +
                      std::to_string(k));
  }
}

}  // namespace

QuadInt polygon_unit(long k) {
  require_polygon_order(k, "polygon_unit");
  return QuadInt(k - 1, 1, BigInt(k) * (k - 2));
}

LucasPair lucas_pair(long k, std::uint64_t i) {
  require_polygon_order(k, "lucas_pair");
  LucasSequence seq(k, i);
  return seq.current();
}

LucasPair lucas_pair_via_power(long k, std::uint64_t i) {
  QuadInt p = quad_pow(polygon_unit(k), i);
  return LucasPair{k, i, 2 * p.a(), 2 * p.b()};
}

LucasSequence::LucasSequence(long k, std::uint64_t start)
    : trace_(2 * BigInt(k - 1)),
      cur_{k, 0, 2, 0},
      next_{k, 1, trace_, 2} {
  require_polygon_order(k, "LucasSequence");
  for (std::uint64_t j = 0; j < start; ++j) {
    advance();
  }
}

void LucasSequence::advance() {
  LucasPair after{cur_.k, next_.index + 1, trace_ * next_.s - cur_.s, trace_ * next_.u - cur_.u};
  cur_ = std::move(next_);
  next_ = std::move(after);
}

}  // namespace kgonal
