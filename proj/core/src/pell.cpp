#include "kgonal/pell.hpp"

#include <string>
#include <utility>

namespace kgonal {

namespace {

void require_pell_disc(const BigInt& disc, const char* who) {
  if (disc < 2) {
    throw DomainError(std::string(who) + ": discriminant must be >= 2, got " + disc.get_str());
  }
  if (is_perfect_square(disc)) {
    throw DomainError(std::string(who) + ": discriminant " + disc.get_str() +
                      " is a perfect square");
  }
}

}  // namespace

// Complete quotients of sqrt(D) are (m + sqrt(D)) / d with
//   m' = d a - m,  d' = (D - m'^2) / d,  a' = floor((a0 + m') / d').
// The period closes at the first partial quotient equal to 2 a0.
CFExpansion cf_expand(const BigInt& disc) {
  require_pell_disc(disc, "cf_expand");
  CFExpansion cf{disc, isqrt(disc), {}};
  BigInt m = 0;
  BigInt d = 1;
  BigInt a = cf.a0;
  const BigInt stop = 2 * cf.a0;
  do {
    m = d * a - m;
    d = exact_div(disc - m * m, d, "cf_expand denominator");
    a = (cf.a0 + m) / d;
    cf.period.push_back(a);
  } while (a != stop);
  return cf;
}

PellSolution pell_fundamental(const BigInt& disc) {
  const CFExpansion cf = cf_expand(disc);
  // Convergents p/q of [a0; a1, ..., a_{r-1}].
  BigInt p_prev = 1;
  BigInt q_prev = 0;
  BigInt p = cf.a0;
  BigInt q = 1;
  const std::size_t r = cf.period.size();
  for (std::size_t j = 0; j + 1 < r; ++j) {
    const BigInt& a = cf.period[j];
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  QuadInt unit(p, q, disc);
  if (r % 2 == 1) {
    // Odd period: p^2 - D q^2 == -1, so square to reach norm +1.
    unit = quad_mul(unit, unit);
  }
  PellSolution sol{unit.a(), unit.b(), disc, 1};
  if (!sol.satisfies_norm()) {
    throw InvariantViolation("pell_fundamental: convergent fails the norm check for D = " +
                             disc.get_str());
  }
  return sol;
}

std::vector<PellSolution> pell_solutions(const BigInt& disc, std::size_t count) {
  const PellSolution fund = pell_fundamental(disc);
  const QuadInt unit(fund.x, fund.y, disc);
  std::vector<PellSolution> out;
  out.reserve(count);
  QuadInt power = unit;
  for (std::size_t j = 0; j < count; ++j) {
    if (j != 0) {
      power = quad_mul(power, unit);
    }
    out.push_back(PellSolution{power.a(), power.b(), disc, 1});
  }
  return out;
}

PellSolution compose(const PellSolution& p, const PellSolution& q) {
  if (p.disc != q.disc) {
    throw DomainError("compose: discriminants differ (" + p.disc.get_str() + " vs " +
                      q.disc.get_str() + ")");
  }
  return PellSolution{p.x * q.x + p.disc * p.y * q.y, p.x * q.y + p.y * q.x, p.disc,
                      p.norm * q.norm};
}

std::vector<PellSolution> norm_two_solutions(const BigInt& d, const PellSolution& seed,
                                             std::size_t count) {
  require_pell_disc(d, "norm_two_solutions");
  if (seed.disc != d || seed.norm != 2 || !seed.satisfies_norm() || seed.x <= 0 ||
      seed.y < 0) {
    throw DomainError("norm_two_solutions: seed (" + seed.x.get_str() + ", " +
                      seed.y.get_str() + ") does not satisfy x^2 - " + d.get_str() +
                      " y^2 = 2");
  }
  const PellSolution unit = pell_fundamental(d);
  std::vector<PellSolution> out;
  out.reserve(count);
  PellSolution cur = seed;
  for (std::size_t j = 0; j < count; ++j) {
    if (j != 0) {
      cur = compose(cur, unit);
    }
    if (!cur.satisfies_norm()) {
      throw InvariantViolation("norm_two_solutions: composed solution lost norm 2");
    }
    out.push_back(cur);
  }
  return out;
}

namespace {

BigInt half_or_throw(const BigInt& v, const char* what) {
  if (!mpz_even_p(v.get_mpz_t())) {
    throw DomainError(std::string("eq2_check: ") + what + " = " + v.get_str() + " is odd");
  }
  return v / 2;
}

}  // namespace

bool eq2_check(const PolygonParams& params, const BigInt& A, const BigInt& b) {
  const long k = params.k();
  const BigInt z = half_or_throw(k * b - (k - 2) * A, "kb - (k-2)A");
  const BigInt w = half_or_throw(A - b, "A - b");
  return z * z - params.disc() * w * w == 1;
}

bool eq2_check_even(const PolygonParams& params, const BigInt& A, const BigInt& b) {
  const long k = params.k();
  if (k % 2 != 0) {
    throw DomainError("eq2_check_even: k = " + std::to_string(k) + " is odd");
  }
  const BigInt z = half_or_throw(k * b - (k - 2) * A, "kb - (k-2)A");
  const BigInt w = A - b;
  const BigInt quarter_disc = BigInt(k / 2) * ((k - 2) / 2);
  return z * z - quarter_disc * w * w == 1;
}

}  // namespace kgonal
