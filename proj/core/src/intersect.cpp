#include "kgonal/intersect.hpp"

#include <string>

#include "kgonal/pell.hpp"

namespace kgonal {

namespace {

BigInt value_from(const PolygonParams& params, const BigInt& s_odd) {
  const long k = params.k();
  const BigInt num = k * s_odd - BigInt(2 * k * k) + 18 * k - 32;
  return exact_div(num, 16 * BigInt(k - 2), "value numerator k*s_{2i+1} - 2k^2 + 18k - 32");
}

BigInt m_from(const PolygonParams& params, const LucasPair& l) {
  return exact_div(2 + l.s + params.k() * l.u, 4, "centered index numerator 2 + s_i + k*u_i");
}

BigInt a_from(const LucasPair& l, const LucasPair& l_next) {
  return exact_div(l_next.s + l.s, 2, "radical numerator s_{i+1} + s_i");
}

BigInt n_from(const PolygonParams& params, const BigInt& a) {
  const long k = params.k();
  return exact_div(a + (k - 4), 2 * BigInt(k - 2), "polygonal index numerator k - 4 + a_i");
}

BigInt b_from(const PolygonParams& params, const LucasPair& l) {
  return exact_div(l.s + (params.k() - 2) * l.u, 2, "companion numerator s_i + (k-2)u_i");
}

void fail(const IntersectionRecord& rec, const std::string& what) {
  throw InvariantViolation("record k=" + std::to_string(rec.k) + " i=" + std::to_string(rec.i) +
                           ": " + what);
}

}  // namespace

BigInt value_at(const PolygonParams& params, std::uint64_t i) {
  return value_from(params, lucas_pair(params.k(), 2 * i + 1).s);
}

BigInt index_m(const PolygonParams& params, std::uint64_t i) {
  return m_from(params, lucas_pair(params.k(), i));
}

BigInt radical_a(const PolygonParams& params, std::uint64_t i) {
  LucasSequence seq(params.k(), i);
  return a_from(seq.current(), seq.next());
}

BigInt index_n(const PolygonParams& params, std::uint64_t i) {
  return n_from(params, radical_a(params, i));
}

BigInt companion_b(const PolygonParams& params, std::uint64_t i) {
  return b_from(params, lucas_pair(params.k(), i));
}

IntersectionRecord record(const PolygonParams& params, std::uint64_t i) {
  LucasSequence seq(params.k(), i);
  const LucasPair l = seq.current();
  const LucasPair l_next = seq.next();
  // s_{2i+1} = s_i s_{i+1} - s_1 since alpha*beta = 1; value_at walks the
  // recurrence to 2i+1 instead, so the two stay independent.
  const BigInt s_odd = l.s * l_next.s - 2 * BigInt(params.k() - 1);

  IntersectionRecord rec;
  rec.k = params.k();
  rec.i = i;
  rec.value = value_from(params, s_odd);
  rec.m = m_from(params, l);
  rec.a = a_from(l, l_next);
  rec.n = n_from(params, rec.a);
  rec.A = 2 * rec.m - 1;
  rec.b = b_from(params, l);
  check_record(params, rec);
  return rec;
}

void check_record(const PolygonParams& params, const IntersectionRecord& rec) {
  const long k = params.k();
  if (rec.k != k) {
    fail(rec, "polygon order mismatch");
  }
  if (rec.m < 1 || rec.n < 1) {
    fail(rec, "witness index is not positive");
  }
  if (rec.A != 2 * rec.m - 1) {
    fail(rec, "A != 2m - 1");
  }
  if (polygonal(rec.n, params) != rec.value) {
    fail(rec, "P(n;k) != value");
  }
  if (centered(rec.m, params) != rec.value) {
    fail(rec, "C(m;k) != value");
  }
  if (params.disc() * rec.A * rec.A + 2 * k != rec.a * rec.a) {
    fail(rec, "k(k-2)(2m-1)^2 + 2k != a^2");
  }
  if (rec.n * 2 * (k - 2) != rec.a + (k - 4)) {
    fail(rec, "n != (k - 4 + a) / (2(k-2))");
  }
  bool eq2 = false;
  try {
    eq2 = eq2_check(params, rec.A, rec.b);
  } catch (const DomainError& e) {
    fail(rec, e.what());
  }
  if (!eq2) {
    fail(rec, "(A, b) does not solve the Case-1 Pell equation");
  }
}

IntersectionStream::IntersectionStream(const PolygonParams& params, std::uint64_t start)
    : params_(params), i_(start) {
  const long k = params.k();
  const BigInt trace = 2 * BigInt(k - 1);
  const BigInt trace_sq = trace * trace - 2;

  const IntersectionRecord r0 = record(params, 0);
  const IntersectionRecord r1 = record(params, 1);
  const IntersectionRecord r2 = record(params, 2);
  const IntersectionRecord cur = start == 0 ? r0 : start == 1 ? r1 : record(params, start);
  const IntersectionRecord nxt =
      start == 0 ? r1 : start == 1 ? r2 : record(params, start + 1);

  auto make = [&](const BigInt& mult, auto field) {
    return ShiftedRecurrence(mult, ShiftedRecurrence::calibrate(mult, r0.*field, r1.*field,
                                                                r2.*field),
                             cur.*field, nxt.*field);
  };
  value_ = make(trace_sq, &IntersectionRecord::value);
  m_ = make(trace, &IntersectionRecord::m);
  n_ = make(trace, &IntersectionRecord::n);
  a_ = make(trace, &IntersectionRecord::a);
  b_ = make(trace, &IntersectionRecord::b);
  refresh();
}

void IntersectionStream::refresh() {
  rec_.k = params_.k();
  rec_.i = i_;
  rec_.value = value_.current();
  rec_.m = m_.current();
  rec_.n = n_.current();
  rec_.a = a_.current();
  rec_.A = 2 * rec_.m - 1;
  rec_.b = b_.current();
  check_record(params_, rec_);
}

void IntersectionStream::advance() {
  ++i_;
  value_.advance();
  m_.advance();
  n_.advance();
  a_.advance();
  b_.advance();
  refresh();
}

std::vector<IntersectionRecord> stream(const PolygonParams& params, std::uint64_t start,
                                       std::size_t count) {
  std::vector<IntersectionRecord> out;
  if (count == 0) {
    return out;
  }
  out.reserve(count);
  IntersectionStream gen(params, start);
  out.push_back(gen.current());
  while (out.size() < count) {
    gen.advance();
    out.push_back(gen.current());
  }
  return out;
}

// With k = j^2 and a^2 = k b^2, dividing a^2 = k(k-2)(2m-1)^2 + 2k by k
// leaves b^2 - (k-2)(2m-1)^2 = 2, seeded by (j, 1) at m = 1.
std::vector<Case2Term> case2_sequence(const PolygonParams& params, std::size_t count) {
  const long k = params.k();
  const auto root = is_perfect_square(BigInt(k));
  if (k < 4 || !root) {
    throw DomainError("case2_sequence: k = " + std::to_string(k) +
                      " is not a perfect square >= 4");
  }
  const BigInt d = k - 2;
  const PellSolution seed{*root, 1, d, 2};

  std::vector<Case2Term> out;
  if (count == 0) {
    return out;
  }
  out.reserve(count);
  for (const auto& sol : norm_two_solutions(d, seed, count)) {
    // x^2 - d y^2 = 2 has no solution with y even (x^2 would be 2 mod 4).
    if (!mpz_odd_p(sol.y.get_mpz_t())) {
      throw InvariantViolation("case2_sequence: norm-2 solution with even y = " +
                               sol.y.get_str());
    }
    BigInt m = (sol.y + 1) / 2;
    BigInt value = centered(m, params);
    out.push_back(Case2Term{std::move(m), std::move(value)});
  }
  return out;
}

}  // namespace kgonal
