#pragma once

// Numbers that are both k-gonal and centered k-gonal.
//
// With alpha, beta = k-1 +- sqrt(k(k-2)) and (s_i, u_i) the rationalized
// powers from exactmath, the i-th common value (i >= 0) is
//
//   N_i = (k s_{2i+1} - 2k^2 + 18k - 32) / (16(k-2))
//
// with witnesses
//
//   m_i = (2 + s_i + k u_i) / 4          (centered index)
//   a_i = (s_{i+1} + s_i) / 2            (a_i^2 = k(k-2)(2m_i-1)^2 + 2k)
//   n_i = (k - 4 + a_i) / (2(k-2))       (polygonal index)
//   b_i = (s_i + (k-2) u_i) / 2
//
// Every division above is exact; each one is checked rather than assumed.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kgonal/exactmath.hpp"
#include "kgonal/figurate.hpp"

namespace kgonal {

struct IntersectionRecord {
  long k = 0;
  std::uint64_t i = 0;
  BigInt value;
  BigInt m;  // centered index
  BigInt n;  // polygonal index
  BigInt a;  // sqrt(k(k-2)(2m-1)^2 + 2k)
  BigInt A;  // 2m - 1
  BigInt b;

  friend bool operator==(const IntersectionRecord&, const IntersectionRecord&) = default;
};

BigInt value_at(const PolygonParams& params, std::uint64_t i);
BigInt index_m(const PolygonParams& params, std::uint64_t i);
BigInt radical_a(const PolygonParams& params, std::uint64_t i);
BigInt index_n(const PolygonParams& params, std::uint64_t i);
BigInt companion_b(const PolygonParams& params, std::uint64_t i);

/// Closed-form record with every invariant checked: P(n) == C(m) == value,
/// a^2 == k(k-2)A^2 + 2k, and the Case-1 Pell equation for (A, b).
/// Throws InvariantViolation if any of them fails.
IntersectionRecord record(const PolygonParams& params, std::uint64_t i);

/// Throws InvariantViolation unless `rec` satisfies all record invariants.
void check_record(const PolygonParams& params, const IntersectionRecord& rec);

/// x_{i+1} = multiplier * x_i - x_{i-1} + constant.
class ShiftedRecurrence {
 public:
  ShiftedRecurrence() = default;
  ShiftedRecurrence(BigInt multiplier, BigInt constant, BigInt current, BigInt next)
      : multiplier_(std::move(multiplier)),
        constant_(std::move(constant)),
        cur_(std::move(current)),
        next_(std::move(next)) {}

  /// Constant fixed by three consecutive terms x0, x1, x2.
  static BigInt calibrate(const BigInt& multiplier, const BigInt& x0, const BigInt& x1,
                          const BigInt& x2) {
    return x2 - multiplier * x1 + x0;
  }

  const BigInt& current() const { return cur_; }
  const BigInt& constant() const { return constant_; }

  void advance() {
    BigInt after = multiplier_ * next_ - cur_ + constant_;
    cur_ = std::move(next_);
    next_ = std::move(after);
  }

 private:
  BigInt multiplier_;
  BigInt constant_;
  BigInt cur_;
  BigInt next_;
};

/// Generates records i = start, start+1, ... with constant work per term.
/// The value sequence obeys N_{i+1} = (4(k-1)^2 - 2) N_i - N_{i-1} + c and
/// the witnesses obey the same shape with multiplier 2(k-1); every constant
/// is calibrated from the closed form at i = 0, 1, 2. Not thread-safe;
/// separate instances are independent.
class IntersectionStream {
 public:
  IntersectionStream(const PolygonParams& params, std::uint64_t start);

  const IntersectionRecord& current() const { return rec_; }
  void advance();

  /// The constant c of the value recurrence.
  const BigInt& value_constant() const { return value_.constant(); }

 private:
  void refresh();

  PolygonParams params_;
  std::uint64_t i_;
  ShiftedRecurrence value_;
  ShiftedRecurrence m_;
  ShiftedRecurrence n_;
  ShiftedRecurrence a_;
  ShiftedRecurrence b_;
  IntersectionRecord rec_;
};

/// Records for i = start .. start+count-1.
std::vector<IntersectionRecord> stream(const PolygonParams& params, std::uint64_t start,
                                       std::size_t count);

struct Case2Term {
  BigInt m;
  BigInt value;

  friend bool operator==(const Case2Term&, const Case2Term&) = default;
};

/// For square k = j^2: solutions of b^2 - (k-2)A'^2 = 2 seeded at (j, 1),
/// mapped through A' = 2m - 1 to (m, C(m;k)). Throws DomainError unless k is
/// a perfect square >= 4.
std::vector<Case2Term> case2_sequence(const PolygonParams& params, std::size_t count);

}  // namespace kgonal
