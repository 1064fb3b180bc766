#pragma once

#include <optional>
#include <utility>

#include "resym/int.hpp"

namespace resym::quadfield {

// Element (A + B*sqrt(d))/2 of O_{Q(sqrt d)}, d squarefree positive.
// Doubled coordinates keep half-integer arithmetic exact; the invariant
// A = B (mod 2) holds throughout (and A, B even when d = 2,3 mod 4).
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(Int A, Int B, Int d);
  static QuadInt from_int_coords(const Int& a, const Int& b, const Int& d) {
    return QuadInt(2 * a, 2 * b, d);
  }
  static QuadInt integer(const Int& a, const Int& d) { return from_int_coords(a, 0, d); }

  const Int& A() const { return A_; }
  const Int& B() const { return B_; }
  const Int& d() const { return d_; }
  bool half() const { return mpz_odd_p(A_.get_mpz_t()); }

  // integer coordinates when denominators are 1 (a + b sqrt d)
  std::optional<std::pair<Int, Int>> int_coords() const;

  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt operator*(const QuadInt& o) const;
  QuadInt operator-() const { return QuadInt(-A_, -B_, d_); }
  bool operator==(const QuadInt& o) const = default;

  QuadInt conj() const { return QuadInt(A_, -B_, d_); }
  Int norm() const { return (A_ * A_ - d_ * B_ * B_) / 4; }
  Int trace() const { return A_; }
  bool is_zero() const { return A_ == 0 && B_ == 0; }

  // sign of the real value A/2 + (B/2) sqrt(d): -1, 0, +1
  int value_sign() const;
  // compare value^2 with the integer m (assumes value > 0): -1,0,+1
  int value_sq_cmp(const Int& m) const;
  // exact value comparison with another element
  bool value_less(const QuadInt& o) const;

  std::string str() const;

 private:
  Int A_, B_, d_;
};

// Canonical sign: representative of {q,-q} with A>0, or A==0 and B>0.
QuadInt canon_sign(const QuadInt& q);

// Exact square root in O_k when it exists (canonical: positive value).
std::optional<QuadInt> sqrt_in_ring(const QuadInt& beta);

// Fundamental unit (>1) of O_{Q(sqrt d)}; continued-fraction based.
QuadInt fundamental_unit(const Int& d);

// Smallest integral-coordinate unit of Z[sqrt d] (norm -1 when one exists,
// else the norm +1 Pell unit).
QuadInt zsqrt_fundamental_unit(const Int& d);

struct UnitCertificate {
  QuadInt epsilon;  // s + t sqrt(p1), s even, t odd, norm -1
  Int s, t;
  int power_used;  // 1 or 3
};

// Lemma 3.1.5 unit for p1 = 5 (mod 8).
UnitCertificate adjusted_unit(const Int& p1);

// Exact class number of Q(sqrt d), d squarefree > 1, via reduced
// indefinite form cycles; h = h+ (unit norm -1) or h+/2 (norm +1).
Int class_number(const Int& d);
bool class_number_is_one(const Int& d);

// Odd m with |N(alpha)| = p^m and p not dividing alpha, when such m
// exists; i.e. the ideal (alpha) is an odd power of a single prime over p.
std::optional<int> principal_prime_power_check(const QuadInt& alpha, const Int& p);

// Unit u (product of +-1 and fundamental-unit powers) such that q*u is the
// canonical generator of the ideal (q): positive value in
// [sqrt|N(q)|, eps*sqrt|N(q)|). Returns {canonical, u}.
std::pair<QuadInt, QuadInt> canonical_generator(const QuadInt& q, const QuadInt& eps);

}  // namespace resym::quadfield
