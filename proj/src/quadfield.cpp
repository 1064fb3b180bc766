#include "resym/quadfield.hpp"

#include <set>

#include "resym/arith.hpp"

namespace resym::quadfield {

QuadInt::QuadInt(Int A, Int B, Int d) : A_(std::move(A)), B_(std::move(B)), d_(std::move(d)) {
  if (mod_floor(A_ - B_, 2) != 0)
    throw InternalError("QuadInt: A and B must have equal parity");
  if (mod_floor(d_, 4) != 1 && mpz_odd_p(A_.get_mpz_t()))
    throw InternalError("QuadInt: half coordinates require d = 1 mod 4");
}

std::optional<std::pair<Int, Int>> QuadInt::int_coords() const {
  if (mpz_odd_p(A_.get_mpz_t())) return std::nullopt;
  return std::make_pair(A_ / 2, B_ / 2);
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
  if (d_ != o.d_) throw PreconditionError({"mixed-d operands"});
  return QuadInt(A_ + o.A_, B_ + o.B_, d_);
}
QuadInt QuadInt::operator-(const QuadInt& o) const {
  if (d_ != o.d_) throw PreconditionError({"mixed-d operands"});
  return QuadInt(A_ - o.A_, B_ - o.B_, d_);
}
QuadInt QuadInt::operator*(const QuadInt& o) const {
  if (d_ != o.d_) throw PreconditionError({"mixed-d operands"});
  return QuadInt((A_ * o.A_ + d_ * B_ * o.B_) / 2, (A_ * o.B_ + B_ * o.A_) / 2, d_);
}

int QuadInt::value_sign() const {
  if (A_ == 0 && B_ == 0) return 0;
  int sa = sgn(A_), sb = sgn(B_);
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  // opposite signs: compare A^2 vs d B^2
  int c = cmp(A_ * A_, d_ * B_ * B_);
  if (c == 0) throw InternalError("QuadInt: zero value with nonzero coords (d square?)");
  return c > 0 ? sa : sb;
}

int QuadInt::value_sq_cmp(const Int& m) const {
  // value^2 = (A^2 + d B^2 + 2AB sqrt d)/4 ; compare with m
  Int lhs = A_ * A_ + d_ * B_ * B_ - 4 * m;
  Int ab2 = 2 * A_ * B_;
  // compare lhs with -ab2*sqrt(d)
  if (ab2 >= 0) {
    if (lhs > 0) return 1;
    if (lhs == 0) return ab2 > 0 ? 1 : 0;
    Int l2 = lhs * lhs, r2 = ab2 * ab2 * d_;
    return l2 > r2 ? -1 : (l2 < r2 ? 1 : 0);
  }
  if (lhs <= 0) return -1;
  Int l2 = lhs * lhs, r2 = ab2 * ab2 * d_;
  return l2 > r2 ? 1 : (l2 < r2 ? -1 : 0);
}

bool QuadInt::value_less(const QuadInt& o) const {
  Int dA = A_ - o.A_, dB = B_ - o.B_;
  if (dA == 0 && dB == 0) return false;
  return QuadInt(dA, dB, d_).value_sign() < 0;
}

std::string QuadInt::str() const {
  if (mpz_even_p(A_.get_mpz_t()))
    return to_decimal(A_ / 2) + (B_ >= 0 ? "+" : "") + to_decimal(B_ / 2) + "*sqrt(" +
           to_decimal(d_) + ")";
  return "(" + to_decimal(A_) + (B_ >= 0 ? "+" : "") + to_decimal(B_) + "*sqrt(" +
         to_decimal(d_) + "))/2";
}

QuadInt canon_sign(const QuadInt& q) {
  if (q.A() < 0 || (q.A() == 0 && q.B() < 0)) return -q;
  return q;
}

std::optional<QuadInt> sqrt_in_ring(const QuadInt& beta) {
  const Int& d = beta.d();
  if (beta.is_zero()) return QuadInt(0, 0, d);
  Int n = beta.norm();
  if (n < 0) return std::nullopt;
  Int s;
  if (!perfect_sqrt(n, s)) return std::nullopt;
  // xi = (a + b sqrt d)/2 with a^2 + d b^2 = 2A, a b = B.
  // a^2 and d b^2 are the roots of T^2 - 2A T + d B^2 = 0, i.e. A +- 2s.
  for (int sign : {1, -1}) {
    Int a2 = beta.A() + sign * 2 * s;
    Int a;
    if (a2 < 0 || !perfect_sqrt(a2, a)) continue;
    if (a == 0) {
      // beta = (d b^2)/4 * ... pure sqrt-d multiple: b^2 d = 2A, a b = B = 0
      if (beta.B() != 0) continue;
      Int b2d = 2 * beta.A();
      if (mod_floor(b2d, d) != 0) continue;
      Int b;
      if (!perfect_sqrt(b2d / d, b)) continue;
      if (mpz_odd_p(b.get_mpz_t())) continue;
      QuadInt cand(0, b, d);
      if (cand * cand == beta) {
        cand = canon_sign(cand);
        if (cand.value_sign() < 0) cand = -cand;
        return cand;
      }
      continue;
    }
    if (mod_floor(beta.B(), a) != 0) continue;
    Int b = beta.B() / a;
    if (mod_floor(a - b, 2) != 0) continue;
    if (mod_floor(d, 4) != 1 && mpz_odd_p(a.get_mpz_t())) continue;
    QuadInt cand(a, b, d);
    if (cand * cand == beta) {
      if (cand.value_sign() < 0) cand = -cand;
      return cand;
    }
  }
  return std::nullopt;
}

QuadInt zsqrt_fundamental_unit(const Int& d) {
  Int sD = isqrt(d);
  if (sD * sD == d) throw PreconditionError({"d must be nonsquare"});
  Int P = 0, Q = 1;
  Int A1 = 1, A2 = 0, B1 = 0, B2 = 1;
  for (long i = 0; i < 1000000; ++i) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), Int(P + sD).get_mpz_t(), Q.get_mpz_t());
    Int A = a * A1 + A2, B = a * B1 + B2;
    P = a * Q - P;
    Q = (d - P * P) / Q;
    A2 = A1;
    A1 = A;
    B2 = B1;
    B1 = B;
    if (Q == 1 || Q == -1) {
      Int n = A1 * A1 - d * B1 * B1;
      if (n == 1 || n == -1) return QuadInt::from_int_coords(A1, B1, d);
    }
  }
  throw InternalError("zsqrt_fundamental_unit: no period found");
}

QuadInt fundamental_unit(const Int& d) {
  if (d <= 1) throw PreconditionError({"d must be > 1"});
  Int sD = isqrt(d);
  if (sD * sD == d) throw PreconditionError({"d must be squarefree (got a square)"});
  QuadInt zu = zsqrt_fundamental_unit(d);
  if (mod_floor(d, 4) != 1) return zu;
  // Check for a cube root (a + b sqrt d)/2 of the Z[sqrt d] unit:
  // a^3 - 3 n a = 2u with n = its norm.
  Int u = zu.A() / 2;
  Int n = zu.norm();
  Int tu = 2 * u;
  // integer cube-root neighbourhood of 2u
  Int a0;
  mpz_root(a0.get_mpz_t(), tu.get_mpz_t(), 3);
  for (Int a = a0 - 2; a <= a0 + 3; ++a) {
    if (a <= 0) continue;
    for (int n0 : {-1, 1}) {
      if (Int(n0 * n0 * n0) != n) continue;
      if (a * a * a - 3 * n0 * a != tu) continue;
      Int bb = a * a - 4 * n0;
      if (mod_floor(bb, d) != 0) continue;
      Int b;
      if (!perfect_sqrt(bb / d, b)) continue;
      if (mod_floor(a - b, 2) != 0) continue;
      QuadInt cand(a, b, d);
      if (cand.norm() == n0) return cand;
    }
  }
  return zu;
}

UnitCertificate adjusted_unit(const Int& p1) {
  if (mod_floor(p1, 8) != 5 || !arith::is_prime(p1))
    throw PreconditionError({"p1 = 5 (mod 8) prime required"});
  QuadInt eps1 = fundamental_unit(p1);
  QuadInt eps = eps1;
  int power = 1;
  if (eps.half()) {
    eps = eps1 * eps1 * eps1;
    power = 3;
  }
  if (eps.half()) throw InternalError("adjusted_unit: cube still half-integral");
  Int s = eps.A() / 2, t = eps.B() / 2;
  if (mod_floor(s, 2) != 0 || mod_floor(t, 2) != 1 || eps.norm() != -1)
    throw InternalError("adjusted_unit: Lemma-form unit not found for p1=" + to_decimal(p1));
  return UnitCertificate{eps, s, t, power};
}

namespace {

bool form_reduced(const Int& a, const Int& b, const Int& D, const Int& sD) {
  // reduced indefinite form: |sqrt(D) - 2|a|| < b < sqrt(D)
  if (b <= 0 || b > sD) return false;
  if (b == sD && sD * sD == D) return false;
  Int t = 2 * abs(a);
  Int lhs = D + t * t - b * b;  // compare (sqrtD - t)^2 < b^2  <=>  lhs < 2 t sqrtD
  if (lhs < 0) return true;
  return lhs * lhs < 4 * t * t * D;
}

}  // namespace

Int class_number(const Int& d) {
  if (d <= 1) throw PreconditionError({"d must be > 1"});
  Int D = (mod_floor(d, 4) == 1) ? d : Int(4 * d);
  Int sD = isqrt(D);
  struct Form {
    Int a, b, c;
    bool operator==(const Form&) const = default;
  };
  std::vector<Form> forms;
  for (Int b = 1; b <= sD; ++b) {
    if (mod_floor(b * b - D, 2) != 0) continue;
    Int num = D - b * b;  // = -4ac > 0
    for (Int a = 1; 4 * a <= num; ++a) {
      if (mod_floor(num, 4 * a) != 0) continue;
      Int c = -(num / (4 * a));
      if (form_reduced(a, b, D, sD)) forms.push_back({a, b, c});
      if (form_reduced(-a, b, D, sD)) forms.push_back({-a, b, -c});
    }
  }
  auto rho = [&](const Form& f) -> Form {
    Int t = 2 * abs(f.c);
    Int r = mod_floor(-f.b, t);
    for (int guard = 0; guard < 1000000; ++guard) {
      if (mod_floor(r * r - D, 4 * f.c) == 0 && form_reduced(f.c, r, D, sD))
        return Form{f.c, r, (r * r - D) / (4 * f.c)};
      r += t;
      if (r > sD + t) break;
    }
    throw InternalError("class_number: rho step failed");
  };
  auto key = [](const Form& f) { return f.a.get_str() + "|" + f.b.get_str(); };
  std::set<std::string> seen;
  Int cycles = 0;
  for (const auto& f : forms) {
    if (seen.count(key(f))) continue;
    ++cycles;
    Form g = f;
    for (int guard = 0; guard < 100000; ++guard) {
      seen.insert(key(g));
      g = rho(g);
      if (g == f) break;
    }
  }
  bool neg_unit = fundamental_unit(d).norm() == -1;
  return neg_unit ? cycles : cycles / 2;
}

bool class_number_is_one(const Int& d) { return class_number(d) == 1; }

std::optional<int> principal_prime_power_check(const QuadInt& alpha, const Int& p) {
  if (alpha.is_zero()) throw PreconditionError({"alpha must be nonzero"});
  Int n = abs(alpha.norm());
  int m = 0;
  while (n > 1) {
    if (mod_floor(n, p) != 0) return std::nullopt;
    n /= p;
    ++m;
  }
  if (m == 0 || m % 2 == 0) return std::nullopt;
  // p must not divide alpha in O_k: (A + B sqrt d)/2 divisible by odd p
  // iff p | A and p | B.
  if (mod_floor(alpha.A(), p) == 0 && mod_floor(alpha.B(), p) == 0) return std::nullopt;
  return m;
}

std::pair<QuadInt, QuadInt> canonical_generator(const QuadInt& q, const QuadInt& eps) {
  if (q.is_zero()) throw PreconditionError({"zero has no canonical generator"});
  const Int& d = q.d();
  Int n = abs(q.norm());
  QuadInt eps_inv = eps.norm() == -1 ? -(eps.conj()) : eps.conj();
  QuadInt z = q, m = QuadInt::integer(1, d);
  if (z.value_sign() < 0) {
    z = -z;
    m = -m;
  }
  for (int guard = 0; guard < 200000; ++guard) {
    if (z.value_sq_cmp(n) < 0) {
      z = z * eps;
      m = m * eps;
      if (z.value_sign() < 0) {
        z = -z;
        m = -m;
      }
      continue;
    }
    QuadInt z2 = z * eps_inv;
    bool flip = z2.value_sign() < 0;
    QuadInt zp = flip ? -z2 : z2;
    if (zp.value_sq_cmp(n) >= 0) {
      z = zp;
      m = flip ? -(m * eps_inv) : m * eps_inv;
      continue;
    }
    return {z, m};
  }
  throw InternalError("canonical_generator: did not converge");
}

}  // namespace resym::quadfield
