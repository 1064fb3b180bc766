#include "resym/arith.hpp"

#include <array>

namespace resym::arith {

namespace {

bool miller_rabin_witness(const Int& n, const Int& a) {
  // returns true if a proves n composite
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  d >>= r;
  Int x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Bases proving primality for all n < 3.3e24, which covers 2^64.
constexpr std::array<unsigned, 12> kDeterministicBases = {2,  3,  5,  7,  11, 13,
                                                          17, 19, 23, 29, 31, 37};
// Fixed extra battery for larger inputs (still fully deterministic).
constexpr std::array<unsigned, 12> kExtraBases = {41, 43, 47, 53, 59, 61,
                                                  67, 71, 73, 79, 83, 89};

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  for (unsigned a : kDeterministicBases)
    if (miller_rabin_witness(n, Int(a))) return false;
  Int two64 = Int(1) << 64;
  if (n <= two64) return true;
  for (unsigned a : kExtraBases)
    if (miller_rabin_witness(n, Int(a))) return false;
  return true;
}

int legendre_symbol(const Int& a, const Int& p) {
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) return 0;
  return mpz_jacobi(a.get_mpz_t(), p.get_mpz_t());
}

std::optional<Int> sqrt_mod(const Int& a, const Int& p) {
  Int r = mod_floor(a, p);
  if (r == 0) return Int(0);
  if (legendre_symbol(r, p) != 1) return std::nullopt;
  Int s;
  if (mod_floor(p, 4) == 3) {
    s = powmod(r, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long e = mpz_scan1(q.get_mpz_t(), 0);
    q >>= e;
    Int z = 2;
    while (legendre_symbol(z, p) != -1) ++z;
    Int m(e), c = powmod(z, q, p);
    Int t = powmod(r, q, p);
    s = powmod(r, (q + 1) / 2, p);
    while (t != 1) {
      Int i = 0, t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
      }
      Int b = c;
      for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
      s = s * b % p;
      c = b * b % p;
      t = t * c % p;
      m = i;
    }
  }
  if (s > p - s) s = p - s;
  return s;
}

std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e) {
  auto s0 = sqrt_mod(a, p);
  if (!s0) return std::nullopt;
  if (*s0 == 0) return e == 1 ? s0 : std::nullopt;
  Int s = *s0, pk = p;
  for (unsigned k = 1; k < e; ++k) {
    // Hensel: s_{k+1} = s_k - (s_k^2 - a) / (2 s_k) mod p^{k+1}
    Int pk1 = pk * p;
    Int num = mod_floor(s * s - a, pk1);
    Int corr = num / pk % p;  // (s^2-a)/p^k mod p
    Int inv = invmod(mod_floor(2 * s, p), p);
    s = mod_floor(s - corr * inv % p * pk, pk1);
    pk = pk1;
  }
  if (s > pk - s) s = pk - s;
  return s;
}

namespace {

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for odd u
int eps2(const Int& u) { return static_cast<int>(mpz_tstbit(Int((u - 1) / 2).get_mpz_t(), 0)); }
int omega2(const Int& u) {
  Int v = mod_floor(u, 8);
  return (v == 3 || v == 5) ? 1 : 0;
}

int hilbert_int(Int a, Int b, const Place& v) {
  if (a == 0 || b == 0) throw PreconditionError({"hilbert: nonzero arguments required"});
  if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = v.prime;
  unsigned long al = 0, be = 0;
  while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
    a /= p;
    ++al;
  }
  while (mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) {
    b /= p;
    ++be;
  }
  if (p == 2) {
    int s = eps2(a) * eps2(b) + static_cast<int>(al) * omega2(b) +
            static_cast<int>(be) * omega2(a);
    return (s % 2) ? -1 : 1;
  }
  int sign = 1;
  if ((al % 2) && (be % 2) && mod_floor(p, 4) == 3) sign = -sign;
  if (be % 2) sign *= legendre_symbol(a, p);
  if (al % 2) sign *= legendre_symbol(b, p);
  return sign;
}

}  // namespace

int hilbert_symbol(const Int& a, const Int& b, const Place& v) { return hilbert_int(a, b, v); }

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  // (a,b) is invariant under multiplying either argument by a square;
  // num*den moves a rational into Z within its square class.
  Int ai = a.get_num() * a.get_den();
  Int bi = b.get_num() * b.get_den();
  return hilbert_int(ai, bi, v);
}

}  // namespace resym::arith
