#pragma once

#include <optional>

#include "resym/int.hpp"

namespace resym::arith {

// Deterministic for n <= 2^64 (fixed Miller-Rabin base set); fixed
// strong-probable-prime battery above, no RNG anywhere.
bool is_prime(const Int& n);

// Legendre symbol (a/p) for odd prime p: 0 iff p | a, else +-1.
// Computed through the Jacobi symbol, no exponentiation.
int legendre_symbol(const Int& a, const Int& p);

// Canonical square root of a mod odd prime p, in [0, (p-1)/2].
// Empty when a is a non-residue. sqrt_mod(0,p) = 0.
std::optional<Int> sqrt_mod(const Int& a, const Int& p);

// Square root of a mod p^e (p odd prime, p not dividing a), canonical
// representative min(s, p^e - s). Empty when a is a non-residue mod p.
std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& p, unsigned e);

// Place of Q: a finite prime, or infinity.
struct Place {
  bool infinite = false;
  Int prime = 0;
  static Place infinity() { return Place{true, 0}; }
  static Place at(Int p) { return Place{false, std::move(p)}; }
};

// Hilbert symbol (a,b)_v over Q: 1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution in the completion at v.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);
int hilbert_symbol(const Int& a, const Int& b, const Place& v);

}  // namespace resym::arith
