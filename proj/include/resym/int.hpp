#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace resym {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_decimal(const std::string& s) {
  Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  return v;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Exact square root; returns false when n is not a perfect square.
inline bool perfect_sqrt(const Int& n, Int& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int invmod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("not invertible mod m");
  return r;
}

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("Int does not fit in long");
  return v.get_si();
}

// -------- error taxonomy shared across modules --------

// Input violates an operation precondition. `clauses` is machine readable,
// one short string per failed clause.
struct PreconditionError : std::runtime_error {
  std::vector<std::string> clauses;
  explicit PreconditionError(std::vector<std::string> cl)
      : std::runtime_error(join(cl)), clauses(std::move(cl)) {}
  static std::string join(const std::vector<std::string>& cl) {
    std::string s = "precondition failed:";
    for (const auto& c : cl) s += " [" + c + "]";
    return s;
  }
};

// A bounded search ran out of budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An invariant the theory guarantees failed to hold; carries a dump.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace resym
