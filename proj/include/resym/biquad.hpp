#pragma once

#include <array>
#include <memory>
#include <optional>

#include "resym/quadfield.hpp"

namespace resym::biquad {

using quadfield::QuadInt;

// Which biquadratic order: k13 = Q(sqrt p1, sqrt p3) with basis
// {1, w1, w3, w1*w3}, or k13' = Q(sqrt p1, sqrt alpha) with basis
// {1, w1, wa, w1*wa}; w1 = (1+sqrt p1)/2, w3 = (1+sqrt p3)/2,
// wa = (1+sqrt alpha)/2 (integral because alpha = 1 mod 4).
enum class FieldTag { k13, k13_prime };

// Rank-4 order over Z given by a closed multiplication table.
class OrderBasis {
 public:
  static std::shared_ptr<const OrderBasis> make_k13(const Int& p1, const Int& p3);
  static std::shared_ptr<const OrderBasis> make_k13_prime(const Int& p1, const QuadInt& alpha);

  FieldTag tag() const { return tag_; }
  const Int& p1() const { return p1_; }
  const Int& second() const { return second_; }  // p3, or 0 for k13'
  const QuadInt& alpha() const { return alpha_; }

  // product of basis elements e_i * e_j as coordinates
  const std::array<Int, 4>& table(int i, int j) const { return tab_[i][j]; }

  // checked at construction; rechecks the ring axioms on the table
  void verify_closure() const;

 private:
  OrderBasis() : alpha_(Int(0), Int(0), Int(5)) {}
  FieldTag tag_{};
  Int p1_, second_;
  QuadInt alpha_;
  std::array<std::array<std::array<Int, 4>, 4>, 4> tab_{};
};

using BasisPtr = std::shared_ptr<const OrderBasis>;

// Element of an order, integral coordinates over its basis.
struct OrderElem {
  BasisPtr basis;
  std::array<Int, 4> c{};

  OrderElem() = default;
  OrderElem(BasisPtr b, std::array<Int, 4> coords) : basis(std::move(b)), c(std::move(coords)) {}
  static OrderElem one(const BasisPtr& b) { return OrderElem(b, {1, 0, 0, 0}); }

  OrderElem mul(const OrderElem& o) const;
  OrderElem mod4() const;
  bool operator==(const OrderElem& o) const { return c == o.c; }
};

// theta = X + Y*sqrt(p3) as an element of the k13 order (X,Y in O_{k1});
// for k13' pass Z in place of Y: theta' = X + Z*sqrt(alpha).
OrderElem embed_theta(const BasisPtr& b, const QuadInt& X, const QuadInt& partner);

// Multiplicative order of theta in (O/(4))^x; nullopt when theta is not a
// unit mod 4.
std::optional<int> unit_order_mod4(const OrderElem& theta);

// lambda with lambda^2 = theta (mod 4), when the order of theta mod 4 is
// odd (lambda = theta^{(t+1)/2}); nullopt otherwise.
std::optional<OrderElem> sqrt_mod4(const OrderElem& theta);

// Exhaustive-search oracle over the 256-element residue ring (test use).
std::optional<OrderElem> exhaustive_sqrt_mod4(const OrderElem& theta);

struct U2Report {
  bool ok = false;
  long unit_count = 0;       // |(O/4)^x| = 16 m, m odd
  long sylow_size = 0;       // must be 16
  bool elementary = true;    // every 2-power-order element has order <= 2
  bool generators_span = false;
  std::string failure;       // offending relation when !ok
};

// Lemma 3.1.4 check: the 2-Sylow subgroup of (O/(4))^x is elementary
// abelian of order 16, generated by -1, sqrt(m), sqrt(n-or-alpha) and
// (3 + sqrt m + sqrt n + sqrt mn)/2.
U2Report verify_u2_structure(const BasisPtr& b);

// Quarter-coordinate view over {1, sqrt m, sqrt n, sqrt mn} for
// serialization: num[4] with denominator den in {1,2,4}.
struct RadicalCoords {
  std::array<Int, 4> num;
  int den = 1;
};
RadicalCoords radical_coords(const QuadInt& X, const QuadInt& partner);

}  // namespace resym::biquad
