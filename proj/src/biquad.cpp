#include "resym/biquad.hpp"

#include <set>

#include "resym/arith.hpp"

namespace resym::biquad {

namespace {

void set_entry(std::array<std::array<std::array<Int, 4>, 4>, 4>& t, int i, int j,
               std::initializer_list<std::pair<Int, int>> terms) {
  for (auto& [c, k] : terms) {
    t[i][j][k] += c;
    if (i != j) t[j][i][k] += c;
  }
}

}  // namespace

std::shared_ptr<const OrderBasis> OrderBasis::make_k13(const Int& p1, const Int& p3) {
  if (mod_floor(p1, 4) != 1 || mod_floor(p3, 4) != 1)
    throw PreconditionError({"k13 order requires p1 = p3 = 1 (mod 4)"});
  auto b = std::shared_ptr<OrderBasis>(new OrderBasis());
  b->tag_ = FieldTag::k13;
  b->p1_ = p1;
  b->second_ = p3;
  b->alpha_ = QuadInt(Int(0), Int(0), p1);
  Int a = (p1 - 1) / 4, c = (p3 - 1) / 4;
  auto& t = b->tab_;
  set_entry(t, 0, 0, {{1, 0}});
  set_entry(t, 0, 1, {{1, 1}});
  set_entry(t, 0, 2, {{1, 2}});
  set_entry(t, 0, 3, {{1, 3}});
  set_entry(t, 1, 1, {{a, 0}, {1, 1}});
  set_entry(t, 1, 2, {{1, 3}});
  set_entry(t, 1, 3, {{a, 2}, {1, 3}});
  set_entry(t, 2, 2, {{c, 0}, {1, 2}});
  set_entry(t, 2, 3, {{c, 1}, {1, 3}});
  set_entry(t, 3, 3, {{a * c, 0}, {c, 1}, {a, 2}, {1, 3}});
  b->verify_closure();
  return b;
}

std::shared_ptr<const OrderBasis> OrderBasis::make_k13_prime(const Int& p1,
                                                             const QuadInt& alpha) {
  if (alpha.d() != p1) throw PreconditionError({"alpha must live in Q(sqrt p1)"});
  auto ic = alpha.int_coords();
  if (!ic) throw PreconditionError({"alpha must be integral over Z[sqrt p1]"});
  auto [x, y] = *ic;
  if (mod_floor(y, 2) != 0 || mod_floor(x - y, 4) != 1)
    throw PreconditionError({"alpha must be 1 mod (4): y even, x-y = 1 (mod 4)"});
  auto b = std::shared_ptr<OrderBasis>(new OrderBasis());
  b->tag_ = FieldTag::k13_prime;
  b->p1_ = p1;
  b->second_ = 0;
  b->alpha_ = alpha;
  Int a = (p1 - 1) / 4;
  // (alpha - 1)/4 = c + d*w1 with alpha = (x - y) + 2y*w1
  Int c = (x - y - 1) / 4, d = y / 2;
  auto& t = b->tab_;
  set_entry(t, 0, 0, {{1, 0}});
  set_entry(t, 0, 1, {{1, 1}});
  set_entry(t, 0, 2, {{1, 2}});
  set_entry(t, 0, 3, {{1, 3}});
  set_entry(t, 1, 1, {{a, 0}, {1, 1}});
  set_entry(t, 1, 2, {{1, 3}});
  set_entry(t, 1, 3, {{a, 2}, {1, 3}});
  set_entry(t, 2, 2, {{c, 0}, {d, 1}, {1, 2}});
  set_entry(t, 2, 3, {{d * a, 0}, {c + d, 1}, {1, 3}});
  set_entry(t, 3, 3, {{a * c + d * a, 0}, {a * d + c + d, 1}, {a, 2}, {1, 3}});
  b->verify_closure();
  return b;
}

void OrderBasis::verify_closure() const {
  // identity, commutativity, associativity on basis triples
  auto mulv = [&](const std::array<Int, 4>& u, const std::array<Int, 4>& v) {
    std::array<Int, 4> r{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (u[i] == 0 || v[j] == 0) continue;
        for (int k = 0; k < 4; ++k) r[k] += u[i] * v[j] * tab_[i][j][k];
      }
    return r;
  };
  std::array<Int, 4> e[4];
  for (int i = 0; i < 4; ++i) {
    e[i] = {0, 0, 0, 0};
    e[i][i] = 1;
  }
  for (int i = 0; i < 4; ++i) {
    if (mulv(e[0], e[i]) != e[i]) throw InternalError("order table: 1 is not an identity");
    for (int j = 0; j < 4; ++j) {
      if (tab_[i][j] != tab_[j][i]) throw InternalError("order table: not commutative");
      for (int k = 0; k < 4; ++k) {
        if (mulv(tab_[i][j], e[k]) != mulv(e[i], tab_[j][k]))
          throw InternalError("order table: associativity failed at (" + std::to_string(i) +
                              "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
}

OrderElem OrderElem::mul(const OrderElem& o) const {
  if (basis != o.basis) throw PreconditionError({"operands from different orders"});
  std::array<Int, 4> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (c[i] == 0 || o.c[j] == 0) continue;
      const auto& t = basis->table(i, j);
      for (int k = 0; k < 4; ++k) r[k] += c[i] * o.c[j] * t[k];
    }
  return OrderElem(basis, std::move(r));
}

OrderElem OrderElem::mod4() const {
  OrderElem r(basis, c);
  for (auto& x : r.c) x = mod_floor(x, 4);
  return r;
}

OrderElem embed_theta(const BasisPtr& b, const QuadInt& X, const QuadInt& partner) {
  // theta = X + partner * sqrt(second) with sqrt(second) = 2*e2 - 1:
  // theta = (X - partner) + 2*partner*e2, and u + v*w1 coordinates on O_{k1}.
  const Int &A = X.A(), &B = X.B(), &C = partner.A(), &D = partner.B();
  std::array<Int, 4> coords = {(A - B) / 2 - (C - D) / 2, B - D, C - D, 2 * D};
  return OrderElem(b, std::move(coords));
}

std::optional<int> unit_order_mod4(const OrderElem& theta) {
  OrderElem base = theta.mod4();
  OrderElem one = OrderElem::one(theta.basis);
  OrderElem acc = base;
  for (int n = 1; n <= 256; ++n) {
    if (acc == one) return n;
    acc = acc.mul(base).mod4();
  }
  return std::nullopt;
}

std::optional<OrderElem> sqrt_mod4(const OrderElem& theta) {
  auto t = unit_order_mod4(theta);
  if (!t) throw PreconditionError({"sqrt_mod4: not a unit mod 4"});
  if (*t % 2 == 0) return std::nullopt;
  OrderElem base = theta.mod4();
  OrderElem acc = OrderElem::one(theta.basis);
  int e = (*t + 1) / 2;
  for (int i = 0; i < e; ++i) acc = acc.mul(base).mod4();
  return acc;
}

std::optional<OrderElem> exhaustive_sqrt_mod4(const OrderElem& theta) {
  OrderElem target = theta.mod4();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          OrderElem lam(theta.basis, {a, b, c, d});
          if (lam.mul(lam).mod4() == target) return lam;
        }
  return std::nullopt;
}

U2Report verify_u2_structure(const BasisPtr& b) {
  U2Report rep;
  auto pack = [](const std::array<Int, 4>& c) {
    long k = 0;
    for (int i = 3; i >= 0; --i) k = k * 4 + mod_floor(c[i], 4).get_si();
    return k;
  };
  auto unpack = [&](long k) {
    std::array<Int, 4> c;
    for (int i = 0; i < 4; ++i) {
      c[i] = k % 4;
      k /= 4;
    }
    return OrderElem(b, std::move(c));
  };
  // multiplication table over the 256 residues, then unit detection
  std::array<long, 256 * 256>* mul = new std::array<long, 256 * 256>();
  for (long i = 0; i < 256; ++i) {
    OrderElem u = unpack(i);
    for (long j = i; j < 256; ++j) {
      long p = pack(u.mul(unpack(j)).mod4().c);
      (*mul)[i * 256 + j] = p;
      (*mul)[j * 256 + i] = p;
    }
  }
  std::array<bool, 256> is_unit{};
  long one = pack({1, 0, 0, 0});
  for (long i = 0; i < 256; ++i)
    for (long j = 0; j < 256; ++j)
      if ((*mul)[i * 256 + j] == one) {
        is_unit[i] = true;
        break;
      }
  auto order_of = [&](long u) -> int {
    long acc = u;
    for (int n = 1; n <= 256; ++n) {
      if (acc == one) return n;
      acc = (*mul)[acc * 256 + u];
    }
    return -1;
  };
  long units = 0, sylow = 0;
  bool elementary = true;
  std::set<long> sylow_set;
  for (long i = 0; i < 256; ++i) {
    if (!is_unit[i]) continue;
    ++units;
    int o = order_of(i);
    if (o > 0 && (o & (o - 1)) == 0) {
      ++sylow;
      sylow_set.insert(i);
      if (o > 2) elementary = false;
    }
  }
  rep.unit_count = units;
  rep.sylow_size = sylow;
  rep.elementary = elementary;
  // generators: -1, sqrt m = 2w1-1, sqrt-second = 2e2-1, halfgen = 1+2e3
  std::array<long, 4> gens = {pack({-1, 0, 0, 0}), pack({-1, 2, 0, 0}), pack({-1, 0, 2, 0}),
                              pack({1, 0, 0, 2})};
  for (int gi = 0; gi < 4; ++gi) {
    int o = order_of(gens[gi]);
    if (o != 2) {
      rep.failure = "generator " + std::to_string(gi) + " has order " + std::to_string(o);
      delete mul;
      return rep;
    }
  }
  std::set<long> span = {one};
  for (long g : gens) {
    std::set<long> next = span;
    for (long x : span) next.insert((*mul)[x * 256 + g]);
    span = std::move(next);
  }
  rep.generators_span = (span.size() == 16) && (span == sylow_set);
  delete mul;
  if (units % 16 != 0 || (units / 16) % 2 == 0) {
    rep.failure = "unit count " + std::to_string(units) + " is not 16 * odd";
    return rep;
  }
  if (sylow != 16) {
    rep.failure = "2-Sylow size " + std::to_string(sylow);
    return rep;
  }
  if (!elementary) {
    rep.failure = "2-Sylow not elementary abelian";
    return rep;
  }
  if (!rep.generators_span) {
    rep.failure = "listed generators do not span the 2-Sylow subgroup";
    return rep;
  }
  rep.ok = true;
  return rep;
}

RadicalCoords radical_coords(const QuadInt& X, const QuadInt& partner) {
  RadicalCoords rc;
  rc.num = {X.A(), X.B(), partner.A(), partner.B()};
  rc.den = 2;
  bool all_even = true;
  for (auto& n : rc.num)
    if (mpz_odd_p(n.get_mpz_t())) all_even = false;
  if (all_even) {
    for (auto& n : rc.num) n /= 2;
    rc.den = 1;
  }
  return rc;
}

}  // namespace resym::biquad
