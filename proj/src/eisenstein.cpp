#include "recip/eisenstein.hpp"

namespace recip {

namespace {

unsigned long mod_ui(const Int& v, unsigned long m) { return mpz_fdiv_ui(v.get_mpz_t(), m); }

// Nearest integer to x/n (n > 0 exact divisor context), ties toward -infinity:
// ceil((2x - n) / (2n)).
Int round_nearest(const Int& x, const Int& n) {
  Int num = 2 * x - n;
  Int den = 2 * n;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int pos_mod(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Eisenstein eis_add(const Eisenstein& x, const Eisenstein& y) { return {x.a + y.a, x.b + y.b}; }
Eisenstein eis_sub(const Eisenstein& x, const Eisenstein& y) { return {x.a - y.a, x.b - y.b}; }
Eisenstein eis_neg(const Eisenstein& x) { return {-x.a, -x.b}; }

Eisenstein eis_mul(const Eisenstein& x, const Eisenstein& y) {
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

Eisenstein eis_conj(const Eisenstein& x) { return {x.a - x.b, -x.b}; }

Int eis_norm(const Eisenstein& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

const std::array<Eisenstein, 6>& eis_units() {
  static const std::array<Eisenstein, 6> units = {
      Eisenstein{1, 0},  Eisenstein{-1, 0},  // 1, -1
      Eisenstein{0, 1},  Eisenstein{0, -1},  // w, -w
      Eisenstein{-1, -1}, Eisenstein{1, 1},  // w^2, -w^2
  };
  return units;
}

bool eis_is_unit(const Eisenstein& x) { return eis_norm(x) == 1; }
bool eis_is_zero(const Eisenstein& x) { return x.a == 0 && x.b == 0; }

EisDivMod eis_divmod(const Eisenstein& x, const Eisenstein& y) {
  if (eis_is_zero(y)) throw DomainError("division-by-zero", "Eisenstein division by zero");
  Int n = eis_norm(y);
  Eisenstein g = eis_mul(x, eis_conj(y));  // x/y = g / n exactly
  Eisenstein q{round_nearest(g.a, n), round_nearest(g.b, n)};
  Eisenstein r = eis_sub(x, eis_mul(q, y));
  return {std::move(q), std::move(r)};
}

bool eis_divides(const Eisenstein& d, const Eisenstein& x) {
  if (eis_is_zero(d)) throw DomainError("division-by-zero", "divisibility by zero");
  Int n = eis_norm(d);
  Eisenstein g = eis_mul(x, eis_conj(d));
  return g.a % n == 0 && g.b % n == 0;
}

Eisenstein eis_gcd(Eisenstein x, Eisenstein y) {
  while (!eis_is_zero(y)) {
    EisDivMod dm = eis_divmod(x, y);
    x = std::move(y);
    y = std::move(dm.r);
  }
  if (eis_is_zero(x)) return x;
  if (eis_is_unit(x)) return {1, 0};
  if (mod_ui(eis_norm(x), 3) != 0) return eis_primary_associate(x).second;
  // Norm divisible by 3: no primary associate exists; take the unique associate
  // in the 60-degree sector a > b >= 0.
  for (const Eisenstein& u : eis_units()) {
    Eisenstein c = eis_mul(u, x);
    if (c.a > c.b && c.b >= 0) return c;
  }
  throw std::logic_error("no associate in the canonical sector");
}

bool eis_is_primary(const Eisenstein& x) {
  return mod_ui(x.a, 3) == 2 && mod_ui(x.b, 3) == 0;
}

std::pair<Eisenstein, Eisenstein> eis_primary_associate(const Eisenstein& x) {
  if (mod_ui(eis_norm(x), 3) == 0)
    throw DomainError("ramified-norm", "no primary associate: norm divisible by 3");
  std::optional<std::pair<Eisenstein, Eisenstein>> found;
  for (const Eisenstein& u : eis_units()) {
    Eisenstein c = eis_mul(u, x);
    if (eis_is_primary(c)) {
      if (found) throw std::logic_error("two primary associates");
      found = {u, c};
    }
  }
  if (!found) throw std::logic_error("no primary associate among the six units");
  return *found;
}

EisFactor eis_classify_prime(const Int& p) {
  if (!is_prime(p)) throw DomainError("not-prime", "classification requires a rational prime");
  unsigned long r = mod_ui(p, 3);
  if (p == 3) return EisFactor{EisClass::Ramified, Eisenstein{1, -1}, std::nullopt};
  if (r == 2) return EisFactor{EisClass::Inert, Eisenstein{p, 0}, std::nullopt};
  // p == 1 (mod 3): p = pi * conj(pi). Find pi via gcd(p, s - (1+2w)) where
  // s^2 == -3 (mod p): s - (1+2w) has norm divisible by p but not by p^2.
  auto s = sqrt_mod(Int(-3), p);
  if (!s) throw std::logic_error("-3 must be a square mod a prime == 1 (mod 3)");
  Eisenstein g = eis_gcd(Eisenstein{p, 0}, Eisenstein{*s - 1, -2});
  Eisenstein pi = eis_primary_associate(g).second;
  return EisFactor{EisClass::Split, pi, eis_conj(pi)};
}

bool eis_is_prime_elem(const Eisenstein& x) {
  if (eis_is_zero(x) || eis_is_unit(x)) return false;
  Int n = eis_norm(x);
  if (is_prime(n)) return true;  // split and ramified primes have prime norm
  // Inert: x = unit * q with q a rational prime == 2 (mod 3); then N(x) = q^2.
  Int q;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
  if (mod_ui(q, 3) != 2 || !is_prime(q)) return false;
  return x.a % q == 0 && x.b % q == 0;
}

Eisenstein eis_residue_reduce(const Eisenstein& x, const Eisenstein& pi) {
  if (!eis_is_prime_elem(pi))
    throw DomainError("not-prime-element", "residues are defined modulo a prime element");
  Int n = eis_norm(pi);
  if (n == 3) return {pos_mod(x.a + x.b, Int(3)), 0};  // w == 1 (mod 1-w)
  if (is_prime(n)) {
    // split: w == -a/b (mod p) in the residue field of size p
    Int binv;
    if (mpz_invert(binv.get_mpz_t(), pi.b.get_mpz_t(), n.get_mpz_t()) == 0)
      throw std::logic_error("split prime has invertible w-coordinate");
    Int wimg = pos_mod(-pi.a * binv, n);
    return {pos_mod(x.a + x.b * wimg, n), 0};
  }
  Int q;
  mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
  return {pos_mod(x.a, q), pos_mod(x.b, q)};
}

Int eis_residue_field_order(const Eisenstein& pi) {
  if (!eis_is_prime_elem(pi))
    throw DomainError("not-prime-element", "residue field requires a prime element");
  return eis_norm(pi);
}

}  // namespace recip
