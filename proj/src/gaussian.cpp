#include "recip/gaussian.hpp"

namespace recip {

namespace {

unsigned long mod_ui(const Int& v, unsigned long m) { return mpz_fdiv_ui(v.get_mpz_t(), m); }

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

GaussianInt gauss_add(const GaussianInt& x, const GaussianInt& y) {
  return {x.a + y.a, x.b + y.b};
}
GaussianInt gauss_sub(const GaussianInt& x, const GaussianInt& y) {
  return {x.a - y.a, x.b - y.b};
}
GaussianInt gauss_neg(const GaussianInt& x) { return {-x.a, -x.b}; }

GaussianInt gauss_mul(const GaussianInt& x, const GaussianInt& y) {
  return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

GaussianInt gauss_conj(const GaussianInt& x) { return {x.a, -x.b}; }

Int gauss_norm(const GaussianInt& x) { return x.a * x.a + x.b * x.b; }

const std::array<GaussianInt, 4>& gauss_units() {
  static const std::array<GaussianInt, 4> units = {
      GaussianInt{1, 0}, GaussianInt{-1, 0}, GaussianInt{0, 1}, GaussianInt{0, -1}};
  return units;
}

bool gauss_is_unit(const GaussianInt& x) { return gauss_norm(x) == 1; }
bool gauss_is_zero(const GaussianInt& x) { return x.a == 0 && x.b == 0; }

GaussDivMod gauss_divmod(const GaussianInt& x, const GaussianInt& y) {
  if (gauss_is_zero(y)) throw DomainError("division-by-zero", "Gaussian division by zero");
  Int n = gauss_norm(y);
  GaussianInt g = gauss_mul(x, gauss_conj(y));
  GaussianInt q{round_nearest(g.a, n), round_nearest(g.b, n)};
  GaussianInt r = gauss_sub(x, gauss_mul(q, y));
  return {std::move(q), std::move(r)};
}

bool gauss_divides(const GaussianInt& d, const GaussianInt& x) {
  if (gauss_is_zero(d)) throw DomainError("division-by-zero", "divisibility by zero");
  Int n = gauss_norm(d);
  GaussianInt g = gauss_mul(x, gauss_conj(d));
  return g.a % n == 0 && g.b % n == 0;
}

GaussianInt gauss_gcd(GaussianInt x, GaussianInt y) {
  while (!gauss_is_zero(y)) {
    GaussDivMod dm = gauss_divmod(x, y);
    x = std::move(y);
    y = std::move(dm.r);
  }
  if (gauss_is_zero(x)) return x;
  if (gauss_is_unit(x)) return {1, 0};
  if (mod_ui(gauss_norm(x), 2) == 1) return gauss_primary_associate(x).second;
  // Even norm: no primary associate; take the associate in the quadrant
  // a > 0, b >= 0 (unique for nonzero elements).
  for (const GaussianInt& u : gauss_units()) {
    GaussianInt c = gauss_mul(u, x);
    if (c.a > 0 && c.b >= 0) return c;
  }
  throw std::logic_error("no associate in the canonical quadrant");
}

bool gauss_is_primary(const GaussianInt& x) {
  return mod_ui(x.a, 2) == 1 && mod_ui(x.b, 2) == 0 && mod_ui(x.a + x.b, 4) == 1;
}

std::pair<GaussianInt, GaussianInt> gauss_primary_associate(const GaussianInt& x) {
  if (mod_ui(gauss_norm(x), 2) == 0)
    throw DomainError("even-norm", "no primary associate: norm is even");
  std::optional<std::pair<GaussianInt, GaussianInt>> found;
  for (const GaussianInt& u : gauss_units()) {
    GaussianInt c = gauss_mul(u, x);
    if (gauss_is_primary(c)) {
      if (found) throw std::logic_error("two primary associates");
      found = {u, c};
    }
  }
  if (!found) throw std::logic_error("no primary associate among the four units");
  return *found;
}

GaussFactor classify_gaussian_prime(const Int& p) {
  if (!is_prime(p)) throw DomainError("not-prime", "classification requires a rational prime");
  if (p == 2) return GaussFactor{GaussClass::Ramified, GaussianInt{1, 1}, std::nullopt};
  if (mod_ui(p, 4) == 3)
    return GaussFactor{GaussClass::Inert, GaussianInt{-p, 0}, std::nullopt};
  // p == 1 (mod 4): gcd(p, s + i) with s^2 == -1 (mod p) isolates one factor.
  auto s = sqrt_mod(Int(-1), p);
  if (!s) throw std::logic_error("-1 must be a square mod a prime == 1 (mod 4)");
  GaussianInt g = gauss_gcd(GaussianInt{p, 0}, GaussianInt{*s, 1});
  GaussianInt pi = gauss_primary_associate(g).second;
  return GaussFactor{GaussClass::Split, pi, gauss_conj(pi)};
}

bool gauss_is_prime_elem(const GaussianInt& x) {
  if (gauss_is_zero(x) || gauss_is_unit(x)) return false;
  Int n = gauss_norm(x);
  if (is_prime(n)) return true;  // split primes and 1+i
  Int q;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
  if (mod_ui(q, 4) != 3 || !is_prime(q)) return false;
  return x.a % q == 0 && x.b % q == 0;
}

QuarticValue quartic_from_exponent(unsigned j) {
  switch (j % 4) {
    case 0: return QuarticValue::One;
    case 1: return QuarticValue::I;
    case 2: return QuarticValue::MinusOne;
    default: return QuarticValue::MinusI;
  }
}

namespace {
int quartic_exp(QuarticValue v) {
  switch (v) {
    case QuarticValue::One: return 0;
    case QuarticValue::I: return 1;
    case QuarticValue::MinusOne: return 2;
    case QuarticValue::MinusI: return 3;
    default: throw DomainError("zero-value", "no exponent for the zero value");
  }
}
}  // namespace

QuarticValue quartic_mul(QuarticValue x, QuarticValue y) {
  if (x == QuarticValue::Zero || y == QuarticValue::Zero) return QuarticValue::Zero;
  return quartic_from_exponent(static_cast<unsigned>(quartic_exp(x) + quartic_exp(y)));
}

QuarticValue quartic_conj(QuarticValue x) {
  if (x == QuarticValue::Zero) return x;
  return quartic_from_exponent(static_cast<unsigned>(4 - quartic_exp(x)));
}

const char* quartic_name(QuarticValue v) {
  switch (v) {
    case QuarticValue::Zero: return "0";
    case QuarticValue::One: return "1";
    case QuarticValue::I: return "i";
    case QuarticValue::MinusOne: return "-1";
    default: return "-i";
  }
}

QuarticValue biquadratic_char(const GaussianInt& pi, const GaussianInt& alpha) {
  if (!gauss_is_prime_elem(pi))
    throw DomainError("not-prime-element", "character modulus must be prime");
  Int n = gauss_norm(pi);
  if (n == 2) throw DomainError("ramified-norm", "no biquadratic character modulo 1+i");
  if (gauss_divides(pi, alpha)) return QuarticValue::Zero;
  Int e = (n - 1) / 4;

  // Exponentiate in a concrete residue representation.
  GaussianInt r{1, 0};
  if (is_prime(n)) {
    // split: the residue field is Z/p with i |-> -a * b^{-1}
    Int binv;
    if (mpz_invert(binv.get_mpz_t(), pi.b.get_mpz_t(), n.get_mpz_t()) == 0)
      throw std::logic_error("split prime has invertible i-coordinate");
    Int iimg = pos_mod(-pi.a * binv, n);
    Int base = pos_mod(alpha.a + alpha.b * iimg, n);
    Int val;
    mpz_powm(val.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
    r = {val, 0};
  } else {
    // inert: pairs modulo q
    Int q;
    mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
    GaussianInt acc{1, 0};
    GaussianInt base{pos_mod(alpha.a, q), pos_mod(alpha.b, q)};
    Int k = e;
    while (k > 0) {
      if (mpz_odd_p(k.get_mpz_t())) {
        acc = gauss_mul(acc, base);
        acc = {pos_mod(acc.a, q), pos_mod(acc.b, q)};
      }
      base = gauss_mul(base, base);
      base = {pos_mod(base.a, q), pos_mod(base.b, q)};
      k >>= 1;
    }
    r = acc;
  }

  // The unique unit congruent to r mod pi, matched by divisibility in the
  // fixed candidate order 1, i, -1, -i.
  const std::pair<GaussianInt, QuarticValue> candidates[4] = {
      {GaussianInt{1, 0}, QuarticValue::One},
      {GaussianInt{0, 1}, QuarticValue::I},
      {GaussianInt{-1, 0}, QuarticValue::MinusOne},
      {GaussianInt{0, -1}, QuarticValue::MinusI}};
  std::optional<QuarticValue> found;
  for (const auto& [unit, value] : candidates) {
    if (gauss_divides(pi, gauss_sub(r, unit))) {
      if (found) throw std::logic_error("two quartic candidates matched");
      found = value;
    }
  }
  if (!found) throw std::logic_error("no quartic candidate matched");
  return *found;
}

bool check_biquadratic_reciprocity(const GaussianInt& pi, const GaussianInt& lam) {
  if (!gauss_is_primary(pi) || !gauss_is_primary(lam))
    throw DomainError("not-primary", "reciprocity requires primary elements");
  Int npi = gauss_norm(pi), nlam = gauss_norm(lam);
  if (mod_ui(npi, 2) == 0 || mod_ui(nlam, 2) == 0)
    throw DomainError("even-norm", "reciprocity requires odd norms");
  if (!gauss_is_unit(gauss_gcd(pi, lam)))
    throw DomainError("not-coprime", "reciprocity requires coprime elements");
  if (npi == nlam) throw DomainError("equal-norms", "reciprocity requires distinct norms");

  QuarticValue lhs = biquadratic_char(lam, pi);          // chi_lambda(pi)
  QuarticValue rhs = biquadratic_char(pi, lam);          // chi_pi(lambda)
  bool sign_negative = mod_ui((nlam - 1) / 4, 2) == 1 && mod_ui((npi - 1) / 4, 2) == 1;
  if (sign_negative) rhs = quartic_mul(rhs, QuarticValue::MinusOne);
  return lhs == rhs;
}

}  // namespace recip
