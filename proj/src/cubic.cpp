#include "recip/cubic.hpp"

#include <stdexcept>
#include <utility>

#include "recip/charsum.hpp"
#include "recip/ints.hpp"

namespace recip {

namespace {

Int pos_mod(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Eisenstein eis_reduce_coords(const Eisenstein& x, const Int& q) {
  return Eisenstein{pos_mod(x.a, q), pos_mod(x.b, q)};
}

// x^e with both coordinates kept reduced mod q (inert residue field F_{q^2}).
Eisenstein eis_powmod_pair(const Eisenstein& x, Int e, const Int& q) {
  Eisenstein base = eis_reduce_coords(x, q);
  Eisenstein acc{1, 0};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = eis_reduce_coords(eis_mul(acc, base), q);
    base = eis_reduce_coords(eis_mul(base, base), q);
    e >>= 1;
  }
  return acc;
}

unsigned exponent_of(CubicValue v) {
  switch (v) {
    case CubicValue::One:
      return 0;
    case CubicValue::Omega:
      return 1;
    case CubicValue::OmegaSq:
      return 2;
    default:
      throw std::logic_error("no exponent for the zero cubic value");
  }
}

}  // namespace

CubicValue cubic_mul(CubicValue x, CubicValue y) {
  if (x == CubicValue::Zero || y == CubicValue::Zero) return CubicValue::Zero;
  return cubic_from_exponent((exponent_of(x) + exponent_of(y)) % 3);
}

CubicValue cubic_conj(CubicValue x) {
  if (x == CubicValue::Omega) return CubicValue::OmegaSq;
  if (x == CubicValue::OmegaSq) return CubicValue::Omega;
  return x;
}

CubicValue cubic_from_exponent(std::uint64_t j) {
  switch (j % 3) {
    case 0:
      return CubicValue::One;
    case 1:
      return CubicValue::Omega;
    default:
      return CubicValue::OmegaSq;
  }
}

const char* cubic_name(CubicValue v) {
  switch (v) {
    case CubicValue::Zero:
      return "0";
    case CubicValue::One:
      return "1";
    case CubicValue::Omega:
      return "w";
    default:
      return "w^2";
  }
}

CubicCharCtx cubic_ctx(const Eisenstein& pi) {
  if (!eis_is_prime_elem(pi))
    throw DomainError("not-prime-element",
                      "cubic character modulus must be a prime element of Z[w]");
  CubicCharCtx ctx;
  ctx.pi = pi;
  ctx.norm = eis_norm(pi);
  if (ctx.norm == 3)
    throw DomainError("ramified-norm",
                      "cubic character is undefined modulo the ramified prime (norm 3)");
  ctx.exponent = (ctx.norm - 1) / 3;
  ctx.split = (is_prime(ctx.norm) != 0);
  if (ctx.split) {
    // Residue field is Z/p; w maps to -a * b^{-1}. b is invertible: if p | b
    // the norm a^2 - ab + b^2 could not be the prime p itself.
    Int binv;
    if (mpz_invert(binv.get_mpz_t(), pos_mod(pi.b, ctx.norm).get_mpz_t(),
                   ctx.norm.get_mpz_t()) == 0)
      throw std::logic_error("split modulus with non-invertible w-coordinate");
    ctx.wimg = pos_mod(-pi.a * binv, ctx.norm);
    ctx.q = 0;
  } else {
    // Inert: pi is an associate of a rational prime q, norm q^2.
    mpz_sqrt(ctx.q.get_mpz_t(), ctx.norm.get_mpz_t());
    ctx.wimg = 0;
  }
  return ctx;
}

CubicValue cubic_char(const CubicCharCtx& ctx, const Eisenstein& alpha) {
  if (eis_divides(ctx.pi, alpha)) return CubicValue::Zero;
  Eisenstein r;
  if (ctx.split) {
    Int base = pos_mod(alpha.a + alpha.b * ctx.wimg, ctx.norm);
    Int val;
    mpz_powm(val.get_mpz_t(), base.get_mpz_t(), ctx.exponent.get_mpz_t(),
             ctx.norm.get_mpz_t());
    r = Eisenstein{val, 0};
  } else {
    r = eis_powmod_pair(alpha, ctx.exponent, ctx.q);
  }
  static const Eisenstein kCandidates[3] = {
      Eisenstein{1, 0}, Eisenstein{0, 1}, Eisenstein{-1, -1}};  // 1, w, w^2
  int hit = -1;
  for (int j = 0; j < 3; ++j) {
    if (eis_divides(ctx.pi, eis_sub(r, kCandidates[j]))) {
      if (hit >= 0)
        throw std::logic_error("cubic character matched two cube roots of unity");
      hit = j;
    }
  }
  if (hit < 0)
    throw std::logic_error("cubic character power is not a cube root of unity");
  return cubic_from_exponent(static_cast<std::uint64_t>(hit));
}

bool is_cubic_residue(const CubicCharCtx& ctx, const Eisenstein& alpha) {
  if (eis_divides(ctx.pi, alpha))
    throw DomainError("zero-argument",
                      "cubic residue question is undefined for multiples of the modulus");
  return cubic_char(ctx, alpha) == CubicValue::One;
}

bool check_cubic_reciprocity(const Eisenstein& pi1, const Eisenstein& pi2) {
  if (!eis_is_primary(pi1) || !eis_is_primary(pi2))
    throw DomainError("not-primary", "cubic reciprocity requires primary elements");
  CubicCharCtx c1 = cubic_ctx(pi1);  // not-prime-element / ramified-norm
  CubicCharCtx c2 = cubic_ctx(pi2);
  if (c1.norm == c2.norm)
    throw DomainError("equal-norms",
                      "cubic reciprocity requires elements of distinct norms");
  return cubic_char(c1, pi2) == cubic_char(c2, pi1);
}

CubicValue supplement_omega(const CubicCharCtx& ctx) {
  // N(pi) == 1 (mod 3), so N(pi) mod 9 is 1, 4 or 7.
  unsigned long m9 = mpz_fdiv_ui(ctx.norm.get_mpz_t(), 9);
  return cubic_from_exponent((m9 - 1) / 3);
}

CubicValue supplement_one_minus_omega(const CubicCharCtx& ctx) {
  if (!eis_is_primary(ctx.pi))
    throw DomainError("not-primary",
                      "the 1-w supplement requires a primary modulus");
  Int m = (ctx.pi.a + 1) / 3;  // exact: a == 2 (mod 3) for primary pi
  Int two_m = 2 * m;
  return cubic_from_exponent(mpz_fdiv_ui(two_m.get_mpz_t(), 3));
}

bool jacobi_eq_pi_check(std::uint64_t p) {
  if (p % 3 != 1 || !is_prime_u64(p))
    throw DomainError("not-split", "requires a prime p == 1 (mod 3)");
  MultChar chi = char_make(p, 3);
  TaggedRingElt js = jacobi_sum(chi, chi);
  Eisenstein j{js.value.a, js.value.b};
  if (!eis_is_primary(j)) return false;
  if (eis_norm(j) != Int(static_cast<unsigned long>(p))) return false;
  EisFactor f = eis_classify_prime(Int(static_cast<unsigned long>(p)));
  if (!(j == f.pi || (f.bar && j == *f.bar))) return false;
  // Orientation: chi must coincide pointwise with the cubic character of the
  // modulus J under t |-> t + 0*w.
  CubicCharCtx ctx = cubic_ctx(j);
  for (std::uint64_t t = 1; t < p; ++t) {
    auto v = char_eval(chi, Int(static_cast<unsigned long>(t)));
    if (!v) return false;
    if (cubic_char(ctx, Eisenstein{Int(static_cast<unsigned long>(t)), 0}) !=
        cubic_from_exponent(v->j))
      return false;
  }
  return true;
}

bool cubic_gauss_cube_check(std::uint64_t p) {
  if (p % 3 != 1 || !is_prime_u64(p))
    throw DomainError("not-split", "requires a prime p == 1 (mod 3)");
  if (p > kGaussCubeGuard)
    throw ResourceError("cube-guard",
                        "exact cyclotomic cube exceeds the configured bound");
  MultChar chi = char_make(p, 3);
  TaggedRingElt js = jacobi_sum(chi, chi);
  Eisenstein j{js.value.a, js.value.b};
  if (!eis_is_primary(j) || eis_norm(j) != Int(static_cast<unsigned long>(p)))
    return false;
  CyclotomicElt cube = cyclo_pow(gauss_sum(chi), 3);
  auto c = cyclo_as_const(cube);
  if (!c) return false;
  Int P(static_cast<unsigned long>(p));
  return c->a == P * j.a && c->b == P * j.b;
}

std::uint64_t all_cubes_mod_q(std::uint64_t q, const Int& n) {
  if (q % 3 != 2 || !is_prime_u64(q))
    throw DomainError("not-inert", "requires a prime q == 2 (mod 3)");
  std::uint64_t e = (2 * q - 1) / 3;  // 3e == 1 (mod q-1)
  std::uint64_t base = mpz_fdiv_ui(n.get_mpz_t(), q);
  return powmod_u64(base, e, q);
}

TwoCubicResult two_as_cubic_residue(std::uint64_t p) {
  if (p % 3 != 1 || !is_prime_u64(p))
    throw DomainError("not-split", "requires a prime p == 1 (mod 3)");
  TwoCubicResult res;
  Int P(static_cast<unsigned long>(p));
  for (Int D = 0; 27 * D * D <= P; ++D) {
    Int rest = P - 27 * D * D;
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Int C;
      mpz_sqrt(C.get_mpz_t(), rest.get_mpz_t());
      res.solvable = true;
      res.rep = std::make_pair(C, D);
      return res;
    }
  }
  return res;
}

bool pi_mod_two_criterion(const Eisenstein& pi) {
  if (!eis_is_primary(pi))
    throw DomainError("not-primary", "the mod-2 criterion requires a primary prime");
  CubicCharCtx ctx = cubic_ctx(pi);  // validates primality and norm != 3
  (void)ctx;
  return mpz_odd_p(pi.a.get_mpz_t()) != 0 && mpz_even_p(pi.b.get_mpz_t()) != 0;
}

Int sum_powers_check(std::uint64_t p, std::uint64_t k) {
  if (!is_prime_u64(p)) throw DomainError("not-prime", "p must be prime");
  if (k == 0) throw DomainError("bad-exponent", "k must be at least 1");
  std::uint64_t acc = 0;
  for (std::uint64_t t = 1; t < p; ++t) {
    acc += powmod_u64(t, k, p);
    if (acc >= p) acc -= p;
  }
  return Int(static_cast<unsigned long>(acc));
}

}  // namespace recip
