#include "recip/field.hpp"

#include <algorithm>
#include <numeric>

namespace recip {

namespace {

void require_prime(std::uint64_t p) {
  if (p < 2 || !is_prime_u64(p)) throw DomainError("not-prime", "expected a prime");
}

// p^n with the enumeration guard applied; throws ResourceError past the cap.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t n, std::uint64_t cap,
                          const char* guard) {
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (q > cap / p)
      throw ResourceError(guard, "field order exceeds guard of " + std::to_string(cap));
    q *= p;
  }
  return q;
}

}  // namespace

Int count_irreducibles(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n < 1) throw DomainError("bad-degree", "degree must be >= 1");
  Int total = 0;
  for (std::uint64_t d : divisors_u64(n)) {
    int mu = mobius(n / d);
    if (mu == 0) continue;
    Int pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    total += mu * pd;
  }
  // The divisor sum counts roots in F_{p^n} grouped into degree-n orbits.
  if (total % static_cast<unsigned long>(n) != 0)
    throw std::logic_error("irreducible count not divisible by degree");
  return total / static_cast<unsigned long>(n);
}

std::vector<PolyFp> enumerate_irreducibles(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n < 1) throw DomainError("bad-degree", "degree must be >= 1");
  std::uint64_t qn = checked_pow(p, n, kFieldEnumGuard, "enumeration-guard");
  std::vector<PolyFp> out;
  // Monic degree-n polynomials are exactly the encodings q + m, 0 <= m < q.
  for (std::uint64_t m = 0; m < qn; ++m) {
    PolyFp f = poly_decode(p, Int(qn) + m);
    if (poly_is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

bool verify_xq_factorization(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n < 1) throw DomainError("bad-degree", "degree must be >= 1");
  std::uint64_t qn = checked_pow(p, n, kXqProductGuard, "product-guard");
  PolyFp prod = poly_const(p, 1);
  for (std::uint64_t d : divisors_u64(n))
    for (const PolyFp& f : enumerate_irreducibles(p, d)) prod = poly_mul(prod, f);
  std::vector<std::uint64_t> cs(qn + 1, 0);
  cs[1] = p - 1;  // -x
  cs[qn] = 1;
  return prod == poly_make(p, std::move(cs));
}

FiniteField ext_make(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  if (n < 1) throw DomainError("bad-degree", "degree must be >= 1");
  std::uint64_t q = checked_pow(p, n, kFieldEnumGuard, "enumeration-guard");
  if (n == 1) return FiniteField{p, 1, p, poly_x(p)};
  for (std::uint64_t m = 0; m < q; ++m) {
    PolyFp f = poly_decode(p, Int(q) + m);
    if (poly_is_irreducible(f)) return FiniteField{p, n, q, std::move(f)};
  }
  throw std::logic_error("no irreducible polynomial found");  // impossible
}

PolyFp ff_to_poly(const FiniteField& F, FFElem a) {
  if (a >= F.q) throw DomainError("bad-element", "encoding out of field range");
  return poly_decode(F.p, Int(a));
}

FFElem ff_from_poly(const FiniteField& F, const PolyFp& r) {
  PolyFp m = poly_mod(r, F.modulus);
  Int code = poly_encode(m);
  return to_u64(code, "field element");
}

FFElem ff_add(const FiniteField& F, FFElem a, FFElem b) {
  if (F.n == 1) {
    std::uint64_t s = a + b;
    return s >= F.p ? s - F.p : s;
  }
  return ff_from_poly(F, poly_add(ff_to_poly(F, a), ff_to_poly(F, b)));
}

FFElem ff_neg(const FiniteField& F, FFElem a) {
  if (F.n == 1) return a == 0 ? 0 : F.p - a;
  return ff_from_poly(F, poly_sub(poly_zero(F.p), ff_to_poly(F, a)));
}

FFElem ff_sub(const FiniteField& F, FFElem a, FFElem b) { return ff_add(F, a, ff_neg(F, b)); }

FFElem ff_mul(const FiniteField& F, FFElem a, FFElem b) {
  if (F.n == 1) return mulmod_u64(a, b, F.p);
  return ff_from_poly(F, poly_mul(ff_to_poly(F, a), ff_to_poly(F, b)));
}

FFElem ff_pow(const FiniteField& F, FFElem a, const Int& e) {
  if (e < 0) {
    Int m = -e;
    return ff_pow(F, ff_inv(F, a), m);
  }
  FFElem acc = 1, sq = a;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = ff_mul(F, acc, sq);
    sq = ff_mul(F, sq, sq);
    k >>= 1;
  }
  return acc;
}

FFElem ff_inv(const FiniteField& F, FFElem a) {
  if (a == 0) throw DomainError("division-by-zero", "inverse of zero");
  return ff_pow(F, a, Int(F.q - 2));
}

std::uint64_t ff_order(const FiniteField& F, FFElem a) {
  if (a == 0) throw DomainError("zero-element", "order of zero is undefined");
  for (std::uint64_t d : divisors_u64(F.q - 1))
    if (ff_pow(F, a, Int(d)) == 1) return d;
  throw std::logic_error("element order exceeds group order");
}

FFElem find_generator(const FiniteField& F) {
  if (F.q == 2) return 1;
  auto fac = factorize_u64(F.q - 1);
  for (FFElem g = 2; g < F.q; ++g) {
    bool ok = true;
    for (auto [r, e] : fac) {
      (void)e;
      if (ff_pow(F, g, Int((F.q - 1) / r)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no generator found");  // impossible for a field
}

std::vector<std::uint32_t> dlog_table(const FiniteField& F, FFElem g) {
  std::vector<std::uint32_t> dlog(F.q, 0);
  FFElem x = 1;
  for (std::uint64_t l = 0; l < F.q - 1; ++l) {
    dlog[x] = static_cast<std::uint32_t>(l);
    x = ff_mul(F, x, g);
  }
  if (x != 1) throw std::logic_error("generator order does not divide group order");
  return dlog;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(const FiniteField& F) {
  auto ds = divisors_u64(F.q - 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> census;
  census.reserve(ds.size());
  for (std::uint64_t d : ds) census.emplace_back(d, 0);
  for (FFElem a = 1; a < F.q; ++a) {
    std::uint64_t ord = ff_order(F, a);
    auto it = std::lower_bound(census.begin(), census.end(),
                               std::make_pair(ord, std::uint64_t{0}));
    ++it->second;
  }
  return census;
}

std::vector<FFElem> nth_power_solve(const FiniteField& F, std::uint64_t n, FFElem alpha) {
  if (n < 1) throw DomainError("bad-exponent", "exponent must be >= 1");
  if (alpha >= F.q) throw DomainError("bad-element", "encoding out of field range");
  if (alpha == 0) return {0};
  FFElem g = find_generator(F);
  auto dlog = dlog_table(F, g);
  // x = g^y solves x^n = alpha = g^a  iff  n y == a (mod q-1).
  auto sol = solve_linear_congruence(Int(n), Int(dlog[alpha]), Int(F.q - 1));
  if (!sol) return {};
  std::vector<FFElem> out;
  std::uint64_t y = to_u64(sol->x0, "dlog"), step = to_u64(sol->step, "step"),
                cnt = to_u64(sol->count, "count");
  for (std::uint64_t j = 0; j < cnt; ++j)
    out.push_back(ff_pow(F, g, Int(y + j * step)));
  std::sort(out.begin(), out.end());
  return out;
}

bool subfield_member(const FiniteField& F, FFElem alpha, std::uint64_t d) {
  if (d < 1 || F.n % d != 0)
    throw DomainError("bad-subfield", "subfield degree must divide the extension degree");
  std::uint64_t pd = 1;
  for (std::uint64_t i = 0; i < d; ++i) pd *= F.p;
  return ff_pow(F, alpha, Int(pd)) == alpha;
}

std::uint64_t mult_order_mod(std::uint64_t q, std::uint64_t p) {
  require_prime(p);
  if (q % p == 0) throw DomainError("not-coprime", "order undefined: p divides q");
  for (std::uint64_t d : divisors_u64(p - 1))
    if (powmod_u64(q % p, d, p) == 1) return d;
  throw std::logic_error("order does not divide p-1");
}

HausnerReport hausner_check(std::uint64_t p, std::uint64_t q) {
  if (p == 2 || q == 2 || p == q || !is_prime_u64(p) || !is_prime_u64(q))
    throw DomainError("bad-pair", "need distinct odd primes p, q");
  HausnerReport rep;
  rep.p = p;
  rep.q = q;
  rep.n = mult_order_mod(q, p);
  rep.q_pow_n = checked_pow(q, rep.n, kFieldEnumGuard, "enumeration-guard");

  FiniteField F = ext_make(q, rep.n);
  FFElem gamma = find_generator(F);
  FFElem lambda = ff_pow(F, gamma, Int((rep.q_pow_n - 1) / p));

  // tau = sum over t in F_p* of (t/p) lambda^t, with lambda^t kept incrementally.
  FFElem tau = 0, lt = 1;
  for (std::uint64_t t = 1; t < p; ++t) {
    lt = ff_mul(F, lt, lambda);
    tau = legendre_u64(t, p) == 1 ? ff_add(F, tau, lt) : ff_sub(F, tau, lt);
  }

  std::uint64_t p_star_mod_q =
      (p - 1) / 2 % 2 == 0 ? p % q : (q - p % q) % q;  // (-1)^((p-1)/2) p mod q
  FFElem target = F.n == 1 ? p_star_mod_q : ff_from_poly(F, poly_const(q, p_star_mod_q));
  rep.tau_sq_ok = ff_mul(F, tau, tau) == target;

  FFElem tq = ff_pow(F, tau, Int(q));
  if (tq == tau)
    rep.s1 = 1;
  else if (tq == ff_neg(F, tau))
    rep.s1 = -1;
  else
    rep.s1 = 0;

  rep.tau_q_ok = rep.s1 != 0 && rep.s1 == legendre_u64(q, p);
  Int p_star = (p - 1) / 2 % 2 == 0 ? Int(p) : Int(-(static_cast<long>(p)));
  rep.qr_consistent = rep.s1 != 0 && rep.s1 == legendre(p_star, Int(q));
  return rep;
}

}  // namespace recip
