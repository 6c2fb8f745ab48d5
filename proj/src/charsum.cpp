#include "recip/charsum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "recip/field.hpp"
#include "recip/parse.hpp"

namespace recip {

namespace {

// --- base-ring plumbing ----------------------------------------------------

const char* kUnsupportedOrderMsg =
    "character order must be one of 1, 2, 3, 4, 6 for exact base-ring values";

// zeta_6^m = (1+w)^m in Z[w]
const RingElt kZeta6[6] = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
// i^m in Z[i]
const RingElt kZeta4[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::optional<RootOfUnity> char_eval_u64(const MultChar& chi, std::uint64_t r) {
  if (r == 0) {
    if (chi.order == 1) return RootOfUnity{1, 0};
    return std::nullopt;
  }
  std::uint64_t l = (*chi.dlog)[r];
  std::uint64_t j =
      static_cast<std::uint64_t>((static_cast<unsigned __int128>(chi.mult) * l) % chi.order);
  return RootOfUnity{chi.order, j};
}

// --- integer polynomial helpers (ascending coefficients) --------------------

std::vector<Int> zpoly_trim(std::vector<Int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Division by a monic divisor; returns the quotient, writes the remainder.
std::vector<Int> zpoly_divmod_monic(std::vector<Int> num, const std::vector<Int>& den,
                                    std::vector<Int>& rem) {
  num = zpoly_trim(std::move(num));
  std::size_t dd = den.size() - 1;
  std::vector<Int> quot(num.size() > dd ? num.size() - dd : 0, Int(0));
  while (num.size() > dd) {
    Int lead = num.back();
    std::size_t shift = num.size() - 1 - dd;
    quot[shift] = lead;
    for (std::size_t i = 0; i <= dd; ++i) num[shift + i] -= lead * den[i];
    num = zpoly_trim(std::move(num));  // the top coefficient cancelled exactly
  }
  rem = std::move(num);
  return quot;
}

std::vector<Int> zpoly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> rem;
  std::vector<Int> quot = zpoly_divmod_monic(std::move(num), den, rem);
  if (!rem.empty()) throw std::logic_error("inexact cyclotomic polynomial division");
  return quot;
}

// Phi_n via Phi_n(x) = (x^n - 1) / prod of Phi_d over proper divisors d of n.
std::vector<Int> cyclotomic_poly(std::uint64_t n) {
  std::map<std::uint64_t, std::vector<Int>> phi;
  for (std::uint64_t d : divisors_u64(n)) {
    std::vector<Int> cur(d + 1, Int(0));
    cur[0] = -1;
    cur[d] = 1;
    for (std::uint64_t e : divisors_u64(d))
      if (e < d) cur = zpoly_divexact(std::move(cur), phi[e]);
    phi[d] = std::move(cur);
  }
  return phi[n];
}

// Exact value of sum_j counts[j] * zeta_k^j, which must be a rational integer.
Int eval_root_combination(std::uint64_t k, const std::vector<Int>& counts) {
  std::vector<Int> rem;
  zpoly_divmod_monic(zpoly_trim(counts), cyclotomic_poly(k), rem);
  if (rem.size() > 1)
    throw std::logic_error("root-of-unity combination did not reduce to an integer");
  return rem.empty() ? Int(0) : rem[0];
}

// --- cyclotomic internals ----------------------------------------------------

void require_compatible(const CyclotomicElt& x, const CyclotomicElt& y) {
  if (x.p != y.p || x.ring != y.ring)
    throw DomainError("mismatch", "cyclotomic operands must share the prime and base ring");
}

// acc holds exponents 0..p-1; eliminate zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
CyclotomicElt fold_top(std::uint64_t p, BaseRing r, std::vector<RingElt>&& acc) {
  CyclotomicElt out{p, r, {}};
  out.c.assign(acc.begin(), acc.end() - 1);
  const RingElt& top = acc[p - 1];
  if (!ring_is_zero(top))
    for (auto& ce : out.c) ce = ring_sub(ce, top);
  return out;
}

void require_cyclo_prime(std::uint64_t p) {
  if (p < 2 || !is_prime_u64(p))
    throw DomainError("not-prime", "cyclotomic arithmetic needs a prime order of zeta");
}

CyclotomicElt gauss_sum_in(const MultChar& chi, const Int& a, BaseRing r) {
  std::uint64_t am = mpz_fdiv_ui(a.get_mpz_t(), chi.p);
  std::vector<RingElt> acc(chi.p, ring_zero());
  for (std::uint64_t t = 0; t < chi.p; ++t) {
    auto v = char_eval_u64(chi, t);
    if (!v) continue;
    std::uint64_t e =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(am) * t) % chi.p);
    acc[e] = ring_add(acc[e], root_embed(r, *v));
  }
  return fold_top(chi.p, r, std::move(acc));
}

}  // namespace

// --- base ring ---------------------------------------------------------------

BaseRing ring_for_order(std::uint64_t k) {
  switch (k) {
    case 1:
    case 2:
      return BaseRing::Z;
    case 3:
    case 6:
      return BaseRing::Zw;
    case 4:
      return BaseRing::Zi;
    default:
      throw DomainError("unsupported-order", kUnsupportedOrderMsg);
  }
}

BaseRing ring_combine(BaseRing x, BaseRing y) {
  if (x == y) return x;
  if (x == BaseRing::Z) return y;
  if (y == BaseRing::Z) return x;
  throw DomainError("mixed-rings",
                    "values span both w and i; 12th roots of unity are not supported");
}

RingElt ring_zero() { return {0, 0}; }
RingElt ring_one() { return {1, 0}; }

RingElt ring_add(const RingElt& x, const RingElt& y) { return {x.a + y.a, x.b + y.b}; }
RingElt ring_sub(const RingElt& x, const RingElt& y) { return {x.a - y.a, x.b - y.b}; }
RingElt ring_neg(const RingElt& x) { return {-x.a, -x.b}; }

RingElt ring_mul(BaseRing r, const RingElt& x, const RingElt& y) {
  switch (r) {
    case BaseRing::Z:
      return {x.a * y.a, 0};
    case BaseRing::Zw:
      return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    case BaseRing::Zi:
      return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  }
  throw std::logic_error("unreachable ring tag");
}

RingElt ring_conj(BaseRing r, const RingElt& x) {
  switch (r) {
    case BaseRing::Z:
      return x;
    case BaseRing::Zw:
      return {x.a - x.b, -x.b};
    case BaseRing::Zi:
      return {x.a, -x.b};
  }
  throw std::logic_error("unreachable ring tag");
}

bool ring_is_zero(const RingElt& x) { return x.a == 0 && x.b == 0; }

std::string ring_to_string(BaseRing r, const RingElt& x) {
  switch (r) {
    case BaseRing::Z:
      return x.a.get_str();
    case BaseRing::Zw:
      return eis_to_string({x.a, x.b});
    case BaseRing::Zi:
      return gauss_to_string({x.a, x.b});
  }
  throw std::logic_error("unreachable ring tag");
}

// --- roots of unity ----------------------------------------------------------

RootOfUnity root_mul(const RootOfUnity& x, const RootOfUnity& y) {
  std::uint64_t L = std::lcm(x.k, y.k);
  std::uint64_t j = (x.j * (L / x.k) + y.j * (L / y.k)) % L;
  return {L, j};
}

RootOfUnity root_conj(const RootOfUnity& x) { return {x.k, (x.k - x.j) % x.k}; }

RingElt root_embed(BaseRing r, const RootOfUnity& x) {
  switch (r) {
    case BaseRing::Z:
      if (2 % x.k == 0) return x.j == 0 ? RingElt{1, 0} : RingElt{-1, 0};
      break;
    case BaseRing::Zw:
      if (6 % x.k == 0) return kZeta6[x.j * (6 / x.k)];
      break;
    case BaseRing::Zi:
      if (4 % x.k == 0) return kZeta4[x.j * (4 / x.k)];
      break;
  }
  throw DomainError("unsupported-order", kUnsupportedOrderMsg);
}

// --- characters ----------------------------------------------------------------

MultChar char_make(std::uint64_t p, std::uint64_t k) {
  if (p < 3 || !is_prime_u64(p))
    throw DomainError("not-prime", "character modulus must be an odd prime");
  if (p > kFieldEnumGuard)
    throw ResourceError("table-guard", "character tables are limited to p <= 1000000");
  if (k == 0 || (p - 1) % k != 0)
    throw DomainError("order-mismatch", "character order must divide p-1");
  FiniteField F = ext_make(p, 1);
  FFElem g = find_generator(F);
  auto dl = std::make_shared<const std::vector<std::uint32_t>>(dlog_table(F, g));
  return {p, g, k, k == 1 ? std::uint64_t{0} : std::uint64_t{1}, std::move(dl)};
}

MultChar char_pow(const MultChar& chi, std::uint64_t m) {
  std::uint64_t M =
      static_cast<std::uint64_t>((static_cast<unsigned __int128>(chi.mult) * m) % chi.order);
  if (M == 0) return {chi.p, chi.g, 1, 0, chi.dlog};
  std::uint64_t d = std::gcd(M, chi.order);
  return {chi.p, chi.g, chi.order / d, M / d, chi.dlog};
}

MultChar char_mul(const MultChar& chi, const MultChar& lam) {
  if (chi.p != lam.p)
    throw DomainError("modulus-mismatch", "characters must share the modulus");
  std::uint64_t L = std::lcm(chi.order, lam.order);
  std::uint64_t M = (chi.mult * (L / chi.order) + lam.mult * (L / lam.order)) % L;
  if (M == 0) return {chi.p, chi.g, 1, 0, chi.dlog};
  std::uint64_t d = std::gcd(M, L);
  return {chi.p, chi.g, L / d, M / d, chi.dlog};
}

bool char_is_trivial(const MultChar& chi) { return chi.order == 1; }

BaseRing char_ring(const MultChar& chi) { return ring_for_order(chi.order); }

std::optional<RootOfUnity> char_eval(const MultChar& chi, const Int& t) {
  return char_eval_u64(chi, mpz_fdiv_ui(t.get_mpz_t(), chi.p));
}

Int char_sum_over_field(const MultChar& chi) {
  std::vector<Int> counts(chi.order, Int(0));
  if (chi.order == 1) counts[0] += 1;  // the trivial character counts t = 0 too
  for (std::uint64_t t = 1; t < chi.p; ++t) counts[char_eval_u64(chi, t)->j] += 1;
  return eval_root_combination(chi.order, counts);
}

Int sum_over_characters(std::uint64_t p, const Int& a) {
  if (p < 3 || !is_prime_u64(p))
    throw DomainError("not-prime", "the character group is taken modulo an odd prime");
  if (p > kSumOverCharsGuard)
    throw ResourceError("sum-guard", "sum over characters is limited to p <= 10000");
  std::uint64_t r = mpz_fdiv_ui(a.get_mpz_t(), p);
  if (r == 0) return Int(1);  // only the trivial character is nonzero at 0
  MultChar lam = char_make(p, p - 1);
  std::uint64_t d = (*lam.dlog)[r], n = p - 1;
  std::vector<Int> counts(n, Int(0));
  for (std::uint64_t m = 0; m < n; ++m)
    counts[static_cast<std::uint64_t>((static_cast<unsigned __int128>(m) * d) % n)] += 1;
  return eval_root_combination(n, counts);
}

// --- cyclotomic arithmetic ------------------------------------------------------

CyclotomicElt cyclo_zero(std::uint64_t p, BaseRing r) {
  require_cyclo_prime(p);
  return {p, r, std::vector<RingElt>(p - 1, ring_zero())};
}

CyclotomicElt cyclo_const(std::uint64_t p, BaseRing r, const RingElt& v) {
  CyclotomicElt out = cyclo_zero(p, r);
  out.c[0] = v;
  return out;
}

CyclotomicElt cyclo_zeta_pow(std::uint64_t p, BaseRing r, std::uint64_t e) {
  require_cyclo_prime(p);
  std::vector<RingElt> acc(p, ring_zero());
  acc[e % p] = ring_one();
  return fold_top(p, r, std::move(acc));
}

CyclotomicElt cyclo_add(const CyclotomicElt& x, const CyclotomicElt& y) {
  require_compatible(x, y);
  CyclotomicElt out = x;
  for (std::size_t j = 0; j < out.c.size(); ++j) out.c[j] = ring_add(out.c[j], y.c[j]);
  return out;
}

CyclotomicElt cyclo_sub(const CyclotomicElt& x, const CyclotomicElt& y) {
  require_compatible(x, y);
  CyclotomicElt out = x;
  for (std::size_t j = 0; j < out.c.size(); ++j) out.c[j] = ring_sub(out.c[j], y.c[j]);
  return out;
}

CyclotomicElt cyclo_neg(const CyclotomicElt& x) {
  CyclotomicElt out = x;
  for (auto& ce : out.c) ce = ring_neg(ce);
  return out;
}

CyclotomicElt cyclo_mul(const CyclotomicElt& x, const CyclotomicElt& y) {
  require_compatible(x, y);
  std::uint64_t p = x.p;
  std::vector<RingElt> acc(p, ring_zero());
  for (std::uint64_t j1 = 0; j1 + 1 < p; ++j1) {
    if (ring_is_zero(x.c[j1])) continue;
    for (std::uint64_t j2 = 0; j2 + 1 < p; ++j2) {
      if (ring_is_zero(y.c[j2])) continue;
      std::uint64_t e = (j1 + j2) % p;
      acc[e] = ring_add(acc[e], ring_mul(x.ring, x.c[j1], y.c[j2]));
    }
  }
  return fold_top(p, x.ring, std::move(acc));
}

CyclotomicElt cyclo_pow(const CyclotomicElt& x, std::uint64_t n) {
  CyclotomicElt out = cyclo_const(x.p, x.ring, ring_one());
  for (std::uint64_t k = 0; k < n; ++k) out = cyclo_mul(out, x);
  return out;
}

CyclotomicElt cyclo_scale(const RingElt& s, const CyclotomicElt& x) {
  CyclotomicElt out = x;
  for (auto& ce : out.c) ce = ring_mul(x.ring, s, ce);
  return out;
}

CyclotomicElt cyclo_conj(const CyclotomicElt& x) {
  std::uint64_t p = x.p;
  std::vector<RingElt> acc(p, ring_zero());
  for (std::uint64_t j = 0; j + 1 < p; ++j) {
    std::uint64_t e = j == 0 ? 0 : p - j;
    acc[e] = ring_add(acc[e], ring_conj(x.ring, x.c[j]));
  }
  return fold_top(p, x.ring, std::move(acc));
}

bool cyclo_is_zero(const CyclotomicElt& x) {
  return std::all_of(x.c.begin(), x.c.end(), [](const RingElt& v) { return ring_is_zero(v); });
}

std::optional<RingElt> cyclo_as_const(const CyclotomicElt& x) {
  for (std::size_t j = 1; j < x.c.size(); ++j)
    if (!ring_is_zero(x.c[j])) return std::nullopt;
  return x.c[0];
}

std::string cyclo_to_string(const CyclotomicElt& x) {
  std::string out;
  for (std::size_t j = 0; j < x.c.size(); ++j) {
    if (ring_is_zero(x.c[j])) continue;
    std::string coeff = ring_to_string(x.ring, x.c[j]);
    if (coeff.find_first_of("+-", 1) != std::string::npos) coeff = "(" + coeff + ")";
    std::string zpart = j == 0 ? "" : (j == 1 ? "z" : "z^" + std::to_string(j));
    std::string term;
    if (j == 0)
      term = coeff;
    else if (coeff == "1")
      term = zpart;
    else if (coeff == "-1")
      term = "-" + zpart;
    else
      term = coeff + "*" + zpart;
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

std::complex<double> cyclo_eval_complex(const CyclotomicElt& x) {
  constexpr double kTau = 6.283185307179586476925286766559;
  std::complex<double> sym = 1.0;
  if (x.ring == BaseRing::Zw) sym = std::polar(1.0, kTau / 3.0);
  if (x.ring == BaseRing::Zi) sym = {0.0, 1.0};
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < x.c.size(); ++j) {
    std::complex<double> coeff = x.c[j].a.get_d() + sym * x.c[j].b.get_d();
    sum += coeff * std::polar(1.0, kTau * static_cast<double>(j) / static_cast<double>(x.p));
  }
  return sum;
}

// --- Gauss and Jacobi sums -----------------------------------------------------

CyclotomicElt gauss_sum(const MultChar& chi, const Int& a) {
  return gauss_sum_in(chi, a, char_ring(chi));
}

TaggedRingElt jacobi_sum(const MultChar& chi, const MultChar& lam) {
  if (chi.p != lam.p)
    throw DomainError("modulus-mismatch", "Jacobi sum needs characters with the same modulus");
  BaseRing r = ring_combine(char_ring(chi), char_ring(lam));
  std::uint64_t p = chi.p;
  RingElt sum = ring_zero();
  for (std::uint64_t t = 0; t < p; ++t) {
    auto x = char_eval_u64(chi, t);
    if (!x) continue;
    auto y = char_eval_u64(lam, (p + 1 - t) % p);
    if (!y) continue;
    sum = ring_add(sum, ring_mul(r, root_embed(r, *x), root_embed(r, *y)));
  }
  return {r, sum};
}

bool gauss_magnitude_check(const MultChar& chi) {
  if (char_is_trivial(chi))
    throw DomainError("trivial-character", "the magnitude identity needs a nontrivial character");
  CyclotomicElt g = gauss_sum(chi);
  CyclotomicElt prod = cyclo_mul(g, cyclo_conj(g));
  return prod == cyclo_const(chi.p, g.ring, {Int(chi.p), 0});
}

bool gauss_jacobi_relation_check(const MultChar& chi, const MultChar& lam) {
  MultChar prod = char_mul(chi, lam);
  if (char_is_trivial(chi) || char_is_trivial(lam) || char_is_trivial(prod))
    throw DomainError("trivial-character",
                      "the relation needs chi, lam, and chi*lam all nontrivial");
  BaseRing r =
      ring_combine(ring_combine(char_ring(chi), char_ring(lam)), char_ring(prod));
  CyclotomicElt lhs = cyclo_mul(gauss_sum_in(chi, 1, r), gauss_sum_in(lam, 1, r));
  RingElt J = jacobi_sum(chi, lam).value;
  CyclotomicElt rhs = cyclo_scale(J, gauss_sum_in(prod, 1, r));
  return lhs == rhs;
}

bool gauss_power_formula_check(const MultChar& chi) {
  std::uint64_t n = chi.order;
  if (n <= 2)
    throw DomainError("order-too-small", "the power formula applies to orders above 2");
  BaseRing r = char_ring(chi);
  CyclotomicElt lhs = cyclo_pow(gauss_sum(chi), n);
  RingElt rhs = root_embed(r, *char_eval(chi, Int(chi.p) - 1));  // chi(-1)
  rhs = ring_mul(r, rhs, {Int(chi.p), 0});
  for (std::uint64_t j = 1; j + 1 < n; ++j)
    rhs = ring_mul(r, rhs, jacobi_sum(chi, char_pow(chi, j)).value);
  return lhs == cyclo_const(chi.p, r, rhs);
}

}  // namespace recip
