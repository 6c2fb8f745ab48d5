#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "recip/ints.hpp"

namespace recip {

// ---------------------------------------------------------------------------
// Base rings for exact character values: Z, Z[w] (w^2 = -1-w), Z[i].
// A RingElt is a + b*w, a + b*i, or a plain integer (b must stay 0 in Z).
// ---------------------------------------------------------------------------

enum class BaseRing { Z, Zw, Zi };

struct RingElt {
  Int a, b;
  bool operator==(const RingElt&) const = default;
};

// Smallest ring containing the k-th roots of unity, k in {1,2,3,4,6}.
// DomainError "unsupported-order" otherwise.
BaseRing ring_for_order(std::uint64_t k);
// Common ring for two value sets; Zw and Zi do not fit together (their join
// would need 12th roots of unity) -> DomainError "mixed-rings".
BaseRing ring_combine(BaseRing x, BaseRing y);

RingElt ring_zero();
RingElt ring_one();
RingElt ring_add(const RingElt& x, const RingElt& y);
RingElt ring_sub(const RingElt& x, const RingElt& y);
RingElt ring_neg(const RingElt& x);
RingElt ring_mul(BaseRing r, const RingElt& x, const RingElt& y);
RingElt ring_conj(BaseRing r, const RingElt& x);
bool ring_is_zero(const RingElt& x);
std::string ring_to_string(BaseRing r, const RingElt& x);

// ---------------------------------------------------------------------------
// Symbolic roots of unity and multiplicative characters mod p.
// ---------------------------------------------------------------------------

// zeta_k^j with 0 <= j < k.
struct RootOfUnity {
  std::uint64_t k, j;
  bool operator==(const RootOfUnity&) const = default;
};

RootOfUnity root_mul(const RootOfUnity& x, const RootOfUnity& y);  // common order lcm
RootOfUnity root_conj(const RootOfUnity& x);
// Embed into r; requires the k-th roots to lie in r.
RingElt root_embed(BaseRing r, const RootOfUnity& x);

// A character mod p of exact order `order`, chi(g^l) = zeta_order^(mult*l),
// where g is the fixed generator of F_p* (find_generator) and gcd(mult,
// order) = 1.  The trivial character is order 1, mult 0.
struct MultChar {
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  std::uint64_t order = 1;
  std::uint64_t mult = 0;
  std::shared_ptr<const std::vector<std::uint32_t>> dlog;
};

// The character of exact order k with chi(g) = zeta_k.  Requires p an odd
// prime (p <= enumeration guard for the table) and k | p-1.
MultChar char_make(std::uint64_t p, std::uint64_t k);
MultChar char_pow(const MultChar& chi, std::uint64_t m);
MultChar char_mul(const MultChar& chi, const MultChar& lam);  // same modulus
bool char_is_trivial(const MultChar& chi);
BaseRing char_ring(const MultChar& chi);  // ring_for_order(chi.order)

// chi(t): nullopt encodes 0 (t divisible by p, chi nontrivial); the trivial
// character has value 1 everywhere, including at 0.
std::optional<RootOfUnity> char_eval(const MultChar& chi, const Int& t);

// Sum of chi(t) over all t in F_p, evaluated exactly: 0 unless chi is
// trivial, in which case p.
Int char_sum_over_field(const MultChar& chi);

// Sum of chi(a) over all p-1 characters chi mod p, evaluated exactly as an
// integer combination of (p-1)st roots of unity: p-1 if a == 1 (mod p),
// 1 if a == 0 (only the trivial character contributes), else 0.
inline constexpr std::uint64_t kSumOverCharsGuard = 10'000;
Int sum_over_characters(std::uint64_t p, const Int& a);

// ---------------------------------------------------------------------------
// Exact cyclotomic arithmetic in R[zeta_p]: vectors of length p-1 over the
// basis {1, zeta, ..., zeta^(p-2)}, with zeta^(p-1) eliminated through
// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).  Equality is coefficient-wise
// on this canonical form.
// ---------------------------------------------------------------------------

struct CyclotomicElt {
  std::uint64_t p = 0;
  BaseRing ring = BaseRing::Z;
  std::vector<RingElt> c;
  bool operator==(const CyclotomicElt&) const = default;
};

CyclotomicElt cyclo_zero(std::uint64_t p, BaseRing r);
CyclotomicElt cyclo_const(std::uint64_t p, BaseRing r, const RingElt& v);
CyclotomicElt cyclo_zeta_pow(std::uint64_t p, BaseRing r, std::uint64_t e);
CyclotomicElt cyclo_add(const CyclotomicElt& x, const CyclotomicElt& y);
CyclotomicElt cyclo_sub(const CyclotomicElt& x, const CyclotomicElt& y);
CyclotomicElt cyclo_neg(const CyclotomicElt& x);
CyclotomicElt cyclo_mul(const CyclotomicElt& x, const CyclotomicElt& y);
CyclotomicElt cyclo_pow(const CyclotomicElt& x, std::uint64_t n);
CyclotomicElt cyclo_scale(const RingElt& s, const CyclotomicElt& x);
// zeta -> zeta^(-1) together with base-ring conjugation of coefficients.
CyclotomicElt cyclo_conj(const CyclotomicElt& x);
bool cyclo_is_zero(const CyclotomicElt& x);
// The value as a base-ring constant, if the element is one.
std::optional<RingElt> cyclo_as_const(const CyclotomicElt& x);
std::string cyclo_to_string(const CyclotomicElt& x);
// Floating-point evaluation (w, i, zeta_p as complex numbers): a secondary
// cross-check only; every identity in the library is verified exactly.
std::complex<double> cyclo_eval_complex(const CyclotomicElt& x);

// ---------------------------------------------------------------------------
// Gauss and Jacobi sums.
// ---------------------------------------------------------------------------

// g_a(chi) = sum over t in F_p of chi(t) zeta_p^(at), exact.  The base ring
// must support the character order (1,2 -> Z; 3,6 -> Z[w]; 4 -> Z[i]).
CyclotomicElt gauss_sum(const MultChar& chi, const Int& a = Int(1));

struct TaggedRingElt {
  BaseRing ring;
  RingElt value;
};

// J(chi, lam) = sum over a+b=1 in F_p of chi(a) lam(b); zeta_p-free, so the
// result lives in the base ring covering both characters.
TaggedRingElt jacobi_sum(const MultChar& chi, const MultChar& lam);

// g(chi) * conj(g(chi)) == p, exactly.  Trivial character -> DomainError.
bool gauss_magnitude_check(const MultChar& chi);

// g(chi) g(lam) == J(chi, lam) g(chi lam), exactly (product form; no
// division).  Requires chi, lam, chi*lam all nontrivial.
bool gauss_jacobi_relation_check(const MultChar& chi, const MultChar& lam);

// For order n in {3,4,6}:
//   g(chi)^n == chi(-1) * p * J(chi,chi) J(chi,chi^2) ... J(chi,chi^(n-2)).
bool gauss_power_formula_check(const MultChar& chi);

}  // namespace recip
