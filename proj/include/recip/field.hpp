#pragma once
// Finite fields F_{p^n} as polynomial quotients F_p[x]/(f), elements carried as
// their base-p integer encodings 0..q-1 (the total order every "smallest"/"sorted"
// contract in this library refers to). Enumerative constructions are guarded at
// q <= 10^6; the x^q - x product identity has its own tighter guard.

#include <cstdint>
#include <optional>
#include <vector>

#include "recip/poly.hpp"

namespace recip {

inline constexpr std::uint64_t kFieldEnumGuard = 1'000'000;
inline constexpr std::uint64_t kXqProductGuard = 10'000;

struct FiniteField {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t q = 0;   // p^n
  PolyFp modulus;        // monic irreducible of degree n (x itself when n == 1)
};

using FFElem = std::uint64_t;  // base-p encoding of the representative polynomial

// Number of monic irreducible polynomials of degree n over F_p:
// (1/n) * sum_{d | n} mu(n/d) p^d. Exact, arbitrary precision.
Int count_irreducibles(std::uint64_t p, std::uint64_t n);

// All monic irreducibles of degree n over F_p, ascending by encoding.
// Guard: p^n <= 10^6.
std::vector<PolyFp> enumerate_irreducibles(std::uint64_t p, std::uint64_t n);

// Checks x^(p^n) - x == product of all monic irreducibles of degree d | n.
// Guard: p^n <= 10^4 (the product has degree p^n; forming it is quadratic).
bool verify_xq_factorization(std::uint64_t p, std::uint64_t n);

// F_{p^n} with the encoding-smallest monic irreducible as modulus. Guard 10^6.
FiniteField ext_make(std::uint64_t p, std::uint64_t n);

PolyFp ff_to_poly(const FiniteField& F, FFElem a);
FFElem ff_from_poly(const FiniteField& F, const PolyFp& r);

FFElem ff_add(const FiniteField& F, FFElem a, FFElem b);
FFElem ff_sub(const FiniteField& F, FFElem a, FFElem b);
FFElem ff_neg(const FiniteField& F, FFElem a);
FFElem ff_mul(const FiniteField& F, FFElem a, FFElem b);
FFElem ff_pow(const FiniteField& F, FFElem a, const Int& e);
FFElem ff_inv(const FiniteField& F, FFElem a);

// Multiplicative order of a nonzero element (smallest divisor d of q-1 with a^d = 1).
std::uint64_t ff_order(const FiniteField& F, FFElem a);

// Smallest generator of F* in encoding order (F_2 has generator 1).
FFElem find_generator(const FiniteField& F);

// dlog[a] = l with g^l = a for nonzero a (dlog[0] unused). Size q table.
std::vector<std::uint32_t> dlog_table(const FiniteField& F, FFElem g);

// (d, #elements of multiplicative order d) for each divisor d of q-1, ascending.
// Orders computed per element by divisor scan, not inferred from the group law.
std::vector<std::pair<std::uint64_t, std::uint64_t>> order_census(const FiniteField& F);

// All x with x^n = alpha, ascending by encoding. Every nonzero alpha in the image
// has exactly gcd(n, q-1) solutions; alpha = 0 has exactly {0}. n >= 1.
std::vector<FFElem> nth_power_solve(const FiniteField& F, std::uint64_t n, FFElem alpha);

// alpha lies in the subfield of order p^d (requires d | n): alpha^(p^d) == alpha.
bool subfield_member(const FiniteField& F, FFElem alpha, std::uint64_t d);

// Multiplicative order of q modulo p (p prime, p does not divide q).
std::uint64_t mult_order_mod(std::uint64_t q, std::uint64_t p);

// Quadratic Gauss sum tau = sum_t (t/p) lambda^t over F_{q^n}, lambda a primitive
// p-th root of unity built from the smallest generator; n = ord_p(q).
// Verifies tau^2 = (-1)^((p-1)/2) p, reads off s1 with tau^q = s1 * tau, and
// compares s1 against both Legendre symbols of quadratic reciprocity.
struct HausnerReport {
  std::uint64_t p = 0, q = 0, n = 0, q_pow_n = 0;
  int s1 = 0;  // +1 or -1; 0 means tau^q was neither tau nor -tau
  bool tau_sq_ok = false;
  bool tau_q_ok = false;      // s1 == (q/p)
  bool qr_consistent = false; // s1 == (p*/q), p* = (-1)^((p-1)/2) p
  bool all_ok() const { return tau_sq_ok && tau_q_ok && qr_consistent; }
};
HausnerReport hausner_check(std::uint64_t p, std::uint64_t q);

}  // namespace recip
