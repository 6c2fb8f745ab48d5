#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "recip/eisenstein.hpp"

namespace recip {

// Values of the cubic residue character: 0, 1, w, w^2.
enum class CubicValue { Zero, One, Omega, OmegaSq };

CubicValue cubic_mul(CubicValue x, CubicValue y);
CubicValue cubic_conj(CubicValue x);              // w <-> w^2
CubicValue cubic_from_exponent(std::uint64_t j);  // w^j
const char* cubic_name(CubicValue v);             // "0", "1", "w", "w^2"

// Evaluation context for chi_pi: pi a prime element of Z[w] with N(pi) != 3,
// exponent (N(pi)-1)/3.  The residue field is realized concretely: for split
// pi (prime norm) as Z/p with w |-> wimg, for inert pi as coordinate pairs
// mod q = |a|.
struct CubicCharCtx {
  Eisenstein pi;
  Int norm;
  Int exponent;
  bool split;
  Int q;     // inert only: the rational prime under pi
  Int wimg;  // split only: the image of w in Z/p
};

// DomainError "not-prime-element" if pi is not prime, "ramified-norm" if
// N(pi) = 3.
CubicCharCtx cubic_ctx(const Eisenstein& pi);

// chi_pi(alpha): Zero if pi | alpha, else the unique u in {1, w, w^2} with
// alpha^((N(pi)-1)/3) == u (mod pi).  The match is found by testing the three
// candidates in the fixed order 1, w, w^2; anything but exactly one hit is an
// internal-consistency failure.
CubicValue cubic_char(const CubicCharCtx& ctx, const Eisenstein& alpha);

// chi_pi(alpha) == One.  DomainError "zero-argument" when pi | alpha.
bool is_cubic_residue(const CubicCharCtx& ctx, const Eisenstein& alpha);

// chi_pi1(pi2) == chi_pi2(pi1) for primary primes of distinct norms (both
// norms != 3).  Diagnostics in order: "not-primary", "not-prime-element",
// "ramified-norm", "equal-norms".
bool check_cubic_reciprocity(const Eisenstein& pi1, const Eisenstein& pi2);

// chi_pi(w) = w^((N(pi)-1)/3 mod 3), i.e. 1, w, w^2 according as
// N(pi) == 1, 4, 7 (mod 9).
CubicValue supplement_omega(const CubicCharCtx& ctx);

// chi_pi(1-w) = w^(2m) where pi = a+bw is primary and a = 3m-1.
// DomainError "not-primary" otherwise.
CubicValue supplement_one_minus_omega(const CubicCharCtx& ctx);

// For split p: the Jacobi sum J(chi, chi) of the cubic character of F_p is a
// primary element of norm p — one of the two primary factors of p — and the
// character it induces matches chi pointwise.  DomainError "not-split" unless
// p == 1 (mod 3) and prime.
bool jacobi_eq_pi_check(std::uint64_t p);

// g(chi)^3 == p * J(chi, chi) as an exact cyclotomic constant, J primary of
// norm p.  Work grows with p^2; guarded.
inline constexpr std::uint64_t kGaussCubeGuard = 2000;
bool cubic_gauss_cube_check(std::uint64_t p);

// Every residue is a cube mod q == 2 (mod 3): returns x with x^3 == n (mod q),
// namely x = n^((2q-1)/3) mod q.  DomainError "not-inert" for other moduli.
std::uint64_t all_cubes_mod_q(std::uint64_t q, const Int& n);

// Whether p = C^2 + 27 D^2 is solvable, with the witness of smallest D >= 0
// (then C >= 0).  Equivalent to 2 being a cubic residue mod p.
// DomainError "not-split" unless p == 1 (mod 3) and prime.
struct TwoCubicResult {
  bool solvable = false;
  std::optional<std::pair<Int, Int>> rep;  // (C, D)
};
TwoCubicResult two_as_cubic_residue(std::uint64_t p);

// 2 is a cubic residue mod a primary prime pi exactly when pi == 1 (mod 2):
// a odd and b even.  DomainError "not-primary" / "not-prime-element".
bool pi_mod_two_criterion(const Eisenstein& pi);

// The literal sum 1^k + 2^k + ... + (p-1)^k mod p (p-1 when (p-1) | k, else 0).
Int sum_powers_check(std::uint64_t p, std::uint64_t k);

}  // namespace recip
