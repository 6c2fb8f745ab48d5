#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recip {

// Batch verification sweeps. Each sweep enumerates a deterministic, ordered
// case list (ascending norms / primes), evaluates every case exactly, and
// reports the failures with enough detail to replay them. `jobs` > 1 fans the
// pure per-case work out to an OpenMP pool; the report content is identical
// for every jobs value (only elapsed_ms varies). Builds without OpenMP fall
// back to the serial loop.

enum class SweepLaw { Quadratic, Cubic, Biquadratic, GaussIdentities, FieldStructure };
const char* sweep_law_name(SweepLaw law);

struct SweepReport {
  SweepLaw law;
  std::uint64_t bound = 0;
  std::uint64_t cases_checked = 0;
  std::vector<std::string> failures;  // empty == fully verified
  std::uint64_t elapsed_ms = 0;
};

// Quadratic reciprocity over the rational primes: for all odd primes
// p < q <= bound, (p/q)(q/p) == (-1)^{(p-1)(q-1)/4}, plus both supplements
// (-1/p) and (2/p) for every odd prime p <= bound.
SweepReport sweep_quadratic(std::uint64_t bound, int jobs = 1);

// Finite-field Gauss-sum route to quadratic reciprocity: for every pair of
// distinct odd primes (p, q) with q^{ord_p(q)} <= bound, the quadratic sum
// tau = sum_t (t/p) z^t over F_{q^n} satisfies tau^2 = (-1)^{(p-1)/2} p,
// tau^q = (q/p) tau, and the sign matches the Legendre symbol both ways.
// Reports under the quadratic law tag. When reference_kernel is set, every
// case runs the literal term-by-term sum; by default prime-field cases use a
// consecutive-squares kernel in raw 64-bit arithmetic (same identities, no
// per-term symbol evaluation). Bound is capped by the field enumeration
// guard.
SweepReport sweep_hausner(std::uint64_t bound, int jobs = 1,
                          bool reference_kernel = false);

// Cubic reciprocity in Z[w]: all primary prime pairs of distinct norms with
// split norms <= max_norm and inert q^2 <= max_norm, plus both supplement
// formulas against direct character evaluation for every modulus in range.
SweepReport sweep_cubic(std::uint64_t max_norm, int jobs = 1);

// Biquadratic reciprocity in Z[i]: all primary prime pairs of distinct norms
// with split norms <= max_norm and inert q^2 <= max_norm.
SweepReport sweep_biquadratic(std::uint64_t max_norm, int jobs = 1);

// Exact Gauss/Jacobi sum identities over F_p for p <= max_p and every
// supported character order k in {2,3,4,6} dividing p-1: the Jacobi special
// values (J(eps,eps)=p, J(eps,chi)=0, J(chi,inverse)=-chi(-1)), |g(chi)|^2=p,
// g(chi)g(conj chi)=chi(-1)p, the g(chi)g(lam)=J(chi,lam)g(chi lam) relation
// for compatible order pairs, and the g(chi)^n product formula for n in
// {3,4,6}.
SweepReport sweep_gauss_identities(std::uint64_t max_p, int jobs = 1);

// Structural ring properties of Z[w] and Z[i]: Euclidean division remainder
// bounds (exhaustive small box plus seeded random trials), norm
// multiplicativity, uniqueness of the primary associate (1 of 6 / 1 of 4),
// and residue-field cardinality N(pi) for every prime of norm <= norm_bound.
// The seed fixes every randomized trial; reports are reproducible.
SweepReport sweep_field_structure(std::uint64_t norm_bound, std::uint64_t seed,
                                  int jobs = 1);

}  // namespace recip
