#pragma once
// Eisenstein integers Z[w], w^2 = -1 - w (w a primitive cube root of unity).
// Exact arbitrary-precision coordinates. Norm a^2 - ab + b^2; six units; the
// primary associate convention a == 2, b == 0 (mod 3); nearest-rounding
// Euclidean division; gcd with a deterministic normalization hierarchy.

#include <array>
#include <optional>

#include "recip/ints.hpp"

namespace recip {

struct Eisenstein {
  Int a, b;  // a + b*w
  Eisenstein() : a(0), b(0) {}
  Eisenstein(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
  bool operator==(const Eisenstein&) const = default;
};

Eisenstein eis_add(const Eisenstein& x, const Eisenstein& y);
Eisenstein eis_sub(const Eisenstein& x, const Eisenstein& y);
Eisenstein eis_neg(const Eisenstein& x);
// (a+bw)(c+dw) = (ac - bd) + (ad + bc - bd) w
Eisenstein eis_mul(const Eisenstein& x, const Eisenstein& y);
// conj(a+bw) = (a-b) - b*w
Eisenstein eis_conj(const Eisenstein& x);
Int eis_norm(const Eisenstein& x);

// The six units in fixed order: 1, -1, w, -w, w^2, -w^2.
const std::array<Eisenstein, 6>& eis_units();
bool eis_is_unit(const Eisenstein& x);
bool eis_is_zero(const Eisenstein& x);

// Euclidean division: quotient rounds each exact rational coordinate of x/y to
// the nearest integer, ties toward -infinity; the remainder then satisfies
// N(r) <= (3/4) N(y) < N(y).
struct EisDivMod {
  Eisenstein q, r;
};
EisDivMod eis_divmod(const Eisenstein& x, const Eisenstein& y);
bool eis_divides(const Eisenstein& d, const Eisenstein& x);  // d nonzero

// gcd, deterministically normalized: 0 for (0,0); a unit result becomes 1;
// otherwise the primary associate when 3 does not divide the norm; otherwise
// the unique associate in the sector a > b >= 0.
Eisenstein eis_gcd(Eisenstein x, Eisenstein y);

// primary: a == 2 (mod 3) and b == 0 (mod 3). Exactly one associate of any
// element with norm coprime to 3 is primary.
bool eis_is_primary(const Eisenstein& x);
// Returns (u, u*x) with u*x primary. DomainError "ramified-norm" if 3 | N(x).
std::pair<Eisenstein, Eisenstein> eis_primary_associate(const Eisenstein& x);

// Splitting of a rational prime p in Z[w].
enum class EisClass { Ramified, Inert, Split };
struct EisFactor {
  EisClass cls;
  Eisenstein pi;                  // ramified: 1-w; inert: p itself (primary); split: primary pi
  std::optional<Eisenstein> bar;  // split only: the conjugate primary
};
EisFactor eis_classify_prime(const Int& p);

// Is x a prime element of Z[w]?
bool eis_is_prime_elem(const Eisenstein& x);

// Canonical residue of x modulo the prime pi, inside a fundamental domain:
// split (N = p):    an integer c in [0, p)    (w == -a/b mod p)
// inert (N = q^2):  both coordinates reduced into [0, q)
// ramified (N = 3): an integer in {0, 1, 2}   (w == 1 mod (1-w))
Eisenstein eis_residue_reduce(const Eisenstein& x, const Eisenstein& pi);

// N(pi), the size of the residue field. DomainError if pi is not prime.
Int eis_residue_field_order(const Eisenstein& pi);

}  // namespace recip
