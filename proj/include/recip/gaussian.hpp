#pragma once
// Gaussian integers Z[i]: exact arithmetic, prime splitting, the primary
// associate convention pi == 1 (mod (1+i)^3), the biquadratic residue
// character, and the biquadratic reciprocity check.

#include <array>
#include <optional>

#include "recip/ints.hpp"

namespace recip {

struct GaussianInt {
  Int a, b;  // a + b*i
  GaussianInt() : a(0), b(0) {}
  GaussianInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
  bool operator==(const GaussianInt&) const = default;
};

GaussianInt gauss_add(const GaussianInt& x, const GaussianInt& y);
GaussianInt gauss_sub(const GaussianInt& x, const GaussianInt& y);
GaussianInt gauss_neg(const GaussianInt& x);
GaussianInt gauss_mul(const GaussianInt& x, const GaussianInt& y);
GaussianInt gauss_conj(const GaussianInt& x);
Int gauss_norm(const GaussianInt& x);

// The four units in fixed order: 1, -1, i, -i.
const std::array<GaussianInt, 4>& gauss_units();
bool gauss_is_unit(const GaussianInt& x);
bool gauss_is_zero(const GaussianInt& x);

// Euclidean division, nearest-integer coordinates, ties toward -infinity;
// remainder norm is at most half the divisor norm.
struct GaussDivMod {
  GaussianInt q, r;
};
GaussDivMod gauss_divmod(const GaussianInt& x, const GaussianInt& y);
bool gauss_divides(const GaussianInt& d, const GaussianInt& x);

// gcd normalized like the Eisenstein one: 0 for (0,0); units become 1; odd
// norm becomes the primary associate; even norm falls back to the unique
// associate in the quadrant a > 0, b >= 0.
GaussianInt gauss_gcd(GaussianInt x, GaussianInt y);

// primary: pi == 1 (mod (1+i)^3), equivalently a odd, b even, a+b == 1 (mod 4).
// Exactly one associate in four for odd norm.
bool gauss_is_primary(const GaussianInt& x);
// Returns (u, u*x) with u*x primary. DomainError "even-norm" otherwise.
std::pair<GaussianInt, GaussianInt> gauss_primary_associate(const GaussianInt& x);

enum class GaussClass { Ramified, Inert, Split };
struct GaussFactor {
  GaussClass cls;
  GaussianInt pi;                  // ramified: 1+i; inert: -p (primary); split: primary pi
  std::optional<GaussianInt> bar;  // split only
};
GaussFactor classify_gaussian_prime(const Int& p);

bool gauss_is_prime_elem(const GaussianInt& x);

// Values of the biquadratic character: 0 or i^j.
enum class QuarticValue { Zero, One, I, MinusOne, MinusI };
QuarticValue quartic_mul(QuarticValue x, QuarticValue y);
QuarticValue quartic_conj(QuarticValue x);
QuarticValue quartic_from_exponent(unsigned j);  // i^j
const char* quartic_name(QuarticValue v);        // "0", "1", "i", "-1", "-i"

// chi_pi(alpha): 0 when pi | alpha, else the unique i^j with
// alpha^((N(pi)-1)/4) == i^j (mod pi), found by divisibility tests against all
// four candidates with a uniqueness assertion. Requires pi prime, N(pi) != 2.
QuarticValue biquadratic_char(const GaussianInt& pi, const GaussianInt& alpha);

// Biquadratic reciprocity for coprime primary primes of distinct odd norms:
//   chi_lambda(pi) == chi_pi(lambda) * (-1)^{((N lambda - 1)/4) ((N pi - 1)/4)}.
// Diagnostics (DomainError): not-primary, even-norm, not-coprime, equal-norms.
bool check_biquadratic_reciprocity(const GaussianInt& pi, const GaussianInt& lam);

}  // namespace recip
