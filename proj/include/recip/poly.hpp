#pragma once
// Dense polynomials over F_p, coefficients ascending (coeffs[j] multiplies x^j),
// no trailing zeros. p < 2^32 so every product fits in uint64 via 128-bit mulmod.

#include <cstdint>
#include <vector>

#include "recip/ints.hpp"

namespace recip {

struct PolyFp {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> coeffs;  // empty == zero polynomial

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
  std::uint64_t leading() const { return coeffs.back(); }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  bool operator==(const PolyFp&) const = default;
};

// Construction. Coefficients are reduced mod p; trailing zeros trimmed.
PolyFp poly_make(std::uint64_t p, std::vector<std::uint64_t> coeffs);
PolyFp poly_zero(std::uint64_t p);
PolyFp poly_const(std::uint64_t p, std::uint64_t c);
PolyFp poly_x(std::uint64_t p);

PolyFp poly_add(const PolyFp& a, const PolyFp& b);
PolyFp poly_sub(const PolyFp& a, const PolyFp& b);
PolyFp poly_mul(const PolyFp& a, const PolyFp& b);
PolyFp poly_scale(const PolyFp& a, std::uint64_t c);

// Euclidean division: a = q*b + r with deg r < deg b. b nonzero.
struct PolyDivMod {
  PolyFp q;
  PolyFp r;
};
PolyDivMod poly_divmod(const PolyFp& a, const PolyFp& b);
PolyFp poly_mod(const PolyFp& a, const PolyFp& b);

// Monic gcd (zero if both inputs are zero).
PolyFp poly_gcd(PolyFp a, PolyFp b);

// base^exp mod modulus (modulus nonconstant).
PolyFp poly_powmod(const PolyFp& base, const Int& exp, const PolyFp& modulus);

// x^(p^k) mod modulus via repeated Frobenius (k >= 0).
PolyFp poly_frobenius_power(const PolyFp& modulus, unsigned k);

// Deterministic irreducibility over F_p: f monic of degree n >= 1 is irreducible
// iff x^(p^n) == x (mod f) and gcd(f, x^(p^(n/r)) - x) = 1 for every prime r | n.
bool poly_is_irreducible(const PolyFp& f);

// Base-p integer encoding sum coeffs[j] * p^j. Total order used everywhere the
// interface says "lexicographic": constant digit least significant.
Int poly_encode(const PolyFp& f);
PolyFp poly_decode(std::uint64_t p, Int code);

std::string poly_to_string(const PolyFp& f);  // e.g. "x^2+2*x+1" over F_3

}  // namespace recip
