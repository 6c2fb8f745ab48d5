#pragma once
// Exact integer utilities: primality, modular arithmetic, Legendre symbols,
// square roots mod p, Möbius, factorization, and linear congruences.
// All public values are arbitrary-precision (GMP); uint64_t paths are used
// internally only where a guard keeps every intermediate below 2^63.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace recip {

using Int = mpz_class;

// Rejected input: mathematically meaningless request (composite modulus where a
// prime is required, zero divisor, out-of-domain argument...). `code` is a
// stable machine-readable tag; `what()` carries the human sentence.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string code, const std::string& msg)
      : std::domain_error(msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Refused work: the request is well-formed but exceeds a documented size guard.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// ---- uint64_t modular arithmetic (all moduli < 2^63) ----

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic for all inputs < 2^64 (fixed Miller-Rabin base set).
bool is_prime_u64(std::uint64_t n);

// Deterministic below 2^64; GMP probabilistic primality (50 reps) above.
bool is_prime(const Int& n);

// Trial-division factorization, ascending primes. Guard: n below 2^62 so the
// sqrt loop terminates in reasonable time for the sizes the library admits.
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

std::uint64_t euler_phi_u64(std::uint64_t n);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

// mu(n): 0 on a squared factor, else (-1)^{#prime factors}. n >= 1.
int mobius(std::uint64_t n);

// Legendre symbol (a/p) in {-1,0,1} by Euler's criterion; p an odd prime.
int legendre(const Int& a, const Int& p);
int legendre_u64(std::uint64_t a, std::uint64_t p);

// Smallest square root of a mod p (returns min(x, p-x)), or nullopt when a is
// a non-residue. Tonelli-Shanks with the least non-residue as the auxiliary;
// fully deterministic. p an odd prime; also handles p = 2.
std::optional<Int> sqrt_mod(const Int& a, const Int& p);

// Solve a*x == b (mod m), m >= 1. Returns {x0, count, step} where the solution
// set is {x0 + j*step : 0 <= j < count} in [0, m), or nullopt if unsolvable.
struct CongruenceSolution {
  Int x0;
  Int count;
  Int step;
};
std::optional<CongruenceSolution> solve_linear_congruence(const Int& a, const Int& b,
                                                          const Int& m);

// Primes in [2, bound], ascending (simple sieve; bound guard 10^8).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

inline std::uint64_t to_u64(const Int& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p())
    throw DomainError("out-of-range", std::string(what) + " out of uint64 range");
  return v.get_ui();
}

}  // namespace recip
