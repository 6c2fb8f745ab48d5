#include "recip/ints.hpp"

#include <algorithm>

namespace recip {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t acc = 1;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // n odd, n > 37^2 is not required: all small cases handled above.
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set decides primality for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
  if (n == 0) throw DomainError("zero", "cannot factorize 0");
  if (n >= (1ull << 62)) throw ResourceError("factor-guard", "factorization guard: n >= 2^62");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize_u64(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> ds{1};
  for (auto [p, e] : factorize_u64(n)) {
    std::size_t base = ds.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("zero", "mobius undefined at 0");
  if (n == 1) return 1;
  int sign = 1;
  for (auto [p, e] : factorize_u64(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

int legendre(const Int& a, const Int& p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw DomainError("not-odd-prime", "Legendre symbol needs an odd prime modulus");
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  Int e = (p - 1) / 2;
  Int v;
  mpz_powm(v.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return v == 1 ? 1 : -1;
}

int legendre_u64(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod_u64(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<Int> sqrt_mod(const Int& a, const Int& p) {
  if (p == 2) return Int(((a % 2) + 2) % 2);
  if (p < 2 || p % 2 == 0 || !is_prime(p))
    throw DomainError("not-odd-prime", "sqrt_mod needs a prime modulus");
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return Int(0);
  if (legendre(r, p) != 1) return std::nullopt;

  // Tonelli-Shanks. p-1 = q * 2^s with q odd.
  Int q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (legendre(z, p) != -1) ++z;

  Int m = s;
  Int c, t, x;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  Int e = (q + 1) / 2;
  mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  while (t != 1) {
    Int tt = t;
    unsigned i = 0;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Int b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  Int other = p - x;
  return x <= other ? x : other;
}

std::optional<CongruenceSolution> solve_linear_congruence(const Int& a, const Int& b,
                                                          const Int& m) {
  if (m < 1) throw DomainError("bad-modulus", "modulus must be >= 1");
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (b % g != 0) return std::nullopt;
  Int step = m / g;
  Int x0 = (u * (b / g)) % step;
  if (x0 < 0) x0 += step;
  return CongruenceSolution{x0, g, step};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  if (bound > 100'000'000ull) throw ResourceError("sieve-guard", "sieve bound above 1e8");
  std::vector<bool> comp(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace recip
