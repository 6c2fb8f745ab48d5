#include "recip/poly.hpp"

#include <algorithm>
#include <string>

namespace recip {

namespace {

void trim(PolyFp& f) {
  while (!f.coeffs.empty() && f.coeffs.back() == 0) f.coeffs.pop_back();
}

void check_same_field(const PolyFp& a, const PolyFp& b) {
  if (a.p != b.p) throw DomainError("field-mismatch", "polynomials over different primes");
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return powmod_u64(a, p - 2, p);
}

}  // namespace

PolyFp poly_make(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
  if (p < 2 || p >= (1ull << 32) || !is_prime_u64(p))
    throw DomainError("not-prime", "polynomial coefficient modulus must be a prime < 2^32");
  for (auto& c : coeffs) c %= p;
  PolyFp f{p, std::move(coeffs)};
  trim(f);
  return f;
}

PolyFp poly_zero(std::uint64_t p) { return poly_make(p, {}); }
PolyFp poly_const(std::uint64_t p, std::uint64_t c) { return poly_make(p, {c}); }
PolyFp poly_x(std::uint64_t p) { return poly_make(p, {0, 1}); }

PolyFp poly_add(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  PolyFp out{a.p, {}};
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    std::uint64_t s = (i < a.coeffs.size() ? a.coeffs[i] : 0) +
                      (i < b.coeffs.size() ? b.coeffs[i] : 0);
    out.coeffs[i] = s >= a.p ? s - a.p : s;
  }
  trim(out);
  return out;
}

PolyFp poly_sub(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  PolyFp out{a.p, {}};
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    std::uint64_t x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    std::uint64_t y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    out.coeffs[i] = x >= y ? x - y : x + a.p - y;
  }
  trim(out);
  return out;
}

PolyFp poly_mul(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return poly_zero(a.p);
  PolyFp out{a.p, std::vector<std::uint64_t>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      std::uint64_t t = out.coeffs[i + j] + mulmod_u64(a.coeffs[i], b.coeffs[j], a.p);
      out.coeffs[i + j] = t >= a.p ? t - a.p : t;
    }
  }
  trim(out);
  return out;
}

PolyFp poly_scale(const PolyFp& a, std::uint64_t c) {
  PolyFp out = a;
  c %= a.p;
  for (auto& x : out.coeffs) x = mulmod_u64(x, c, a.p);
  trim(out);
  return out;
}

PolyDivMod poly_divmod(const PolyFp& a, const PolyFp& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw DomainError("division-by-zero", "polynomial division by zero");
  if (a.degree() < b.degree()) return {poly_zero(a.p), a};
  std::uint64_t p = a.p;
  std::uint64_t lead_inv = inv_mod(b.leading(), p);
  PolyFp r = a;
  PolyFp q{p, std::vector<std::uint64_t>(a.degree() - b.degree() + 1, 0)};
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = r.degree() - b.degree();
    std::uint64_t factor = mulmod_u64(r.leading(), lead_inv, p);
    q.coeffs[shift] = factor;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
      std::uint64_t sub = mulmod_u64(factor, b.coeffs[i], p);
      std::uint64_t& dst = r.coeffs[shift + i];
      dst = dst >= sub ? dst - sub : dst + p - sub;
    }
    trim(r);
  }
  trim(q);
  return {q, r};
}

PolyFp poly_mod(const PolyFp& a, const PolyFp& b) { return poly_divmod(a, b).r; }

PolyFp poly_gcd(PolyFp a, PolyFp b) {
  check_same_field(a, b);
  while (!b.is_zero()) {
    PolyFp r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && a.leading() != 1) a = poly_scale(a, inv_mod(a.leading(), a.p));
  return a;
}

PolyFp poly_powmod(const PolyFp& base, const Int& exp, const PolyFp& modulus) {
  check_same_field(base, modulus);
  if (modulus.degree() < 1)
    throw DomainError("bad-modulus", "polynomial modulus must have degree >= 1");
  if (exp < 0) throw DomainError("negative-exponent", "poly_powmod needs exp >= 0");
  PolyFp acc = poly_const(base.p, 1);
  PolyFp sq = poly_mod(base, modulus);
  Int e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = poly_mod(poly_mul(acc, sq), modulus);
    sq = poly_mod(poly_mul(sq, sq), modulus);
    e >>= 1;
  }
  return acc;
}

PolyFp poly_frobenius_power(const PolyFp& modulus, unsigned k) {
  PolyFp x = poly_mod(poly_x(modulus.p), modulus);
  PolyFp acc = x;
  for (unsigned i = 0; i < k; ++i) acc = poly_powmod(acc, Int(modulus.p), modulus);
  return acc;
}

bool poly_is_irreducible(const PolyFp& f) {
  if (!f.is_monic()) throw DomainError("not-monic", "irreducibility test expects monic input");
  int n = f.degree();
  if (n < 1) throw DomainError("bad-degree", "irreducibility test expects degree >= 1");
  if (n == 1) return true;
  // x^(p^n) must equal x mod f.
  PolyFp x = poly_mod(poly_x(f.p), f);
  if (poly_frobenius_power(f, static_cast<unsigned>(n)) != x) return false;
  // No root of f may live in a proper subfield: gcd(f, x^(p^(n/r)) - x) = 1.
  for (auto [r, e] : factorize_u64(static_cast<std::uint64_t>(n))) {
    (void)e;
    PolyFp frob = poly_frobenius_power(f, static_cast<unsigned>(n / r));
    PolyFp g = poly_gcd(f, poly_sub(frob, x));
    if (g.degree() != 0) return false;
  }
  return true;
}

Int poly_encode(const PolyFp& f) {
  Int code = 0;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) code = code * f.p + *it;
  return code;
}

PolyFp poly_decode(std::uint64_t p, Int code) {
  if (code < 0) throw DomainError("negative-code", "polynomial code must be >= 0");
  std::vector<std::uint64_t> cs;
  while (code > 0) {
    cs.push_back(mpz_fdiv_ui(code.get_mpz_t(), p));
    code /= static_cast<unsigned long>(p);
  }
  return poly_make(p, std::move(cs));
}

std::string poly_to_string(const PolyFp& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int j = f.degree(); j >= 0; --j) {
    std::uint64_t c = f.coeffs[j];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (j == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += j == 1 ? "x" : "x^" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace recip
