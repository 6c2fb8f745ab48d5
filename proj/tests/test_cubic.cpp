#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "recip/charsum.hpp"
#include "recip/cubic.hpp"
#include "recip/eisenstein.hpp"

using namespace recip;

namespace {

Eisenstein E(long a, long b) { return {Int(a), Int(b)}; }

const Eisenstein kOmega = E(0, 1);
const Eisenstein kOneMinusOmega = E(1, -1);

// All primary primes with split norm <= max_norm, plus inert rationals
// q <= max_inert (q == 2 mod 3).
std::vector<Eisenstein> primaries(std::uint64_t max_norm, std::uint64_t max_inert) {
  std::vector<Eisenstein> out;
  for (std::uint64_t p : primes_up_to(max_norm)) {
    if (p % 3 != 1) continue;
    EisFactor f = eis_classify_prime(Int(p));
    out.push_back(f.pi);
    out.push_back(*f.bar);
  }
  for (std::uint64_t q : primes_up_to(max_inert)) {
    if (q % 3 == 2) out.push_back(E(static_cast<long>(q), 0));
  }
  return out;
}

}  // namespace

TEST_CASE("cubic value algebra") {
  CHECK(cubic_mul(CubicValue::Omega, CubicValue::OmegaSq) == CubicValue::One);
  CHECK(cubic_mul(CubicValue::Omega, CubicValue::Omega) == CubicValue::OmegaSq);
  CHECK(cubic_mul(CubicValue::One, CubicValue::Omega) == CubicValue::Omega);
  CHECK(cubic_mul(CubicValue::Zero, CubicValue::Omega) == CubicValue::Zero);
  CHECK(cubic_conj(CubicValue::Omega) == CubicValue::OmegaSq);
  CHECK(cubic_conj(CubicValue::OmegaSq) == CubicValue::Omega);
  CHECK(cubic_conj(CubicValue::One) == CubicValue::One);
  CHECK(cubic_from_exponent(0) == CubicValue::One);
  CHECK(cubic_from_exponent(4) == CubicValue::Omega);
  CHECK(cubic_from_exponent(5) == CubicValue::OmegaSq);
  CHECK(std::string(cubic_name(CubicValue::Zero)) == "0");
  CHECK(std::string(cubic_name(CubicValue::Omega)) == "w");
  CHECK(std::string(cubic_name(CubicValue::OmegaSq)) == "w^2");
}

TEST_CASE("evaluation context") {
  CubicCharCtx c7 = cubic_ctx(E(2, 3));
  CHECK(c7.norm == 7);
  CHECK(c7.exponent == 2);
  CHECK(c7.split);
  CHECK(c7.wimg == 4);  // w == -2 * 3^{-1} == 4 (mod 7)

  CubicCharCtx c5 = cubic_ctx(E(5, 0));
  CHECK(c5.norm == 25);
  CHECK(c5.exponent == 8);
  CHECK_FALSE(c5.split);
  CHECK(c5.q == 5);

  CHECK_THROWS_WITH_AS(cubic_ctx(E(1, -1)), doctest::Contains("ramified"),
                       DomainError);
  CHECK_THROWS_AS(cubic_ctx(E(4, 0)), DomainError);   // 2*2, not prime
  CHECK_THROWS_AS(cubic_ctx(E(7, 0)), DomainError);   // splits
  CHECK_THROWS_AS(cubic_ctx(E(0, 1)), DomainError);   // unit
  try {
    cubic_ctx(E(4, 0));
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-prime-element");
  }
  try {
    cubic_ctx(E(1, -1));
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "ramified-norm");
  }
}

TEST_CASE("frozen character values") {
  CubicCharCtx c7 = cubic_ctx(E(2, 3));
  CHECK(cubic_char(c7, E(1, 0)) == CubicValue::One);
  CHECK(cubic_char(c7, E(-1, 0)) == CubicValue::One);
  CHECK(cubic_char(c7, E(2, 0)) == CubicValue::Omega);
  CHECK(cubic_char(c7, E(6, 0)) == CubicValue::One);
  CHECK(cubic_char(c7, kOmega) == CubicValue::OmegaSq);
  CHECK(cubic_char(c7, kOneMinusOmega) == CubicValue::OmegaSq);
  CHECK(cubic_char(c7, E(2, 3)) == CubicValue::Zero);
  CHECK(cubic_char(c7, E(0, 0)) == CubicValue::Zero);

  CubicCharCtx c13 = cubic_ctx(E(-1, 3));
  CHECK(cubic_char(c13, E(2, 0)) == CubicValue::OmegaSq);

  CubicCharCtx c31 = cubic_ctx(E(5, 6));
  CHECK(cubic_char(c31, E(2, 0)) == CubicValue::One);
  CHECK(cubic_char(c31, kOneMinusOmega) == CubicValue::Omega);

  // Inert residue field F_25.
  CubicCharCtx c5 = cubic_ctx(E(5, 0));
  CHECK(cubic_char(c5, E(2, 0)) == CubicValue::One);
  CHECK(cubic_char(c5, kOmega) == CubicValue::OmegaSq);
  CHECK(cubic_char(c5, E(1, 1)) == CubicValue::Omega);
  CHECK(cubic_char(c5, E(2, 3)) == CubicValue::Omega);
  CHECK(cubic_char(c5, kOneMinusOmega) == CubicValue::Omega);

  CubicCharCtx c2 = cubic_ctx(E(2, 0));
  CHECK(cubic_char(c2, kOneMinusOmega) == CubicValue::OmegaSq);
}

TEST_CASE("cubic residue predicate") {
  CubicCharCtx c7 = cubic_ctx(E(2, 3));
  CHECK_FALSE(is_cubic_residue(c7, E(2, 0)));  // cubes mod 7 are {1, 6}
  CHECK(is_cubic_residue(c7, E(6, 0)));
  CHECK_THROWS_AS(is_cubic_residue(c7, E(2, 3)), DomainError);
  try {
    is_cubic_residue(c7, E(4, 6));
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "zero-argument");
  }

  // beta^3 is always a residue, in both field shapes.
  std::mt19937_64 rng(2026);
  for (const Eisenstein& pi : {E(2, 3), E(-1, 3), E(5, 0)}) {
    CubicCharCtx ctx = cubic_ctx(pi);
    for (int it = 0; it < 25; ++it) {
      Eisenstein beta = E(static_cast<long>(rng() % 41) - 20,
                          static_cast<long>(rng() % 41) - 20);
      if (eis_divides(pi, beta)) continue;
      Eisenstein cube = eis_mul(eis_mul(beta, beta), beta);
      CHECK(is_cubic_residue(ctx, cube));
    }
  }
}

TEST_CASE("multiplicativity, congruence stability, conjugation") {
  std::mt19937_64 rng(77);
  for (const Eisenstein& pi :
       {E(2, 3), E(-1, 3), E(5, 6), E(5, 0), E(2, 0), E(-7, 3)}) {
    CubicCharCtx ctx = cubic_ctx(pi);
    for (int it = 0; it < 40; ++it) {
      Eisenstein a = E(static_cast<long>(rng() % 61) - 30,
                       static_cast<long>(rng() % 61) - 30);
      Eisenstein b = E(static_cast<long>(rng() % 61) - 30,
                       static_cast<long>(rng() % 61) - 30);
      CHECK(cubic_char(ctx, eis_mul(a, b)) ==
            cubic_mul(cubic_char(ctx, a), cubic_char(ctx, b)));
      Eisenstein g = E(static_cast<long>(rng() % 9) - 4,
                       static_cast<long>(rng() % 9) - 4);
      CHECK(cubic_char(ctx, eis_add(a, eis_mul(g, pi))) == cubic_char(ctx, a));
      CHECK(cubic_char(ctx, eis_mul(a, a)) ==
            cubic_mul(cubic_char(ctx, a), cubic_char(ctx, a)));
    }
  }

  // conj(chi_pi(alpha)) == chi_conj(pi)(conj(alpha)) over split primes.
  for (std::uint64_t p : primes_up_to(100)) {
    if (p % 3 != 1) continue;
    EisFactor f = eis_classify_prime(Int(p));
    CubicCharCtx cpi = cubic_ctx(f.pi);
    CubicCharCtx cbar = cubic_ctx(*f.bar);
    CHECK(*f.bar == eis_conj(f.pi));
    for (long t = 1; t < 20; ++t) {
      Eisenstein a = E(t, (t * 3) % 11);
      CHECK(cubic_conj(cubic_char(cpi, a)) == cubic_char(cbar, eis_conj(a)));
    }
  }
}

TEST_CASE("residue partition: a third of the units are cubes") {
  for (std::uint64_t p : primes_up_to(1000)) {
    if (p % 3 != 1) continue;
    CubicCharCtx ctx = cubic_ctx(eis_classify_prime(Int(p)).pi);
    std::uint64_t ones = 0;
    for (std::uint64_t t = 1; t < p; ++t)
      if (cubic_char(ctx, E(static_cast<long>(t), 0)) == CubicValue::One) ++ones;
    CHECK(ones == (p - 1) / 3);
  }
  for (std::uint64_t q : {2, 5, 11}) {
    CubicCharCtx ctx = cubic_ctx(E(static_cast<long>(q), 0));
    std::uint64_t ones = 0;
    for (std::uint64_t xa = 0; xa < q; ++xa)
      for (std::uint64_t xb = 0; xb < q; ++xb) {
        if (xa == 0 && xb == 0) continue;
        if (cubic_char(ctx, E(static_cast<long>(xa), static_cast<long>(xb))) ==
            CubicValue::One)
          ++ones;
      }
    CHECK(ones == (q * q - 1) / 3);
  }
}

TEST_CASE("reciprocity: frozen pairs") {
  // split-split: both characters equal w^2
  CubicCharCtx c7 = cubic_ctx(E(2, 3));
  CubicCharCtx c13 = cubic_ctx(E(-1, 3));
  CHECK(cubic_char(c7, E(-1, 3)) == CubicValue::OmegaSq);
  CHECK(cubic_char(c13, E(2, 3)) == CubicValue::OmegaSq);
  CHECK(check_cubic_reciprocity(E(2, 3), E(-1, 3)));

  // inert-split: both equal w
  CubicCharCtx c5 = cubic_ctx(E(5, 0));
  CHECK(cubic_char(c5, E(2, 3)) == CubicValue::Omega);
  CHECK(cubic_char(c7, E(5, 0)) == CubicValue::Omega);
  CHECK(check_cubic_reciprocity(E(5, 0), E(2, 3)));
  CHECK(check_cubic_reciprocity(E(2, 0), E(2, 3)));

  // inert-inert: rational characters are trivially One
  CHECK(cubic_char(c5, E(11, 0)) == CubicValue::One);
  CHECK(cubic_char(cubic_ctx(E(11, 0)), E(5, 0)) == CubicValue::One);
  CHECK(check_cubic_reciprocity(E(5, 0), E(11, 0)));
}

TEST_CASE("reciprocity: diagnostics") {
  try {
    check_cubic_reciprocity(E(0, 1), E(2, 3));
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-primary");
  }
  try {
    check_cubic_reciprocity(E(2, 3), E(1, -1));  // 1-w is not primary
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-primary");
  }
  try {
    check_cubic_reciprocity(E(-4, 0), E(2, 3));  // primary but composite
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-prime-element");
  }
  try {
    check_cubic_reciprocity(E(2, 3), E(-1, -3));  // conjugate pair, norm 7 both
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "equal-norms");
  }
  try {
    check_cubic_reciprocity(E(2, 3), E(2, 3));
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "equal-norms");
  }
}

TEST_CASE("reciprocity: full sweep of modest norms") {
  std::vector<Eisenstein> prims = primaries(600, 23);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    CubicCharCtx ci = cubic_ctx(prims[i]);
    for (std::size_t j = i + 1; j < prims.size(); ++j) {
      if (eis_norm(prims[i]) == eis_norm(prims[j])) continue;
      CubicCharCtx cj = cubic_ctx(prims[j]);
      ++pairs;
      CHECK(cubic_char(ci, prims[j]) == cubic_char(cj, prims[i]));
    }
  }
  CHECK(pairs == 5410);
}

TEST_CASE("supplements") {
  CHECK(supplement_omega(cubic_ctx(E(2, 3))) == CubicValue::OmegaSq);   // N=7
  CHECK(supplement_omega(cubic_ctx(E(-1, 3))) == CubicValue::Omega);    // N=13
  CHECK(supplement_omega(cubic_ctx(E(5, 3))) == CubicValue::One);       // N=19
  CHECK(supplement_omega(cubic_ctx(E(2, 0))) == CubicValue::Omega);     // N=4

  CHECK(supplement_one_minus_omega(cubic_ctx(E(5, 0))) == CubicValue::Omega);
  CHECK(supplement_one_minus_omega(cubic_ctx(E(2, 3))) == CubicValue::OmegaSq);
  CHECK(supplement_one_minus_omega(cubic_ctx(E(5, 6))) == CubicValue::Omega);
  CHECK(supplement_one_minus_omega(cubic_ctx(E(2, 0))) == CubicValue::OmegaSq);

  // Formulas agree with direct evaluation everywhere in a sweep.
  for (const Eisenstein& pi : primaries(400, 17)) {
    CubicCharCtx ctx = cubic_ctx(pi);
    CHECK(supplement_omega(ctx) == cubic_char(ctx, kOmega));
    CHECK(supplement_one_minus_omega(ctx) == cubic_char(ctx, kOneMinusOmega));
  }

  // omega supplement also holds for non-primary prime moduli.
  CubicCharCtx skew = cubic_ctx(E(3, 1));  // norm 7, not primary
  CHECK(supplement_omega(skew) == cubic_char(skew, kOmega));
  try {
    supplement_one_minus_omega(skew);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-primary");
  }
}

TEST_CASE("jacobi sum of the cubic character is the primary prime") {
  for (std::uint64_t p : {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103})
    CHECK(jacobi_eq_pi_check(p));
  CHECK_THROWS_AS(jacobi_eq_pi_check(5), DomainError);
  CHECK_THROWS_AS(jacobi_eq_pi_check(9), DomainError);
  CHECK_THROWS_AS(jacobi_eq_pi_check(49), DomainError);
  try {
    jacobi_eq_pi_check(11);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-split");
  }
}

TEST_CASE("gauss sum cubed is p times the primary prime") {
  for (std::uint64_t p : {7, 13, 19, 31, 37, 43}) CHECK(cubic_gauss_cube_check(p));
  CHECK_THROWS_AS(cubic_gauss_cube_check(5), DomainError);
  try {
    cubic_gauss_cube_check(2011);
    CHECK(false);
  } catch (const ResourceError& e) {
    CHECK(e.code() == "cube-guard");
  }
}

TEST_CASE("everything is a cube modulo an inert prime") {
  CHECK(all_cubes_mod_q(5, Int(2)) == 3);
  CHECK(all_cubes_mod_q(5, Int(1)) == 1);
  CHECK(all_cubes_mod_q(11, Int(7)) == 6);
  CHECK(all_cubes_mod_q(2, Int(1)) == 1);
  CHECK(all_cubes_mod_q(17, Int(10)) == 3);
  CHECK(all_cubes_mod_q(23, Int(22)) == 22);
  CHECK(all_cubes_mod_q(5, Int(-3)) == 3);  // -3 == 2 (mod 5)

  // x = all_cubes_mod_q(q, n) really solves x^3 == n, and the solutions for
  // distinct n are distinct (cubing is a bijection on F_q).
  for (std::uint64_t q : {2, 5, 11, 17, 23, 29}) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t n = 1; n < q; ++n) {
      std::uint64_t x = all_cubes_mod_q(q, Int(static_cast<unsigned long>(n)));
      CHECK(powmod_u64(x, 3, q) == n);
      seen.insert(x);
    }
    CHECK(seen.size() == q - 1);
  }

  CHECK_THROWS_AS(all_cubes_mod_q(7, Int(2)), DomainError);
  CHECK_THROWS_AS(all_cubes_mod_q(4, Int(1)), DomainError);
  try {
    all_cubes_mod_q(13, Int(2));
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-inert");
  }
}

TEST_CASE("two as a cubic residue and the C^2 + 27 D^2 form") {
  auto r31 = two_as_cubic_residue(31);
  REQUIRE(r31.solvable);
  CHECK(r31.rep->first == 2);
  CHECK(r31.rep->second == 1);
  auto r43 = two_as_cubic_residue(43);
  REQUIRE(r43.solvable);
  CHECK(r43.rep->first == 4);
  CHECK(r43.rep->second == 1);
  auto r109 = two_as_cubic_residue(109);
  REQUIRE(r109.solvable);
  CHECK(r109.rep->first == 1);
  CHECK(r109.rep->second == 2);
  auto r127 = two_as_cubic_residue(127);
  REQUIRE(r127.solvable);
  CHECK(r127.rep->first == 10);
  CHECK(r127.rep->second == 1);
  for (std::uint64_t p : {7, 13, 19}) {
    auto r = two_as_cubic_residue(p);
    CHECK_FALSE(r.solvable);
    CHECK_FALSE(r.rep.has_value());
  }

  // Three-way agreement: representation <=> brute cube search <=> character.
  for (std::uint64_t p : primes_up_to(2000)) {
    if (p % 3 != 1) continue;
    auto r = two_as_cubic_residue(p);
    bool cube = false;
    for (std::uint64_t x = 1; x < p && !cube; ++x)
      cube = (powmod_u64(x, 3, p) == 2);
    CubicCharCtx ctx = cubic_ctx(eis_classify_prime(Int(p)).pi);
    bool chi_one = cubic_char(ctx, E(2, 0)) == CubicValue::One;
    CHECK(r.solvable == cube);
    CHECK(cube == chi_one);
    if (r.solvable) {
      const auto& [C, D] = *r.rep;
      CHECK(C * C + 27 * D * D == static_cast<unsigned long>(p));
      CHECK(C >= 0);
      CHECK(D >= 0);
    }
  }

  CHECK_THROWS_AS(two_as_cubic_residue(5), DomainError);
  try {
    two_as_cubic_residue(21);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-split");
  }
}

TEST_CASE("mod-2 criterion for 2 being a cube") {
  CHECK_FALSE(pi_mod_two_criterion(E(2, 3)));   // a even
  CHECK_FALSE(pi_mod_two_criterion(E(-1, 3)));  // b odd
  CHECK(pi_mod_two_criterion(E(5, 6)));
  CHECK(pi_mod_two_criterion(E(5, 0)));

  for (const Eisenstein& pi : primaries(1000, 29)) {
    if (mpz_even_p(eis_norm(pi).get_mpz_t())) continue;  // skip pi = 2
    CubicCharCtx ctx = cubic_ctx(pi);
    CHECK(pi_mod_two_criterion(pi) == is_cubic_residue(ctx, E(2, 0)));
  }

  CHECK_THROWS_AS(pi_mod_two_criterion(E(3, 1)), DomainError);  // not primary
  try {
    pi_mod_two_criterion(E(-4, 0));  // primary but composite
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "not-prime-element");
  }
}

TEST_CASE("power sums over the nonzero residues") {
  CHECK(sum_powers_check(5, 4) == 4);
  CHECK(sum_powers_check(5, 2) == 0);
  CHECK(sum_powers_check(3, 2) == 2);
  CHECK(sum_powers_check(7, 6) == 6);
  CHECK(sum_powers_check(7, 3) == 0);
  CHECK(sum_powers_check(13, 12) == 12);
  CHECK(sum_powers_check(13, 4) == 0);
  CHECK(sum_powers_check(11, 30) == 10);
  CHECK(sum_powers_check(2, 5) == 1);

  // Formula across a range: p-1 when (p-1) | k, else 0.
  for (std::uint64_t p : primes_up_to(60)) {
    for (std::uint64_t k = 1; k <= 2 * p; ++k) {
      Int want = (k % (p - 1) == 0) ? Int(static_cast<unsigned long>(p - 1))
                                    : Int(0);
      CHECK(sum_powers_check(p, k) == want);
    }
  }

  CHECK_THROWS_AS(sum_powers_check(6, 2), DomainError);
  CHECK_THROWS_AS(sum_powers_check(5, 0), DomainError);
}
