#include "recip/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "recip/charsum.hpp"
#include "recip/cubic.hpp"
#include "recip/eisenstein.hpp"
#include "recip/field.hpp"
#include "recip/gaussian.hpp"
#include "recip/ints.hpp"
#include "recip/parse.hpp"

namespace recip {

const char* sweep_law_name(SweepLaw law) {
  switch (law) {
    case SweepLaw::Quadratic:
      return "quadratic";
    case SweepLaw::Cubic:
      return "cubic";
    case SweepLaw::Biquadratic:
      return "biquadratic";
    case SweepLaw::GaussIdentities:
      return "gauss-identities";
    default:
      return "field-structure";
  }
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ms_since(Clock::time_point t0) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
          .count());
}

// Evaluate cases 0..n-1 with eval(i) -> failure descriptor ("" = pass),
// in parallel when jobs > 1, preserving case order in the failure list.
template <typename Eval>
void run_indexed(std::uint64_t n, int jobs, std::vector<std::string>& failures,
                 Eval&& eval) {
  std::vector<std::string> slot(n);
  auto guarded = [&](std::uint64_t i) -> std::string {
    try {
      return eval(i);
    } catch (const std::exception& e) {
      return "case " + std::to_string(i) + " exception: " + e.what();
    }
  };
#ifdef _OPENMP
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      slot[static_cast<std::uint64_t>(i)] =
          guarded(static_cast<std::uint64_t>(i));
  } else
#endif
  {
    (void)jobs;
    for (std::uint64_t i = 0; i < n; ++i) slot[i] = guarded(i);
  }
  for (auto& s : slot)
    if (!s.empty()) failures.push_back(std::move(s));
}

int parity_sign(std::uint64_t halves) { return halves % 2 == 0 ? 1 : -1; }

// Deterministic per-case RNG, independent of scheduling.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t idx) {
  return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL ^
                         (idx * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL));
}

long rand_coord(std::mt19937_64& rng, long bound) {
  return static_cast<long>(rng() % (2 * static_cast<unsigned long>(bound) + 1)) -
         bound;
}

}  // namespace

// ---------------------------------------------------------------------------
// Quadratic: the symbol-level law plus both supplements.
// ---------------------------------------------------------------------------

SweepReport sweep_quadratic(std::uint64_t bound, int jobs) {
  auto t0 = Clock::now();
  SweepReport rep;
  rep.law = SweepLaw::Quadratic;
  rep.bound = bound;

  std::vector<std::uint64_t> ps;
  for (std::uint64_t p : primes_up_to(bound))
    if (p != 2) ps.push_back(p);

  struct Case {
    std::uint64_t p, q;  // q == 0: supplement case for p
  };
  std::vector<Case> cases;
  for (std::uint64_t p : ps) cases.push_back({p, 0});
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      cases.push_back({ps[i], ps[j]});
  rep.cases_checked = cases.size();

  run_indexed(cases.size(), jobs, rep.failures, [&](std::uint64_t idx) {
    const Case& c = cases[idx];
    std::uint64_t p = c.p, q = c.q;
    if (q == 0) {
      int want_m1 = parity_sign((p - 1) / 2);
      int want_2 = (p % 8 == 1 || p % 8 == 7) ? 1 : -1;
      if (legendre_u64(p - 1, p) == want_m1 && legendre_u64(2, p) == want_2)
        return std::string();
      return "quadratic-supplement p=" + std::to_string(p);
    }
    int lhs = legendre_u64(p % q, q) * legendre_u64(q % p, p);
    int rhs = parity_sign(((p - 1) / 2) * ((q - 1) / 2));
    if (lhs == rhs) return std::string();
    return "quadratic-reciprocity p=" + std::to_string(p) +
           " q=" + std::to_string(q) + " product=" + std::to_string(lhs) +
           " sign=" + std::to_string(rhs);
  });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Hausner: tau = sum_t (t/p) z^t inside F_{q^n}, n = ord_p(q), for every
// pair with q^n <= bound.
// ---------------------------------------------------------------------------

namespace {

struct HausnerCase {
  std::uint64_t p, q, n;
};

std::vector<HausnerCase> hausner_cases(std::uint64_t bound) {
  std::vector<HausnerCase> cases;
  for (std::uint64_t q : primes_up_to(bound)) {
    if (q == 2) continue;
    std::uint64_t qm = q;
    for (std::uint64_t m = 1; qm <= bound; ++m) {
      for (const auto& [p, e] : factorize_u64(qm - 1)) {
        (void)e;
        if (p == 2) continue;
        if (m > 1) {
          bool minimal = true;
          for (std::uint64_t d : divisors_u64(m))
            if (d < m && powmod_u64(q % p, d, p) == 1) {
              minimal = false;
              break;
            }
          if (!minimal) continue;
        }
        cases.push_back({p, q, m});
      }
      if (qm > bound / q) break;
      qm *= q;
    }
  }
  std::sort(cases.begin(), cases.end(), [](const HausnerCase& a, const HausnerCase& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  });
  return cases;
}

std::string hausner_descriptor(const HausnerCase& c, bool square_ok,
                               bool frobenius_ok, bool consistent) {
  std::ostringstream os;
  os << "hausner p=" << c.p << " q=" << c.q << " n=" << c.n
     << " square=" << (square_ok ? "ok" : "FAIL")
     << " frobenius=" << (frobenius_ok ? "ok" : "FAIL")
     << " consistency=" << (consistent ? "ok" : "FAIL");
  return os.str();
}

// Prime-field fast path (n == 1, i.e. q == 1 mod p): raw 64-bit arithmetic,
// tau accumulated through consecutive squares:
//   tau = sum_{t} (t/p) z^t = sum_{s in F_p} z^{s^2} = 1 + 2 sum_{s=1}^{(p-1)/2} z^{s^2}.
std::string hausner_eval_fast_prime(const HausnerCase& c) {
  std::uint64_t p = c.p, q = c.q;
  std::uint64_t lam = 1;
  for (std::uint64_t x = 2; lam == 1; ++x)
    lam = powmod_u64(x % q, (q - 1) / p, q);
  std::uint64_t lam2 = mulmod_u64(lam, lam, q);
  std::uint64_t acc = 0, cur = lam, odd = lam;
  for (std::uint64_t s = 1, half = (p - 1) / 2; s <= half; ++s) {
    acc += cur;
    if (acc >= q) acc -= q;
    odd = mulmod_u64(odd, lam2, q);
    cur = mulmod_u64(cur, odd, q);
  }
  std::uint64_t tau = (1 + 2 * acc) % q;
  std::uint64_t pstar =
      (p - 1) / 2 % 2 == 0 ? p % q : (q - p % q) % q;
  bool square_ok = mulmod_u64(tau, tau, q) == pstar;
  int s1 = 0;
  if (tau != 0) {
    std::uint64_t tq = powmod_u64(tau, q, q);
    if (tq == tau)
      s1 = 1;
    else if (tq == q - tau)
      s1 = -1;
  }
  bool frobenius_ok = s1 != 0 && s1 == legendre_u64(q % p, p);
  Int p_signed = (p - 1) / 2 % 2 == 0 ? Int(static_cast<unsigned long>(p))
                                      : Int(-static_cast<long>(p));
  bool consistent = s1 != 0 && s1 == legendre(p_signed, Int(static_cast<unsigned long>(q)));
  if (square_ok && frobenius_ok && consistent) return {};
  return hausner_descriptor(c, square_ok, frobenius_ok, consistent);
}

// Reference path: the field-module checker, which forms tau literally as
// sum_t (t/p) z^t with a per-term symbol evaluation.
std::string hausner_eval_reference(const HausnerCase& c) {
  HausnerReport r = hausner_check(c.p, c.q);
  if (r.tau_sq_ok && r.tau_q_ok && r.qr_consistent) return {};
  return hausner_descriptor(c, r.tau_sq_ok, r.tau_q_ok, r.qr_consistent);
}

}  // namespace

SweepReport sweep_hausner(std::uint64_t bound, int jobs, bool reference_kernel) {
  if (bound > kFieldEnumGuard)
    throw ResourceError("enumeration-guard",
                        "bound exceeds the field enumeration guard");
  auto t0 = Clock::now();
  SweepReport rep;
  rep.law = SweepLaw::Quadratic;
  rep.bound = bound;
  std::vector<HausnerCase> cases = hausner_cases(bound);
  rep.cases_checked = cases.size();
  run_indexed(cases.size(), jobs, rep.failures, [&](std::uint64_t idx) {
    const HausnerCase& c = cases[idx];
    if (!reference_kernel && c.n == 1) return hausner_eval_fast_prime(c);
    return hausner_eval_reference(c);
  });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Cubic: reciprocity over all primary prime pairs of distinct norms, and the
// two supplements against direct evaluation, for split norms <= max_norm and
// inert squares <= max_norm.
// ---------------------------------------------------------------------------

SweepReport sweep_cubic(std::uint64_t max_norm, int jobs) {
  auto t0 = Clock::now();
  SweepReport rep;
  rep.law = SweepLaw::Cubic;
  rep.bound = max_norm;

  std::vector<Eisenstein> prims;
  for (std::uint64_t p : primes_up_to(max_norm)) {
    if (p % 3 != 1) continue;
    EisFactor f = eis_classify_prime(Int(p));
    prims.push_back(f.pi);
    prims.push_back(*f.bar);
  }
  for (std::uint64_t q : primes_up_to(max_norm)) {
    if (q % 3 == 2 && q * q <= max_norm)
      prims.push_back(Eisenstein{Int(q), Int(0)});
  }
  std::sort(prims.begin(), prims.end(),
            [](const Eisenstein& x, const Eisenstein& y) {
              Int nx = eis_norm(x), ny = eis_norm(y);
              if (nx != ny) return nx < ny;
              if (x.a != y.a) return x.a < y.a;
              return x.b < y.b;
            });
  std::vector<CubicCharCtx> ctxs;
  ctxs.reserve(prims.size());
  for (const Eisenstein& pi : prims) ctxs.push_back(cubic_ctx(pi));

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < prims.size(); ++i)
    for (std::uint32_t j = i + 1; j < prims.size(); ++j)
      if (ctxs[i].norm != ctxs[j].norm) pairs.emplace_back(i, j);

  std::uint64_t nsup = prims.size();
  rep.cases_checked = nsup + pairs.size();
  run_indexed(rep.cases_checked, jobs, rep.failures, [&](std::uint64_t idx) {
    if (idx < nsup) {
      const CubicCharCtx& ctx = ctxs[idx];
      CubicValue w_direct = cubic_char(ctx, Eisenstein{Int(0), Int(1)});
      CubicValue lw_direct = cubic_char(ctx, Eisenstein{Int(1), Int(-1)});
      if (supplement_omega(ctx) == w_direct &&
          supplement_one_minus_omega(ctx) == lw_direct)
        return std::string();
      return "cubic-supplement pi=" + eis_to_string(ctx.pi);
    }
    auto [i, j] = pairs[idx - nsup];
    CubicValue lhs = cubic_char(ctxs[i], prims[j]);
    CubicValue rhs = cubic_char(ctxs[j], prims[i]);
    if (lhs == rhs) return std::string();
    return "cubic-reciprocity pi1=" + eis_to_string(prims[i]) +
           " pi2=" + eis_to_string(prims[j]) +
           " chi1(pi2)=" + cubic_name(lhs) + " chi2(pi1)=" + cubic_name(rhs);
  });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Biquadratic: reciprocity over all primary prime pairs of distinct norms in
// Z[i], split norms <= max_norm, inert squares <= max_norm.
// ---------------------------------------------------------------------------

SweepReport sweep_biquadratic(std::uint64_t max_norm, int jobs) {
  auto t0 = Clock::now();
  SweepReport rep;
  rep.law = SweepLaw::Biquadratic;
  rep.bound = max_norm;

  std::vector<GaussianInt> prims;
  for (std::uint64_t p : primes_up_to(max_norm)) {
    if (p % 4 == 1) {
      GaussFactor f = classify_gaussian_prime(Int(p));
      prims.push_back(f.pi);
      prims.push_back(*f.bar);
    } else if (p % 4 == 3 && p * p <= max_norm) {
      prims.push_back(classify_gaussian_prime(Int(p)).pi);  // -p, primary
    }
  }
  std::sort(prims.begin(), prims.end(),
            [](const GaussianInt& x, const GaussianInt& y) {
              Int nx = gauss_norm(x), ny = gauss_norm(y);
              if (nx != ny) return nx < ny;
              if (x.a != y.a) return x.a < y.a;
              return x.b < y.b;
            });
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < prims.size(); ++i)
    for (std::uint32_t j = i + 1; j < prims.size(); ++j)
      if (gauss_norm(prims[i]) != gauss_norm(prims[j])) pairs.emplace_back(i, j);
  rep.cases_checked = pairs.size();

  run_indexed(pairs.size(), jobs, rep.failures, [&](std::uint64_t idx) {
    auto [i, j] = pairs[idx];
    if (check_biquadratic_reciprocity(prims[i], prims[j])) return std::string();
    return "biquadratic-reciprocity pi=" + gauss_to_string(prims[i]) +
           " lambda=" + gauss_to_string(prims[j]) +
           " chi_pi(lambda)=" + quartic_name(biquadratic_char(prims[i], prims[j])) +
           " chi_lambda(pi)=" + quartic_name(biquadratic_char(prims[j], prims[i]));
  });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Gauss/Jacobi identities over F_p, exact in the cyclotomic ring.
// ---------------------------------------------------------------------------

namespace {

struct GaussIdCase {
  std::uint64_t p;
  int kind;  // 0 = special-value table, 1 = product relation, 2 = power formula
  std::uint64_t k1, k2;
};

int char_sign_at_minus_one(const MultChar& chi, std::uint64_t p) {
  auto v = char_eval(chi, Int(static_cast<unsigned long>(p - 1)));
  return (v && v->j != 0) ? -1 : 1;
}

std::string eval_gauss_table(std::uint64_t p, std::uint64_t k) {
  MultChar chi = char_make(p, k);
  MultChar eps = char_make(p, 1);
  MultChar chibar = char_pow(chi, k - 1);
  int sign = char_sign_at_minus_one(chi, p);
  Int P(static_cast<unsigned long>(p));

  bool ok = jacobi_sum(eps, eps).value == RingElt{P, Int(0)} &&
            jacobi_sum(eps, chi).value == RingElt{Int(0), Int(0)} &&
            jacobi_sum(chi, eps).value == RingElt{Int(0), Int(0)} &&
            jacobi_sum(chi, chibar).value == RingElt{Int(-sign), Int(0)} &&
            gauss_magnitude_check(chi);
  if (ok) {
    BaseRing r = char_ring(chi);
    CyclotomicElt lhs = cyclo_mul(gauss_sum(chi), gauss_sum(chibar));
    ok = lhs == cyclo_const(p, r, RingElt{Int(sign) * P, Int(0)});
  }
  if (ok) return {};
  return "gauss-table p=" + std::to_string(p) + " k=" + std::to_string(k);
}

}  // namespace

SweepReport sweep_gauss_identities(std::uint64_t max_p, int jobs) {
  auto t0 = Clock::now();
  SweepReport rep;
  rep.law = SweepLaw::GaussIdentities;
  rep.bound = max_p;

  auto ring_of = [](std::uint64_t k) { return ring_for_order(k); };
  std::vector<GaussIdCase> cases;
  for (std::uint64_t p : primes_up_to(max_p)) {
    if (p == 2) continue;
    std::vector<std::uint64_t> ks;
    for (std::uint64_t k : {2, 3, 4, 6})
      if ((p - 1) % k == 0) ks.push_back(k);
    for (std::uint64_t k : ks) {
      cases.push_back({p, 0, k, 0});
      if (k >= 3) cases.push_back({p, 2, k, 0});
    }
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i; j < ks.size(); ++j) {
        std::uint64_t k1 = ks[i], k2 = ks[j];
        if (k1 == 2 && k2 == 2) continue;  // product character trivial
        BaseRing r1 = ring_of(k1), r2 = ring_of(k2);
        if ((r1 == BaseRing::Zw && r2 == BaseRing::Zi) ||
            (r1 == BaseRing::Zi && r2 == BaseRing::Zw))
          continue;  // twelfth roots of unity are out of scope
        cases.push_back({p, 1, k1, k2});
      }
  }
  rep.cases_checked = cases.size();

  run_indexed(cases.size(), jobs, rep.failures, [&](std::uint64_t idx) {
    const GaussIdCase& c = cases[idx];
    if (c.kind == 0) return eval_gauss_table(c.p, c.k1);
    if (c.kind == 1) {
      MultChar chi = char_make(c.p, c.k1);
      MultChar lam = char_make(c.p, c.k2);
      if (gauss_jacobi_relation_check(chi, lam)) return std::string();
      return "gauss-jacobi-relation p=" + std::to_string(c.p) +
             " k1=" + std::to_string(c.k1) + " k2=" + std::to_string(c.k2);
    }
    if (gauss_power_formula_check(char_make(c.p, c.k1))) return std::string();
    return "gauss-power p=" + std::to_string(c.p) + " k=" + std::to_string(c.k1);
  });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Structural ring properties of Z[w] and Z[i].
// ---------------------------------------------------------------------------

namespace {

constexpr int kRandomTrialCases = 64;
constexpr int kTrialsPerCase = 32;
constexpr long kRandomCoordBound = 1000000000L;

std::string eval_eis_division_box() {
  for (long xa = -5; xa <= 5; ++xa)
    for (long xb = -5; xb <= 5; ++xb)
      for (long ya = -5; ya <= 5; ++ya)
        for (long yb = -5; yb <= 5; ++yb) {
          if (ya == 0 && yb == 0) continue;
          Eisenstein x{Int(xa), Int(xb)}, y{Int(ya), Int(yb)};
          EisDivMod d = eis_divmod(x, y);
          if (!(eis_add(eis_mul(d.q, y), d.r) == x) ||
              !(4 * eis_norm(d.r) <= 3 * eis_norm(y)))
            return "eis-division x=" + eis_to_string(x) + " y=" + eis_to_string(y);
        }
  return {};
}

std::string eval_gauss_division_box() {
  for (long xa = -5; xa <= 5; ++xa)
    for (long xb = -5; xb <= 5; ++xb)
      for (long ya = -5; ya <= 5; ++ya)
        for (long yb = -5; yb <= 5; ++yb) {
          if (ya == 0 && yb == 0) continue;
          GaussianInt x{Int(xa), Int(xb)}, y{Int(ya), Int(yb)};
          GaussDivMod d = gauss_divmod(x, y);
          if (!(gauss_add(gauss_mul(d.q, y), d.r) == x) ||
              !(2 * gauss_norm(d.r) <= gauss_norm(y)))
            return "gauss-division x=" + gauss_to_string(x) +
                   " y=" + gauss_to_string(y);
        }
  return {};
}

std::string eval_eis_random(std::mt19937_64& rng) {
  for (int t = 0; t < kTrialsPerCase; ++t) {
    Eisenstein x{Int(rand_coord(rng, kRandomCoordBound)),
                 Int(rand_coord(rng, kRandomCoordBound))};
    Eisenstein y{Int(rand_coord(rng, kRandomCoordBound)),
                 Int(rand_coord(rng, kRandomCoordBound))};
    if (!(eis_norm(eis_mul(x, y)) == eis_norm(x) * eis_norm(y)))
      return "eis-norm-mult x=" + eis_to_string(x) + " y=" + eis_to_string(y);
    if (!eis_is_zero(y)) {
      EisDivMod d = eis_divmod(x, y);
      if (!(eis_add(eis_mul(d.q, y), d.r) == x) ||
          !(4 * eis_norm(d.r) <= 3 * eis_norm(y)))
        return "eis-division x=" + eis_to_string(x) + " y=" + eis_to_string(y);
    }
    if (!eis_is_zero(x)) {
      int primaries = 0;
      for (const Eisenstein& u : eis_units())
        if (eis_is_primary(eis_mul(u, x))) ++primaries;
      int want = mpz_fdiv_ui(eis_norm(x).get_mpz_t(), 3) == 0 ? 0 : 1;
      if (primaries != want)
        return "eis-primary-count x=" + eis_to_string(x) +
               " count=" + std::to_string(primaries);
      if (want == 1 && !eis_is_primary(eis_primary_associate(x).second))
        return "eis-primary-associate x=" + eis_to_string(x);
    }
  }
  return {};
}

std::string eval_gauss_random(std::mt19937_64& rng) {
  for (int t = 0; t < kTrialsPerCase; ++t) {
    GaussianInt x{Int(rand_coord(rng, kRandomCoordBound)),
                  Int(rand_coord(rng, kRandomCoordBound))};
    GaussianInt y{Int(rand_coord(rng, kRandomCoordBound)),
                  Int(rand_coord(rng, kRandomCoordBound))};
    if (!(gauss_norm(gauss_mul(x, y)) == gauss_norm(x) * gauss_norm(y)))
      return "gauss-norm-mult x=" + gauss_to_string(x) + " y=" + gauss_to_string(y);
    if (!gauss_is_zero(y)) {
      GaussDivMod d = gauss_divmod(x, y);
      if (!(gauss_add(gauss_mul(d.q, y), d.r) == x) ||
          !(2 * gauss_norm(d.r) <= gauss_norm(y)))
        return "gauss-division x=" + gauss_to_string(x) +
               " y=" + gauss_to_string(y);
    }
    if (!gauss_is_zero(x)) {
      int primaries = 0;
      for (const GaussianInt& u : gauss_units())
        if (gauss_is_primary(gauss_mul(u, x))) ++primaries;
      int want = mpz_even_p(gauss_norm(x).get_mpz_t()) ? 0 : 1;
      if (primaries != want)
        return "gauss-primary-count x=" + gauss_to_string(x) +
               " count=" + std::to_string(primaries);
      if (want == 1 && !gauss_is_primary(gauss_primary_associate(x).second))
        return "gauss-primary-associate x=" + gauss_to_string(x);
    }
  }
  return {};
}

std::string eval_eis_primary_box() {
  for (long a = -7; a <= 7; ++a)
    for (long b = -7; b <= 7; ++b) {
      if (a == 0 && b == 0) continue;
      Eisenstein x{Int(a), Int(b)};
      int primaries = 0;
      for (const Eisenstein& u : eis_units())
        if (eis_is_primary(eis_mul(u, x))) ++primaries;
      int want = mpz_fdiv_ui(eis_norm(x).get_mpz_t(), 3) == 0 ? 0 : 1;
      if (primaries != want)
        return "eis-primary-count x=" + eis_to_string(x) +
               " count=" + std::to_string(primaries);
    }
  return {};
}

std::string eval_gauss_primary_box() {
  for (long a = -7; a <= 7; ++a)
    for (long b = -7; b <= 7; ++b) {
      if (a == 0 && b == 0) continue;
      GaussianInt x{Int(a), Int(b)};
      int primaries = 0;
      for (const GaussianInt& u : gauss_units())
        if (gauss_is_primary(gauss_mul(u, x))) ++primaries;
      int want = mpz_even_p(gauss_norm(x).get_mpz_t()) ? 0 : 1;
      if (primaries != want)
        return "gauss-primary-count x=" + gauss_to_string(x) +
               " count=" + std::to_string(primaries);
    }
  return {};
}

// Residue-field cardinality in Z[w]: the canonical reduction takes exactly
// N(pi) distinct values, with uniform fiber sizes over a covering domain, and
// matches divisibility of differences.
std::string eval_eis_residue(const Eisenstein& pi, std::mt19937_64& rng) {
  Int norm = eis_norm(pi);
  long n = norm.get_si();
  bool split = is_prime(norm) && n != 3;
  long arange, brange;
  if (split) {
    arange = n;
    brange = 3;
  } else if (n == 3) {
    arange = brange = 3;
  } else {
    Int qr;
    mpz_sqrt(qr.get_mpz_t(), norm.get_mpz_t());
    arange = brange = qr.get_si();
  }
  std::map<std::pair<long, long>, long> classes;
  for (long a = 0; a < arange; ++a)
    for (long b = 0; b < brange; ++b) {
      Eisenstein r = eis_residue_reduce(Eisenstein{Int(a), Int(b)}, pi);
      ++classes[{r.a.get_si(), r.b.get_si()}];
    }
  if (static_cast<long>(classes.size()) != n)
    return "eis-residue-count pi=" + eis_to_string(pi) +
           " distinct=" + std::to_string(classes.size());
  long fiber = (arange * brange) / n;
  for (const auto& [key, count] : classes)
    if (count != fiber)
      return "eis-residue-fiber pi=" + eis_to_string(pi);
  for (int t = 0; t < 60; ++t) {
    Eisenstein x{Int(rand_coord(rng, 30)), Int(rand_coord(rng, 30))};
    Eisenstein y{Int(rand_coord(rng, 30)), Int(rand_coord(rng, 30))};
    bool same = eis_residue_reduce(x, pi) == eis_residue_reduce(y, pi);
    if (same != eis_divides(pi, eis_sub(x, y)))
      return "eis-residue-faithful pi=" + eis_to_string(pi) +
             " x=" + eis_to_string(x) + " y=" + eis_to_string(y);
  }
  return {};
}

// Residue key in Z[i], mirroring the concrete residue-field realizations:
// split pi = c+di: a+bi |-> (a + b * (-c/d)) mod p; inert: coordinates mod q;
// ramified (1+i): (a+b) mod 2.
std::pair<long, long> gauss_residue_key(const GaussianInt& x, const GaussianInt& pi,
                                        long n, long iimg) {
  if (n == 2) {
    long v = mpz_fdiv_ui(Int(x.a + x.b).get_mpz_t(), 2);
    return {v, 0};
  }
  if (iimg >= 0) {  // split
    long v = mpz_fdiv_ui(Int(x.a + x.b * iimg).get_mpz_t(), static_cast<unsigned long>(n));
    return {v, 0};
  }
  long q = pi.a < 0 ? -pi.a.get_si() : pi.a.get_si();
  return {static_cast<long>(mpz_fdiv_ui(x.a.get_mpz_t(), q)),
          static_cast<long>(mpz_fdiv_ui(x.b.get_mpz_t(), q))};
}

std::string eval_gauss_residue(const GaussianInt& pi, std::mt19937_64& rng) {
  Int norm = gauss_norm(pi);
  long n = norm.get_si();
  bool split = is_prime(norm) && n != 2;
  long iimg = -1;
  long arange, brange;
  if (n == 2) {
    arange = brange = 2;
  } else if (split) {
    Int binv;
    mpz_invert(binv.get_mpz_t(), Int(pi.b % norm + norm).get_mpz_t(), norm.get_mpz_t());
    Int img = (-pi.a * binv) % norm;
    if (img < 0) img += norm;
    iimg = img.get_si();
    arange = n;
    brange = 3;
  } else {
    long q = pi.a < 0 ? -pi.a.get_si() : pi.a.get_si();
    arange = brange = q;
  }
  std::map<std::pair<long, long>, long> classes;
  for (long a = 0; a < arange; ++a)
    for (long b = 0; b < brange; ++b)
      ++classes[gauss_residue_key(GaussianInt{Int(a), Int(b)}, pi, n, iimg)];
  if (static_cast<long>(classes.size()) != n)
    return "gauss-residue-count pi=" + gauss_to_string(pi) +
           " distinct=" + std::to_string(classes.size());
  long fiber = (arange * brange) / n;
  for (const auto& [key, count] : classes)
    if (count != fiber)
      return "gauss-residue-fiber pi=" + gauss_to_string(pi);
  for (int t = 0; t < 60; ++t) {
    GaussianInt x{Int(rand_coord(rng, 30)), Int(rand_coord(rng, 30))};
    GaussianInt y{Int(rand_coord(rng, 30)), Int(rand_coord(rng, 30))};
    bool same = gauss_residue_key(x, pi, n, iimg) == gauss_residue_key(y, pi, n, iimg);
    if (same != gauss_divides(pi, gauss_sub(x, y)))
      return "gauss-residue-faithful pi=" + gauss_to_string(pi) +
             " x=" + gauss_to_string(x) + " y=" + gauss_to_string(y);
  }
  return {};
}

}  // namespace

SweepReport sweep_field_structure(std::uint64_t norm_bound, std::uint64_t seed,
                                  int jobs) {
  auto t0 = Clock::now();
  SweepReport rep;
  rep.law = SweepLaw::FieldStructure;
  rep.bound = norm_bound;

  // Residue-field moduli for both rings, norms <= norm_bound.
  std::vector<Eisenstein> eis_pis;
  std::vector<GaussianInt> gauss_pis;
  for (std::uint64_t p : primes_up_to(norm_bound)) {
    if (p == 3)
      eis_pis.push_back(eis_classify_prime(Int(p)).pi);
    else if (p % 3 == 1)
      eis_pis.push_back(eis_classify_prime(Int(p)).pi);
    else if (p * p <= norm_bound)
      eis_pis.push_back(eis_classify_prime(Int(p)).pi);
    if (p == 2)
      gauss_pis.push_back(classify_gaussian_prime(Int(p)).pi);
    else if (p % 4 == 1)
      gauss_pis.push_back(classify_gaussian_prime(Int(p)).pi);
    else if (p * p <= norm_bound)
      gauss_pis.push_back(classify_gaussian_prime(Int(p)).pi);
  }

  enum CaseKind : int {
    EisBox,
    GaussBox,
    EisPrimaryBox,
    GaussPrimaryBox,
    EisRandom,
    GaussRandom,
    EisResidue,
    GaussResidue
  };
  struct Case {
    int kind;
    std::size_t arg;
  };
  std::vector<Case> cases = {{EisBox, 0}, {GaussBox, 0}, {EisPrimaryBox, 0}, {GaussPrimaryBox, 0}};
  for (int i = 0; i < kRandomTrialCases; ++i) cases.push_back({EisRandom, static_cast<std::size_t>(i)});
  for (int i = 0; i < kRandomTrialCases; ++i) cases.push_back({GaussRandom, static_cast<std::size_t>(i)});
  for (std::size_t i = 0; i < eis_pis.size(); ++i) cases.push_back({EisResidue, i});
  for (std::size_t i = 0; i < gauss_pis.size(); ++i) cases.push_back({GaussResidue, i});
  rep.cases_checked = cases.size();

  run_indexed(cases.size(), jobs, rep.failures, [&](std::uint64_t idx) {
    const Case& c = cases[idx];
    std::mt19937_64 rng = case_rng(seed, idx);
    switch (c.kind) {
      case EisBox:
        return eval_eis_division_box();
      case GaussBox:
        return eval_gauss_division_box();
      case EisPrimaryBox:
        return eval_eis_primary_box();
      case GaussPrimaryBox:
        return eval_gauss_primary_box();
      case EisRandom:
        return eval_eis_random(rng);
      case GaussRandom:
        return eval_gauss_random(rng);
      case EisResidue:
        return eval_eis_residue(eis_pis[c.arg], rng);
      default:
        return eval_gauss_residue(gauss_pis[c.arg], rng);
    }
  });
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace recip
