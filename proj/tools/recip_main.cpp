// Command-line front end: every library operation plus the batch verification
// sweeps, with optional machine-readable output.
//
// Exit codes: 0 success / verified, 1 verification failure, 2 usage error
// (including malformed ring literals, reported with a character position),
// 3 refused by a resource guard.
//
// JSON mode (--json) prints one canonical object per result; every integer is
// serialized as a decimal string so arbitrary-precision values survive any
// consumer. CSV mode (--csv) applies to sweep reports only.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recip/charsum.hpp"
#include "recip/cubic.hpp"
#include "recip/eisenstein.hpp"
#include "recip/field.hpp"
#include "recip/gaussian.hpp"
#include "recip/ints.hpp"
#include "recip/parse.hpp"
#include "recip/sweeps.hpp"

using json = nlohmann::ordered_json;
using namespace recip;

namespace {

std::string dec(const Int& v) { return v.get_str(); }
std::string dec(std::uint64_t v) { return std::to_string(v); }
std::string dec(int v) { return std::to_string(v); }

Int parse_int_arg(const std::string& s, const char* what) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw DomainError("parse-error", std::string("position 1: expected an "
                                                 "integer for ") +
                                         what + ", got \"" + s + "\"");
  }
}

const char* ring_name(BaseRing r) {
  switch (r) {
    case BaseRing::Z:
      return "Z";
    case BaseRing::Zw:
      return "Z[w]";
    default:
      return "Z[i]";
  }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Global {
  bool json_mode = false;
  bool csv_mode = false;
  int jobs = 1;
  std::uint64_t seed = 1;
};

int print_sweep(const SweepReport& rep, const Global& g) {
  if (g.json_mode) {
    json j;
    j["law"] = sweep_law_name(rep.law);
    j["bound"] = dec(rep.bound);
    j["cases_checked"] = dec(rep.cases_checked);
    j["failures"] = rep.failures;
    j["elapsed_ms"] = dec(rep.elapsed_ms);
    emit(j);
  } else if (g.csv_mode) {
    std::cout << "law,bound,cases_checked,elapsed_ms,failure\n";
    std::string head = std::string(sweep_law_name(rep.law)) + "," +
                       dec(rep.bound) + "," + dec(rep.cases_checked) + "," +
                       dec(rep.elapsed_ms) + ",";
    if (rep.failures.empty()) {
      std::cout << head << "\n";
    } else {
      for (const std::string& f : rep.failures)
        std::cout << head << csv_quote(f) << "\n";
    }
  } else {
    std::cout << "law = " << sweep_law_name(rep.law) << "\n"
              << "bound = " << rep.bound << "\n"
              << "cases_checked = " << rep.cases_checked << "\n"
              << "failures = " << rep.failures.size() << "\n"
              << "elapsed_ms = " << rep.elapsed_ms << "\n";
    for (const std::string& f : rep.failures) std::cout << "failure: " << f << "\n";
  }
  return rep.failures.empty() ? 0 : 1;
}

void require_odd_prime_pair(std::uint64_t p, std::uint64_t q) {
  if (p == 2 || q == 2 || p == q || !is_prime_u64(p) || !is_prime_u64(q))
    throw DomainError("bad-pair", "expected two distinct odd primes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic in Z[w], Z[i], and finite fields: residue characters, "
      "Gauss/Jacobi sums, and machine verification of reciprocity laws"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may trail the subcommand arguments

  Global g;
  app.add_flag("--json", g.json_mode, "print one canonical JSON object per result");
  app.add_flag("--csv", g.csv_mode, "CSV output for sweep reports");
  app.add_option("--jobs", g.jobs, "worker threads for sweeps (content-neutral)")
      ->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "seed for randomized structural cases");

  int ret = 0;

  // ---- scalar number theory ----
  std::string leg_a, leg_p;
  auto* leg = app.add_subcommand("legendre", "Legendre symbol (a/p)");
  leg->add_option("a", leg_a)->required();
  leg->add_option("p", leg_p)->required();
  leg->callback([&] {
    Int a = parse_int_arg(leg_a, "a"), p = parse_int_arg(leg_p, "p");
    int v = legendre(a, p);
    if (g.json_mode)
      emit(json{{"a", dec(a)}, {"p", dec(p)}, {"legendre", dec(v)}});
    else
      std::cout << v << "\n";
  });

  std::uint64_t qr_p = 0, qr_q = 0;
  auto* qr = app.add_subcommand(
      "qr-check", "verify quadratic reciprocity for one prime pair");
  qr->add_option("p", qr_p)->required();
  qr->add_option("q", qr_q)->required();
  qr->callback([&] {
    require_odd_prime_pair(qr_p, qr_q);
    int pq = legendre_u64(qr_p % qr_q, qr_q);
    int qp = legendre_u64(qr_q % qr_p, qr_p);
    int predicted = ((qr_p - 1) / 2) * ((qr_q - 1) / 2) % 2 == 0 ? 1 : -1;
    bool ok = pq * qp == predicted;
    if (g.json_mode)
      emit(json{{"p", dec(qr_p)},
                {"q", dec(qr_q)},
                {"p_on_q", dec(pq)},
                {"q_on_p", dec(qp)},
                {"product", dec(pq * qp)},
                {"predicted", dec(predicted)},
                {"ok", ok}});
    else
      std::cout << "(p/q) = " << pq << "\n(q/p) = " << qp << "\n"
                << "product = " << pq * qp << "\npredicted = " << predicted
                << "\nok = " << (ok ? "true" : "false") << "\n";
    ret = ok ? 0 : 1;
  });

  std::uint64_t mob_n = 0;
  auto* mob = app.add_subcommand("mobius", "Moebius function mu(n)");
  mob->add_option("n", mob_n)->required();
  mob->callback([&] {
    int v = mobius(mob_n);
    if (g.json_mode)
      emit(json{{"n", dec(mob_n)}, {"mobius", dec(v)}});
    else
      std::cout << v << "\n";
  });

  // ---- finite fields ----
  std::uint64_t ci_p = 0, ci_n = 0;
  auto* ci = app.add_subcommand(
      "count-irreducibles", "number of monic irreducibles of degree n over F_p");
  ci->add_option("p", ci_p)->required();
  ci->add_option("n", ci_n)->required();
  ci->callback([&] {
    Int v = count_irreducibles(ci_p, ci_n);
    if (g.json_mode)
      emit(json{{"p", dec(ci_p)}, {"n", dec(ci_n)}, {"count", dec(v)}});
    else
      std::cout << v << "\n";
  });

  std::uint64_t fc_p = 0, fc_n = 0;
  auto* fc = app.add_subcommand(
      "field-census", "multiplicative order census of F_{p^n} (d -> count)");
  fc->add_option("p", fc_p)->required();
  fc->add_option("n", fc_n)->required();
  fc->callback([&] {
    FiniteField F = ext_make(fc_p, fc_n);
    auto census = order_census(F);
    if (g.json_mode) {
      json rows = json::array();
      for (const auto& [d, cnt] : census)
        rows.push_back(json{{"d", dec(d)}, {"count", dec(cnt)}});
      emit(json{{"p", dec(fc_p)}, {"n", dec(fc_n)}, {"order", dec(F.q)},
                {"census", rows}});
    } else {
      std::cout << "p = " << fc_p << "\nn = " << fc_n << "\norder = " << F.q
                << "\n";
      for (const auto& [d, cnt] : census)
        std::cout << "d=" << d << " count=" << cnt << "\n";
    }
  });

  std::uint64_t ha_p = 0, ha_q = 0;
  auto* ha = app.add_subcommand(
      "hausner", "tau = sum (t/p) z^t in F_{q^n}: square, Frobenius, and "
                 "reciprocity checks");
  ha->add_option("p", ha_p)->required();
  ha->add_option("q", ha_q)->required();
  ha->callback([&] {
    HausnerReport r = hausner_check(ha_p, ha_q);
    if (g.json_mode)
      emit(json{{"p", dec(r.p)},
                {"q", dec(r.q)},
                {"n", dec(r.n)},
                {"q_pow_n", dec(r.q_pow_n)},
                {"tau_sq_ok", r.tau_sq_ok},
                {"s1", dec(r.s1)},
                {"tau_q_ok", r.tau_q_ok},
                {"qr_consistent", r.qr_consistent}});
    else
      std::cout << "p = " << r.p << "\nq = " << r.q << "\nn = " << r.n
                << "\nq^n = " << r.q_pow_n << "\ntau_sq_ok = "
                << (r.tau_sq_ok ? "true" : "false") << "\ns1 = " << r.s1
                << "\ntau_q_ok = " << (r.tau_q_ok ? "true" : "false")
                << "\nqr_consistent = " << (r.qr_consistent ? "true" : "false")
                << "\n";
    ret = r.all_ok() ? 0 : 1;
  });

  // ---- Z[w] basics ----
  auto* eis = app.add_subcommand("eis", "Z[w] splitting, primary form, norms");
  eis->require_subcommand(1);

  std::string es_p;
  auto* es = eis->add_subcommand("split", "factor a rational prime in Z[w]");
  es->add_option("p", es_p)->required();
  es->callback([&] {
    Int p = parse_int_arg(es_p, "p");
    EisFactor f = eis_classify_prime(p);
    const char* cls = f.cls == EisClass::Split
                          ? "split"
                          : (f.cls == EisClass::Inert ? "inert" : "ramified");
    if (g.json_mode) {
      json j{{"p", dec(p)}, {"class", cls}, {"pi", eis_to_string(f.pi)}};
      if (f.bar) j["conj"] = eis_to_string(*f.bar);
      emit(j);
    } else {
      std::cout << "p = " << dec(p) << "\nclass = " << cls
                << "\npi = " << eis_to_string(f.pi) << "\n";
      if (f.bar) std::cout << "conj = " << eis_to_string(*f.bar) << "\n";
    }
  });

  std::string ep_x;
  auto* ep = eis->add_subcommand("primary", "primary associate of a+b*w");
  ep->add_option("x", ep_x)->required();
  ep->callback([&] {
    Eisenstein x = parse_eisenstein(ep_x);
    auto [unit, primary] = eis_primary_associate(x);
    if (g.json_mode)
      emit(json{{"input", eis_to_string(x)},
                {"unit", eis_to_string(unit)},
                {"primary", eis_to_string(primary)}});
    else
      std::cout << "unit = " << eis_to_string(unit)
                << "\nprimary = " << eis_to_string(primary) << "\n";
  });

  std::string en_x;
  auto* en = eis->add_subcommand("norm", "norm of a+b*w");
  en->add_option("x", en_x)->required();
  en->callback([&] {
    Eisenstein x = parse_eisenstein(en_x);
    Int v = eis_norm(x);
    if (g.json_mode)
      emit(json{{"input", eis_to_string(x)}, {"norm", dec(v)}});
    else
      std::cout << v << "\n";
  });

  // ---- cubic residue character ----
  std::string cc_pi, cc_alpha;
  auto* cc = app.add_subcommand("cubic-char",
                                "cubic residue character chi_pi(alpha)");
  cc->add_option("pi", cc_pi)->required();
  cc->add_option("alpha", cc_alpha)->required();
  cc->callback([&] {
    Eisenstein pi = parse_eisenstein(cc_pi);
    Eisenstein alpha = parse_eisenstein(cc_alpha);
    CubicValue v = cubic_char(cubic_ctx(pi), alpha);
    if (g.json_mode)
      emit(json{{"pi", eis_to_string(pi)},
                {"alpha", eis_to_string(alpha)},
                {"value", cubic_name(v)}});
    else
      std::cout << cubic_name(v) << "\n";
  });

  std::string sup_mode, sup_pi;
  auto* sup = app.add_subcommand(
      "supplement", "supplement values chi_pi(w) and chi_pi(1-w)");
  sup->add_option("which", sup_mode)
      ->required()
      ->check(CLI::IsMember({"omega", "one-minus-omega"}));
  sup->add_option("pi", sup_pi)->required();
  sup->callback([&] {
    Eisenstein pi = parse_eisenstein(sup_pi);
    CubicCharCtx ctx = cubic_ctx(pi);
    CubicValue v = sup_mode == "omega" ? supplement_omega(ctx)
                                       : supplement_one_minus_omega(ctx);
    if (g.json_mode)
      emit(json{{"which", sup_mode},
                {"pi", eis_to_string(pi)},
                {"value", cubic_name(v)}});
    else
      std::cout << cubic_name(v) << "\n";
  });

  std::uint64_t tc_p = 0;
  auto* tc = app.add_subcommand(
      "two-cubic", "is 2 a cube mod p?  Tests p = C^2 + 27 D^2 solvability");
  tc->add_option("p", tc_p)->required();
  tc->callback([&] {
    TwoCubicResult r = two_as_cubic_residue(tc_p);
    if (g.json_mode) {
      json j{{"p", dec(tc_p)}, {"solvable", r.solvable}};
      if (r.rep) {
        j["C"] = dec(r.rep->first);
        j["D"] = dec(r.rep->second);
      }
      emit(j);
    } else {
      std::cout << "solvable = " << (r.solvable ? "true" : "false") << "\n";
      if (r.rep)
        std::cout << "C = " << dec(r.rep->first) << "\nD = " << dec(r.rep->second)
                  << "\n";
    }
  });

  // ---- character sums ----
  std::uint64_t gs_p = 0, gs_k = 0;
  std::string gs_a{"1"};
  auto* gs = app.add_subcommand(
      "gauss-sum", "g_a(chi) for the order-k character mod p, exact");
  gs->add_option("p", gs_p)->required();
  gs->add_option("k", gs_k)->required();
  gs->add_option("--a", gs_a, "twist: g_a(chi) = sum chi(t) zeta_p^(a t)");
  gs->callback([&] {
    Int a = parse_int_arg(gs_a, "a");
    MultChar chi = char_make(gs_p, gs_k);
    CyclotomicElt v = gauss_sum(chi, a);
    if (g.json_mode)
      emit(json{{"p", dec(gs_p)},
                {"k", dec(gs_k)},
                {"a", dec(a)},
                {"ring", ring_name(v.ring)},
                {"value", cyclo_to_string(v)}});
    else
      std::cout << "ring = " << ring_name(v.ring)
                << "\nvalue = " << cyclo_to_string(v) << "\n";
  });

  std::uint64_t js_p = 0, js_k1 = 0, js_k2 = 0;
  auto* js = app.add_subcommand(
      "jacobi-sum", "J(chi, lam) for characters of orders k1, k2 mod p");
  js->add_option("p", js_p)->required();
  js->add_option("k1", js_k1)->required();
  js->add_option("k2", js_k2)->required();
  js->callback([&] {
    TaggedRingElt v =
        jacobi_sum(char_make(js_p, js_k1), char_make(js_p, js_k2));
    if (g.json_mode)
      emit(json{{"p", dec(js_p)},
                {"k1", dec(js_k1)},
                {"k2", dec(js_k2)},
                {"ring", ring_name(v.ring)},
                {"value", ring_to_string(v.ring, v.value)}});
    else
      std::cout << "ring = " << ring_name(v.ring)
                << "\nvalue = " << ring_to_string(v.ring, v.value) << "\n";
  });

  std::string id_mode;
  std::uint64_t id_p = 0, id_k = 0;
  auto* id = app.add_subcommand(
      "identity-check",
      "verify one exact identity: |g(chi)|^2 = p, the Gauss-Jacobi product "
      "relation, or g(chi)^3 = p J(chi,chi)");
  id->add_option("which", id_mode)
      ->required()
      ->check(CLI::IsMember({"magnitude", "jacobi-relation", "gauss-cube"}));
  id->add_option("p", id_p)->required();
  id->add_option("k", id_k, "character order (default: magnitude 2, "
                            "jacobi-relation 3; gauss-cube is order 3)");
  id->callback([&] {
    bool ok;
    std::uint64_t k = id_k;
    if (id_mode == "magnitude") {
      if (k == 0) k = 2;
      ok = gauss_magnitude_check(char_make(id_p, k));
    } else if (id_mode == "jacobi-relation") {
      if (k == 0) k = 3;
      MultChar chi = char_make(id_p, k);
      ok = gauss_jacobi_relation_check(chi, chi);
    } else {
      if (k == 0) k = 3;
      if (k != 3)
        throw DomainError("bad-order",
                          "the cube identity is specific to order 3");
      ok = cubic_gauss_cube_check(id_p);
    }
    if (g.json_mode)
      emit(json{{"which", id_mode}, {"p", dec(id_p)}, {"k", dec(k)}, {"ok", ok}});
    else
      std::cout << "ok = " << (ok ? "true" : "false") << "\n";
    ret = ok ? 0 : 1;
  });

  // ---- Z[i] biquadratic character ----
  std::string bc_pi, bc_alpha;
  auto* bc = app.add_subcommand(
      "biquad-char", "biquadratic residue character chi_pi(alpha) in Z[i]");
  bc->add_option("pi", bc_pi)->required();
  bc->add_option("alpha", bc_alpha)->required();
  bc->callback([&] {
    GaussianInt pi = parse_gaussian(bc_pi);
    GaussianInt alpha = parse_gaussian(bc_alpha);
    QuarticValue v = biquadratic_char(pi, alpha);
    if (g.json_mode)
      emit(json{{"pi", gauss_to_string(pi)},
                {"alpha", gauss_to_string(alpha)},
                {"value", quartic_name(v)}});
    else
      std::cout << quartic_name(v) << "\n";
  });

  // ---- verification sweeps ----
  std::uint64_t cv_bound = 0;
  auto* cv = app.add_subcommand(
      "cubic-verify",
      "cubic reciprocity + supplements over all primary prime pairs");
  cv->add_option("--max-norm", cv_bound, "norm bound")->required();
  cv->callback([&] { ret = print_sweep(sweep_cubic(cv_bound, g.jobs), g); });

  std::uint64_t bv_bound = 0;
  auto* bv = app.add_subcommand(
      "biquad-verify",
      "biquadratic reciprocity over all primary prime pairs in Z[i]");
  bv->add_option("--max-norm", bv_bound, "norm bound")->required();
  bv->callback(
      [&] { ret = print_sweep(sweep_biquadratic(bv_bound, g.jobs), g); });

  std::uint64_t qv_bound = 0;
  auto* qv = app.add_subcommand(
      "quad-verify", "quadratic reciprocity + supplements for primes <= bound");
  qv->add_option("--bound", qv_bound, "prime bound")->required();
  qv->callback([&] { ret = print_sweep(sweep_quadratic(qv_bound, g.jobs), g); });

  std::uint64_t tv_bound = 0;
  bool tv_reference = false;
  auto* tv = app.add_subcommand(
      "tau-verify",
      "tau checks for every odd prime pair with q^ord_p(q) <= bound");
  tv->add_option("--bound", tv_bound, "field size bound")->required();
  tv->add_flag("--reference", tv_reference,
               "use the literal term-by-term kernel everywhere");
  tv->callback([&] {
    ret = print_sweep(sweep_hausner(tv_bound, g.jobs, tv_reference), g);
  });

  std::uint64_t iv_bound = 0;
  auto* iv = app.add_subcommand(
      "identity-verify",
      "Gauss/Jacobi identity battery for all p <= bound, orders {2,3,4,6}");
  iv->add_option("--max-p", iv_bound, "prime bound")->required();
  iv->callback(
      [&] { ret = print_sweep(sweep_gauss_identities(iv_bound, g.jobs), g); });

  std::uint64_t sv_bound = 0;
  auto* sv = app.add_subcommand(
      "structure-verify",
      "division/norm/primary/residue-field structure of Z[w] and Z[i]");
  sv->add_option("--max-norm", sv_bound, "residue field size bound")->required();
  sv->callback([&] {
    ret = print_sweep(sweep_field_structure(sv_bound, g.seed, g.jobs), g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return ret;
}
