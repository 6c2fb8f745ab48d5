#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "recip/eisenstein.hpp"
#include "recip/gaussian.hpp"
#include "recip/ints.hpp"
#include "recip/parse.hpp"

using namespace recip;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

// Runs the installed binary with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RECIP_CLI_PATH) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int status = pclose(f);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string parse_err(const std::string& text, bool gaussian = false) {
  try {
    if (gaussian)
      parse_gaussian(text);
    else
      parse_eisenstein(text);
  } catch (const DomainError& e) {
    CHECK(e.code() == "parse-error");
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("ring literals print canonically") {
  CHECK(eis_to_string({Int(0), Int(0)}) == "0");
  CHECK(eis_to_string({Int(5), Int(0)}) == "5");
  CHECK(eis_to_string({Int(-5), Int(0)}) == "-5");
  CHECK(eis_to_string({Int(0), Int(1)}) == "w");
  CHECK(eis_to_string({Int(0), Int(-1)}) == "-w");
  CHECK(eis_to_string({Int(0), Int(4)}) == "4*w");
  CHECK(eis_to_string({Int(1), Int(1)}) == "1+w");
  CHECK(eis_to_string({Int(2), Int(3)}) == "2+3*w");
  CHECK(eis_to_string({Int(-1), Int(-3)}) == "-1-3*w");
  CHECK(eis_to_string({Int(1), Int(-1)}) == "1-w");
  CHECK(gauss_to_string({Int(0), Int(0)}) == "0");
  CHECK(gauss_to_string({Int(0), Int(1)}) == "i");
  CHECK(gauss_to_string({Int(3), Int(-1)}) == "3-i");
  CHECK(gauss_to_string({Int(-1), Int(2)}) == "-1+2*i");
}

TEST_CASE("printing then parsing reproduces the value") {
  for (long a = -9; a <= 9; ++a)
    for (long b = -9; b <= 9; ++b) {
      Eisenstein e{Int(a), Int(b)};
      Eisenstein e2 = parse_eisenstein(eis_to_string(e));
      CHECK(e2 == e);
      GaussianInt gi{Int(a), Int(b)};
      GaussianInt gi2 = parse_gaussian(gauss_to_string(gi));
      CHECK(gi2 == gi);
    }
  // arbitrary-precision coordinates survive the round trip
  Eisenstein big{Int("123456789012345678901234567890"),
                 Int("-987654321098765432109876543210")};
  CHECK(parse_eisenstein(eis_to_string(big)) == big);
}

TEST_CASE("parser accepts any signed sum of terms") {
  CHECK(parse_eisenstein("3+2*w") == Eisenstein{Int(3), Int(2)});
  CHECK(parse_eisenstein("2*w+3") == Eisenstein{Int(3), Int(2)});
  CHECK(parse_eisenstein("+3+2*w") == Eisenstein{Int(3), Int(2)});
  CHECK(parse_eisenstein("1+2+w+1*w+0") == Eisenstein{Int(3), Int(2)});
  CHECK(parse_eisenstein("w-w") == Eisenstein{Int(0), Int(0)});
  CHECK(parse_eisenstein("-w-5") == Eisenstein{Int(-5), Int(-1)});
  CHECK(parse_gaussian("-i+0*i") == GaussianInt{Int(0), Int(-1)});
  CHECK(parse_gaussian("10-3*i-7") == GaussianInt{Int(3), Int(-3)});
}

TEST_CASE("parse errors carry a character position") {
  CHECK(parse_err("bogus") ==
        "bad ring literal \"bogus\": unexpected character at position 1");
  CHECK(parse_err("1+2*q") ==
        "bad ring literal \"1+2*q\": expected 'w' after '*' at position 5");
  CHECK(parse_err("1+2*i") ==
        "bad ring literal \"1+2*i\": expected 'w' after '*' at position 5");
  CHECK(parse_err("1+2*w", true) ==
        "bad ring literal \"1+2*w\": expected 'i' after '*' at position 5");
  CHECK(parse_err("2w") ==
        "bad ring literal \"2w\": expected '+' or '-' at position 2");
  CHECK(parse_err("+") == "bad ring literal \"+\": dangling sign at position 2");
  CHECK(parse_err("1+") ==
        "bad ring literal \"1+\": dangling sign at position 3");
  CHECK(parse_err("w*2") ==
        "bad ring literal \"w*2\": expected '+' or '-' at position 2");
  CHECK(parse_err(" 1") ==
        "bad ring literal \" 1\": unexpected character at position 1");
  CHECK(parse_err("") == "empty ring literal");
}

TEST_CASE("cli: scalar queries print bare values") {
  CHECK(run_cli("legendre 0 7").out == "0\n");
  CHECK(run_cli("legendre 0 7").code == 0);
  CHECK(run_cli("legendre 3 11").out == "1\n");
  CHECK(run_cli("legendre 2 5").out == "-1\n");
  CHECK(run_cli("mobius 12").out == "0\n");
  CHECK(run_cli("mobius 30").out == "-1\n");
  CHECK(run_cli("eis norm 1-w").out == "3\n");
  CHECK(run_cli("count-irreducibles 2 3").out == "2\n");
  CHECK(run_cli("cubic-char 2+3*w 2").out == "w\n");
  CHECK(run_cli("supplement omega 2+3*w").out == "w^2\n");
  CHECK(run_cli("biquad-char -1+2*i 1+i").out == "-1\n");
}

TEST_CASE("cli: prime splitting as canonical json") {
  RunResult r = run_cli("eis split 7 --json");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"p\":\"7\",\"class\":\"split\",\"pi\":\"2+3*w\",\"conj\":\"-1-3*w\"}\n");

  // the printed literals parse back to conjugate factors of p
  json j = json::parse(run_cli("eis split 13 --json").out);
  Eisenstein pi = parse_eisenstein(j["pi"].get<std::string>());
  Eisenstein conj = parse_eisenstein(j["conj"].get<std::string>());
  CHECK(eis_mul(pi, conj) == Eisenstein{Int(13), Int(0)});
  CHECK(eis_is_primary(pi));
  CHECK(eis_is_primary(conj));

  json inert = json::parse(run_cli("eis split 5 --json").out);
  CHECK(inert["class"] == "inert");
  CHECK(inert["pi"] == "5");
  CHECK(!inert.contains("conj"));
  json ram = json::parse(run_cli("eis split 3 --json").out);
  CHECK(ram["class"] == "ramified");
  CHECK(ram["pi"] == "1-w");
}

TEST_CASE("cli: json echoes round-trip through the parsers") {
  json j = json::parse(run_cli("biquad-char -1+2*i 3 --json").out);
  CHECK(parse_gaussian(j["pi"].get<std::string>()) ==
        GaussianInt{Int(-1), Int(2)});
  CHECK(j["alpha"] == "3");
  json p = json::parse(run_cli("eis primary 1 --json").out);
  CHECK(p["primary"] == "-1");
  CHECK(parse_eisenstein(p["unit"].get<std::string>()) ==
        Eisenstein{Int(-1), Int(0)});
}

TEST_CASE("cli: structured reports") {
  json h = json::parse(run_cli("hausner 7 5 --json").out);
  CHECK(h["n"] == "6");
  CHECK(h["q_pow_n"] == "15625");
  CHECK(h["tau_sq_ok"] == true);
  CHECK(h["tau_q_ok"] == true);
  CHECK(h["qr_consistent"] == true);
  CHECK(run_cli("hausner 7 5").code == 0);

  json q = json::parse(run_cli("qr-check 13 17 --json").out);
  CHECK(q["product"] == q["predicted"]);
  CHECK(q["ok"] == true);

  json t = json::parse(run_cli("two-cubic 43 --json").out);
  CHECK(t["solvable"] == true);
  CHECK(t["C"] == "4");
  CHECK(t["D"] == "1");
  CHECK(!json::parse(run_cli("two-cubic 7 --json").out)["solvable"]);

  json gs = json::parse(run_cli("gauss-sum 5 4 --json").out);
  CHECK(gs["ring"] == "Z[i]");
  json js = json::parse(run_cli("jacobi-sum 7 3 3 --json").out);
  CHECK(js["ring"] == "Z[w]");
  CHECK(js["value"] == "-1-3*w");

  json fc = json::parse(run_cli("field-census 3 2 --json").out);
  CHECK(fc["order"] == "9");
  CHECK(fc["census"].size() == 4);
  CHECK(fc["census"][3]["d"] == "8");
  CHECK(fc["census"][3]["count"] == "4");
}

TEST_CASE("cli: verification sweeps succeed and report json") {
  RunResult r = run_cli("cubic-verify --max-norm 100 --json");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["law"] == "cubic");
  CHECK(j["bound"] == "100");
  CHECK(j["cases_checked"] == "289");
  CHECK(j["failures"].is_array());
  CHECK(j["failures"].empty());

  CHECK(run_cli("quad-verify --bound 100").code == 0);
  CHECK(run_cli("biquad-verify --max-norm 80 --json").code == 0);
  CHECK(run_cli("tau-verify --bound 500 --reference").code == 0);
  CHECK(run_cli("identity-verify --max-p 20 --json").code == 0);
  CHECK(run_cli("identity-check magnitude 13 4").code == 0);
  CHECK(run_cli("identity-check jacobi-relation 13").code == 0);
  CHECK(run_cli("identity-check gauss-cube 13").code == 0);
}

TEST_CASE("cli: --jobs changes timing only") {
  json a = json::parse(run_cli("cubic-verify --max-norm 150 --jobs 1 --json").out);
  json b = json::parse(run_cli("cubic-verify --max-norm 150 --jobs 3 --json").out);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}

TEST_CASE("cli: csv sweep reports") {
  RunResult r = run_cli("structure-verify --max-norm 20 --csv --seed 5");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("law,bound,cases_checked,elapsed_ms,failure\n", 0) == 0);
  CHECK(r.out.find("\nfield-structure,20,") != std::string::npos);
}

TEST_CASE("cli: exit codes distinguish usage, guard, and verification") {
  RunResult bad = run_cli("cubic-char 2+3*w bogus+w");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("position 1") != std::string::npos);

  RunResult deep = run_cli("cubic-char 2+3*w 1+2*q");
  CHECK(deep.code == 2);
  CHECK(deep.out.find("position 5") != std::string::npos);

  CHECK(run_cli("tau-verify --bound 1000001").code == 3);
  CHECK(run_cli("identity-check gauss-cube 5011").code == 3);  // cube guard

  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("legendre 4").code == 2);           // missing argument
  CHECK(run_cli("qr-check 9 11").code == 2);        // 9 is not prime
  CHECK(run_cli("eis primary 3").code == 2);        // 3 | N(3)
  CHECK(run_cli("identity-check gauss-cube 13 4").code == 2);
  CHECK(run_cli("supplement nonsense 2+3*w").code == 2);
  CHECK(run_cli("legendre 2 15").code == 2);        // composite modulus
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("cubic-verify --help").code == 0);
}
