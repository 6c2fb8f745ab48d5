// Benchmark harness comparing the serial and OpenMP sweep paths, and the
// consecutive-squares tau kernel against the literal reference sum.  Every
// timed pair is also checked for identical report content, so this doubles
// as a determinism smoke test at larger bounds than the unit tests use.
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "recip/sweeps.hpp"

using recip::SweepReport;

namespace {

bool same_content(const SweepReport& x, const SweepReport& y) {
  return x.law == y.law && x.bound == y.bound &&
         x.cases_checked == y.cases_checked && x.failures == y.failures;
}

struct Row {
  std::string name;
  std::uint64_t bound;
  std::uint64_t cases;
  std::uint64_t base_ms;
  std::uint64_t cmp_ms;
  const char* cmp_label;
  bool content_equal;
  std::uint64_t failures;
};

Row run_pair(const std::string& name, const char* cmp_label,
             const std::function<SweepReport()>& base,
             const std::function<SweepReport()>& cmp) {
  SweepReport rb = base();
  SweepReport rc = cmp();
  return Row{name,        rb.bound,        rb.cases_checked,
             rb.elapsed_ms, rc.elapsed_ms, cmp_label,
             same_content(rb, rc),          rb.failures.size()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sweep benchmarks: serial vs OpenMP, fast vs reference kernels"};
  int jobs = 2;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif
  std::uint64_t quadratic = 2000, hausner = 200000, reference = 20000;
  std::uint64_t cubic = 3000, biquad = 3000, gauss = 50, structure = 200;
  std::uint64_t seed = 1;
  std::string only;
  app.add_option("--jobs", jobs, "worker threads for the parallel runs");
  app.add_option("--quadratic", quadratic, "bound for the quadratic sweep");
  app.add_option("--hausner", hausner, "field-size bound for the tau sweep");
  app.add_option("--reference", reference,
                 "bound for the fast-vs-reference tau comparison");
  app.add_option("--cubic", cubic, "norm bound for the cubic sweep");
  app.add_option("--biquad", biquad, "norm bound for the biquadratic sweep");
  app.add_option("--gauss", gauss, "prime bound for the identity sweep");
  app.add_option("--structure", structure, "norm bound for the ring sweep");
  app.add_option("--seed", seed, "seed for the randomized structural cases");
  app.add_option("--only", only,
                 "run a single law: quadratic|hausner|cubic|biquad|gauss|structure");
  CLI11_PARSE(app, argc, argv);

  auto want = [&](const char* n) { return only.empty() || only == n; };
  std::vector<Row> rows;

  if (want("quadratic"))
    rows.push_back(run_pair(
        "quadratic", "omp",
        [&] { return recip::sweep_quadratic(quadratic, 1); },
        [&] { return recip::sweep_quadratic(quadratic, jobs); }));
  if (want("hausner")) {
    rows.push_back(run_pair(
        "hausner", "omp",
        [&] { return recip::sweep_hausner(hausner, 1); },
        [&] { return recip::sweep_hausner(hausner, jobs); }));
    rows.push_back(run_pair(
        "hausner-kernel", "reference",
        [&] { return recip::sweep_hausner(reference, 1, false); },
        [&] { return recip::sweep_hausner(reference, 1, true); }));
  }
  if (want("cubic"))
    rows.push_back(run_pair(
        "cubic", "omp", [&] { return recip::sweep_cubic(cubic, 1); },
        [&] { return recip::sweep_cubic(cubic, jobs); }));
  if (want("biquad"))
    rows.push_back(run_pair(
        "biquadratic", "omp",
        [&] { return recip::sweep_biquadratic(biquad, 1); },
        [&] { return recip::sweep_biquadratic(biquad, jobs); }));
  if (want("gauss"))
    rows.push_back(run_pair(
        "gauss-identities", "omp",
        [&] { return recip::sweep_gauss_identities(gauss, 1); },
        [&] { return recip::sweep_gauss_identities(gauss, jobs); }));
  if (want("structure"))
    rows.push_back(run_pair(
        "field-structure", "omp",
        [&] { return recip::sweep_field_structure(structure, seed, 1); },
        [&] { return recip::sweep_field_structure(structure, seed, jobs); }));

  std::printf("%-18s %10s %10s %10s %12s %8s %6s\n", "sweep", "bound",
              "cases", "serial_ms", "compare_ms", "vs", "equal");
  bool all_equal = true, all_clean = true;
  for (const Row& r : rows) {
    std::printf("%-18s %10llu %10llu %10llu %12llu %8s %6s\n", r.name.c_str(),
                static_cast<unsigned long long>(r.bound),
                static_cast<unsigned long long>(r.cases),
                static_cast<unsigned long long>(r.base_ms),
                static_cast<unsigned long long>(r.cmp_ms), r.cmp_label,
                r.content_equal ? "yes" : "NO");
    all_equal = all_equal && r.content_equal;
    all_clean = all_clean && r.failures == 0;
  }
  if (!all_equal) {
    std::fprintf(stderr, "compared runs disagree on report content\n");
    return 1;
  }
  if (!all_clean) {
    std::fprintf(stderr, "a sweep reported failures\n");
    return 1;
  }
  return 0;
}
