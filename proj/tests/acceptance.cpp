// Acceptance run: one PASS/FAIL line per criterion (sub-checks get their own
// line), exit status 0 only when every line passes.

#include <mre/entropy.hpp>
#include <mre/families.hpp>
#include <mre/lgm.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/pure_measures.hpp>
#include <mre/random.hpp>
#include <mre/re_oracle.hpp>
#include <mre/search.hpp>
#include <mre_cli/sweep.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

namespace {

using namespace mre;
using Clock = std::chrono::steady_clock;

// 30-digit references (mpmath) for the Werner point F = 3/4.
constexpr double kWernerMre = 0.188721875540867136;
constexpr double kWernerEf = 0.354578902665269884;

int failures = 0;

void line(const std::string& id, bool ok, const std::string& what) {
  std::printf("[%s] %-4s %s\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Runs body and appends a runtime line against the criterion's limit.
void timed(const std::string& id, double limit, const std::function<void()>& body) {
  const auto t0 = Clock::now();
  body();
  const double s = seconds_since(t0);
  line(id + "t", s < limit, fmt("runtime %.2f s (limit %.0f s)", s, limit));
}

Mat4 real4(std::initializer_list<std::initializer_list<double>> rows) {
  Mat4 m = Mat4::Zero();
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (double x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

// The four printed total relative matrices of the Bell-mixture MPSD cases.
Mat4 printed_bell_relative_matrix(const BellMixture& b) {
  const double b1 = b[0], b2 = b[1], b3 = b[2], b4 = b[3];
  switch (b.dominant()) {
    case 0: {
      const double s = b2 + b3 + b4, r = b2 / s, t = (b3 - b4) / s;
      return real4({{1 + r, 0, 0, 1 - r}, {0, 1 - r, t, 0}, {0, t, 1 - r, 0}, {1 - r, 0, 0, 1 + r}}) / 4.0;
    }
    case 1: {
      const double s = b1 + b3 + b4, r = b1 / s, t = (b3 - b4) / s;
      return real4({{1 + r, 0, 0, -1 + r}, {0, 1 - r, t, 0}, {0, t, 1 - r, 0}, {-1 + r, 0, 0, 1 + r}}) / 4.0;
    }
    case 2: {
      const double s = b1 + b2 + b4, r = b4 / s, t = (b1 - b2) / s;
      return real4({{1 - r, 0, 0, t}, {0, 1 + r, 1 - r, 0}, {0, 1 - r, 1 + r, 0}, {t, 0, 0, 1 - r}}) / 4.0;
    }
    default: {
      const double s = b1 + b2 + b3, r = b3 / s, t = (b1 - b2) / s;
      return real4({{1 - r, 0, 0, t}, {0, 1 + r, -1 + r, 0}, {0, -1 + r, 1 + r, 0}, {t, 0, 0, 1 - r}}) / 4.0;
    }
  }
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

void criterion1() {
  timed("1", 10, [] {
    Engine rng(1001);
    double ef_gap = 0.0, vn_gap = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const PureState psi = random_pure_state(rng);
      const double mre = mre_pure(psi);
      ef_gap = std::max(ef_gap, std::abs(mre - ef_pure(psi)));
      vn_gap = std::max(vn_gap, std::abs(mre - von_neumann(reduced(psi, Party::A))));
    }
    line("1", ef_gap < 1e-9 && vn_gap < 1e-9,
         fmt("pure-state identity, 10000 Haar states: max|MRE-EF| = %.2e, max|MRE-S(rho_A)| = %.2e (< 1e-9)", ef_gap,
             vn_gap));
  });
}

void criterion2() {
  timed("2", 5, [] {
    Engine rng(1002);
    double gap = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const DensityMatrix rho = random_density(rng, 1 + k % 4);
      const DensityMatrix sigma = random_density(rng, 4);
      gap = std::max(gap, std::abs(relative_entropy_lemma1(rho, eigensystem_of(sigma.matrix())) -
                                   relative_entropy_direct(rho, sigma)));
    }
    line("2", gap < 1e-9, fmt("Lemma One eigen-form vs direct, 1000 pairs: max gap %.2e (< 1e-9)", gap));
  });
}

void criterion3() {
  timed("3", 5, [] {
    Engine rng(1003);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) worst = std::max(worst, lemma_two_residual(random_pure_state(rng)));
    line("3", worst < 1e-10, fmt("Lemma Two, 10000 pure states: max residual %.2e (< 1e-10)", worst));
  });
}

void criterion4() {
  timed("4", 300, [] {
    bool ordered = true;
    double interior_gap = 1.0, endpoint_gap = 0.0;
    for (int k = 0; k <= 50; ++k) {
      const double f = 0.5 + 0.01 * k;
      const double mre = werner_mre_closed(f), ef = werner_ef_closed(f);
      ordered = ordered && mre <= ef;
      if (k == 0 || k == 50)
        endpoint_gap = std::max(endpoint_gap, std::abs(ef - mre));
      else
        interior_gap = std::min(interior_gap, ef - mre);
    }
    line("4a", ordered && interior_gap > 0.0 && endpoint_gap < 1e-12,
         fmt("Werner grid 0.50..1.00: MRE <= EF, min interior gap %.3e > 0, endpoint gap %.1e", interior_gap,
             endpoint_gap));

    const double mre75 = werner_mre_closed(0.75), ef75 = werner_ef_closed(0.75);
    line("4b", std::abs(mre75 - 0.188722) < 1e-5,
         fmt("MRE(0.75) = %.9f vs 0.188722 (|diff| %.1e < 1e-5)", mre75, std::abs(mre75 - 0.188722)));
    line("4c", std::abs(ef75 - kWernerEf) < 1e-5 && std::abs(wootters_ef(werner_state(0.75)) - kWernerEf) < 1e-9,
         fmt("EF(0.75) = %.9f vs the 30-digit evaluation %.9f of the EF formula (|diff| %.1e)", ef75, kWernerEf,
             std::abs(ef75 - kWernerEf)));
    line("4d", std::abs(ef75 - 0.354600) < 1e-5,
         fmt("EF(0.75) = %.9f vs the printed target 0.354600 (|diff| %.2e, tol 1e-5); 0.354600 is "
             "0.3545789 rounded to four places and padded, so it misses the 1e-5 window",
             ef75, std::abs(ef75 - 0.354600)));

    double worst = 0.0;
    std::string detail;
    for (double f : {0.6, 0.75, 0.9}) {
      const MreResult r = mre_search(werner_state(f));
      const double gap = std::abs(r.value - werner_mre_closed(f));
      worst = std::max(worst, gap);
      detail += fmt(" F=%.2f: %.9f (closed %.9f)", f, r.value, werner_mre_closed(f));
    }
    line("4e", worst < 1e-4, fmt("mre_search recovers the closed form within 1e-4, max gap %.2e;", worst) + detail);
  });
}

void criterion5() {
  timed("5", 30, [] {
    Engine rng(1005);
    double matrix_gap = 0.0, mre_gap = 0.0;
    int n = 0;
    while (n < 50) {
      const BellMixture b(random_simplex4(rng));
      if (b.b_max() < 0.5) continue;
      ++n;
      const Ensemble e = bell_mixture_mpsd(b);
      matrix_gap = std::max(matrix_gap, max_abs(total_relative_matrix(e).matrix() - printed_bell_relative_matrix(b)));
      mre_gap = std::max(mre_gap,
                         std::abs(mre_for_decomposition(bell_mixture_state(b), e) - bell_mixture_mre_closed(b.b_max())));
    }
    line("5", matrix_gap < 1e-9 && mre_gap < 1e-9,
         fmt("Bell mixtures (50): relative matrix vs printed four-case forms %.2e, MRE vs 1 - H(b_max) %.2e (< 1e-9)",
             matrix_gap, mre_gap));
  });
}

void criterion6() {
  timed("6", 60, [] {
    bool separated = true;
    double min_sep = 1.0, ef_spread = 0.0, sbar_margin = 1.0, closed_vs_numeric = 0.0, decomposition_gap = 0.0;
    for (int k = 1; k <= 19; ++k) {
      const double g = 0.05 * k;
      const double m14 = departure_mre_numeric({1, g});
      const double m23 = departure_mre_closed({2, g});
      separated = separated && m14 > m23;
      min_sep = std::min(min_sep, m14 - m23);
      const double ef1 = wootters_ef(departure_state({1, g}));
      for (int i = 2; i <= 4; ++i) ef_spread = std::max(ef_spread, std::abs(wootters_ef(departure_state({i, g})) - ef1));
      sbar_margin = std::min(sbar_margin, departure_avg_reduced_entropy({2, g}) - m23);
      for (int i = 1; i <= 4; ++i) {
        const DepartureFamily fam(i, g);
        decomposition_gap = std::max(decomposition_gap, std::abs(mre_for_decomposition(departure_state(fam),
                                                                                       departure_mpsd(fam)) -
                                                                 (i == 1 || i == 4 ? departure_mre_numeric(fam)
                                                                                   : departure_mre_closed(fam))));
      }
      closed_vs_numeric = std::max(closed_vs_numeric, std::abs(departure_mre_closed({1, g}) - m14));
    }
    line("6a", separated, fmt("departure G=0.05..0.95: mre_14 > mre_23 everywhere (min gap %.4f)", min_sep));
    line("6b", ef_spread < 1e-9, fmt("Wootters EF equal across the four families: max spread %.2e (< 1e-9)", ef_spread));
    line("6c", sbar_margin >= 0.0, fmt("average reduced entropy >= mre_23 pointwise (min margin %.4f)", sbar_margin));
    line("6d", decomposition_gap < 1e-6,
         fmt("family curves from S(B_i || R) agree with the two-member decomposition: max gap %.2e (< 1e-6)",
             decomposition_gap));
    line("6e", closed_vs_numeric < 1e-9,
         fmt("family-1/4 logarithmic closed form (second and third lines added) vs numeric curve: max gap %.2e",
             closed_vs_numeric));
  });
}

void criterion7() {
  timed("7", 600, [] {
    Engine rng(1007);
    int branch_sets = 0, average_sets = 0;
    double worst_gap = 0.0;
    for (int k = 0; k < 500; ++k) {
      const PureState psi = random_pure_state(rng);
      const PureMonotoneReport r = check_monotone_pure(psi, random_kraus_set(rng));
      if (r.branch_violations > 0) ++branch_sets;
      if (r.average_violation) ++average_sets;
      worst_gap = std::min(worst_gap, r.worst_branch_gap);
    }
    line("7a", branch_sets == 0,
         fmt("per-branch xi''^2 >= xi^2 - 1e-9 on 500 random complete sets: %d sets violate (worst gap %.3f)",
             branch_sets, worst_gap));
    line("7b", average_sets == 0,
         fmt("averaged sum_l q_l MRE(branch) <= MRE(psi) + 1e-9 on the same 500 sets: %d violations", average_sets));

    int mixed_violations = 0;
    double worst_excess = -1.0;
    for (int k = 0; k < 100; ++k) {
      const DensityMatrix rho = bell_mixture_state(BellMixture(random_simplex4(rng)));
      MixedMonotoneConfig cfg;
      cfg.search.seed = static_cast<std::uint64_t>(k);
      const MixedMonotoneReport r = check_monotone_mixed(rho, random_proportional_set(rng), cfg);
      worst_excess = std::max(worst_excess, r.mre_after - r.mre_before);
      if (!r.ok(1e-4)) ++mixed_violations;
    }
    line("7c", mixed_violations == 0,
         fmt("MRE(rho'') <= MRE(rho) + 1e-4 for 100 proportional sets on Bell-diagonal states: %d violations "
             "(max excess %.2e)",
             mixed_violations, worst_excess));
  });
}

void criterion8() {
  timed("8", 120, [] {
    Engine rng(1008);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const DensityMatrix rho = random_separable(rng, 1 + k % 4);
      const MixedOutcome out = apply_mixed(random_kraus_set(rng, 1 + k % 3, 1 + (k / 3) % 3), rho);
      worst = std::max(worst, wootters_ef(out.total));
      for (const auto& b : out.branches) worst = std::max(worst, wootters_ef(b.state));
    }
    line("8", worst < 1e-9, fmt("Lemma Six, 200 sets on separable states: max branch/total EF %.2e (< 1e-9)", worst));
  });
}

void criterion9() {
  timed("9", 600, [] {
    int broken = 0;
    double worst_re = -1.0, worst_mre = -1.0;
    auto check = [&](const DensityMatrix& rho) {
      const BoundChainReport r = verify_bound_chain(rho);
      worst_re = std::max(worst_re, r.re - r.mre);
      worst_mre = std::max(worst_mre, r.mre - r.ef);
      if (!(r.re <= r.mre + 1e-4 && r.mre + 1e-4 <= r.ef + 2e-4)) ++broken;
    };
    for (double f : {0.55, 0.65, 0.75, 0.85, 0.95}) check(werner_state(f));
    Engine rng(1009);
    for (int k = 0; k < 20; ++k) check(random_density(rng, 2));
    line("9a", broken == 0,
         fmt("RE <= MRE + 1e-4 <= EF + 2e-4 on 5 Werner points and 20 rank-2 states: %d broken "
             "(max RE-MRE %.2e, max MRE-EF %.2e)",
             broken, worst_re, worst_mre));

    double spread = 0.0;
    for (int k = 0; k < 5; ++k) {
      const PureState psi = random_pure_state(rng);
      const BoundChainReport r = verify_bound_chain(pure_to_density(psi));
      spread = std::max({spread, std::abs(r.re - r.mre), std::abs(r.mre - r.ef), std::abs(r.re - r.ef)});
    }
    line("9b", spread < 1e-6, fmt("pure states: RE, MRE and EF coincide, max spread %.2e (< 1e-6)", spread));
  });
}

void criterion10() {
  using namespace mre::cli;
  timed("10", 600, [] {
    struct Figure {
      SweepFamily family;
      const char* file;
    };
    const Figure figures[] = {{SweepFamily::Werner, "fig1_werner.csv"},
                              {SweepFamily::BellMixture, "fig1_bell_mixture.csv"},
                              {SweepFamily::Departure, "fig3_fig4_departure.csv"}};
    for (const Figure& fig : figures) {
      const SweepSpec spec = SweepSpec::defaults(fig.family);
      const SweepTable t = run_sweep(spec, {});
      std::ofstream out(fig.file, std::ios::binary);
      write_csv(t, out);
      const auto issues = check_orderings(spec, t);
      const auto& first = t.rows.front();
      const auto& last = t.rows.back();
      // Every curve runs from 0 to 1. Closed-form columns must hit the
      // endpoints to 1e-9, the Werner search columns to the 1e-4 search
      // tolerance.
      const std::size_t closed = fig.family == SweepFamily::Werner ? 3 : first.size();
      bool endpoints = true;
      double endpoint_gap = 0.0;
      for (std::size_t c = 1; c < first.size(); ++c) {
        const double gap = std::max(std::abs(first[c]), std::abs(last[c] - 1.0));
        endpoint_gap = std::max(endpoint_gap, gap);
        endpoints = endpoints && gap < (c < closed ? 1e-9 : 1e-4);
      }
      line(std::string("10") + (fig.family == SweepFamily::Werner       ? "a"
                                : fig.family == SweepFamily::BellMixture ? "b"
                                                                         : "c"),
           issues.empty() && endpoints,
           fmt("%s: %zu rows, %zu ordering violations, endpoint deviation from 0/1 %.1e", fig.file, t.rows.size(),
               issues.size(), endpoint_gap));
    }
  });
}

}  // namespace

int main() {
  std::printf("MRE acceptance run\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d failing line(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
