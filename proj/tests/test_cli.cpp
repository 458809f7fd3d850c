#include <mre/errors.hpp>
#include <mre/families.hpp>
#include <mre_cli/commands.hpp>
#include <mre_cli/sweep.hpp>
#include <mre_cli/verify.hpp>

#include "test_util.hpp"

#include <sstream>

namespace mre::cli {
namespace {

using mre::test::diag;

StateInput fixture(const std::string& name) {
  return decode_state(read_json_file(std::string(MRE_TEST_DATA) + "/" + name));
}

TEST(ExitCodes, MapLibraryErrors) {
  EXPECT_EQ(exit_code_for(ParseError("x")), kParseError);
  EXPECT_EQ(exit_code_for(InputError("x")), kParseError);
  EXPECT_EQ(exit_code_for(NormalizationError("x")), kNonPhysical);
  EXPECT_EQ(exit_code_for(NonPhysicalError("x")), kNonPhysical);
  EXPECT_EQ(exit_code_for(CompletenessError("x")), kNonPhysical);
  EXPECT_EQ(exit_code_for(DecompositionError("x")), kNonPhysical);
  EXPECT_EQ(exit_code_for(DomainError("x")), kDomainError);
  EXPECT_EQ(exit_code_for(RegimeError("x")), kDomainError);
  EXPECT_EQ(exit_code_for(RestrictionError("x")), kDomainError);
  EXPECT_EQ(exit_code_for(std::runtime_error("x")), kInternalError);
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.188721875540867136), "0.188721875541");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(Sweep, SpecValidation) {
  EXPECT_THROW(parse_family("ising"), InputError);
  SweepSpec s = SweepSpec::defaults(SweepFamily::Werner);
  EXPECT_NO_THROW(validate(s));
  s.min = 0.4;
  EXPECT_THROW(validate(s), DomainError);
  s = SweepSpec::defaults(SweepFamily::Departure);
  s.steps = 1;
  EXPECT_THROW(validate(s), DomainError);
  s = SweepSpec::defaults(SweepFamily::BellMixture);
  s.min = s.max;
  EXPECT_THROW(validate(s), DomainError);
}

TEST(Sweep, BellMixtureColumnsUseTheLibraryClosedForms) {
  const SweepSpec spec = SweepSpec::defaults(SweepFamily::BellMixture);
  const SweepTable t = run_sweep(spec, {});
  ASSERT_EQ(t.rows.size(), 51u);
  EXPECT_EQ(t.header, (std::vector<std::string>{"b_max", "mre_closed", "ef_closed"}));
  for (const auto& row : t.rows) {
    EXPECT_EQ(row[1], bell_mixture_mre_closed(row[0]));
    EXPECT_EQ(row[2], bell_mixture_ef_closed(row[0]));
  }
  EXPECT_EQ(t.rows.front()[0], 0.5);
  EXPECT_EQ(t.rows.back()[0], 1.0);
  EXPECT_TRUE(check_orderings(spec, t).empty());
}

TEST(Sweep, DepartureColumnsAndOrderings) {
  const SweepSpec spec = SweepSpec::defaults(SweepFamily::Departure);
  const SweepTable t = run_sweep(spec, {});
  ASSERT_EQ(t.rows.size(), 51u);
  for (const auto& row : t.rows) {
    const double g = row[0];
    EXPECT_EQ(row[1], departure_mre_closed({1, g}));
    EXPECT_EQ(row[2], departure_mre_closed({2, g}));
    EXPECT_EQ(row[5], departure_avg_reduced_entropy({2, g}));
    EXPECT_NEAR(row[3], row[4], 1e-9);
  }
  EXPECT_TRUE(check_orderings(spec, t).empty());
}

TEST(Sweep, OrderingCheckFlagsSwappedColumns) {
  const SweepSpec spec = SweepSpec::defaults(SweepFamily::BellMixture);
  SweepTable t = run_sweep(spec, {});
  std::swap(t.rows[10][1], t.rows[10][2]);
  EXPECT_EQ(check_orderings(spec, t).size(), 1u);
}

TEST(Sweep, CsvIsFixedAndStable) {
  SweepSpec spec = SweepSpec::defaults(SweepFamily::BellMixture);
  spec.steps = 3;
  std::ostringstream a, b;
  write_csv(run_sweep(spec, {}), a);
  write_csv(run_sweep(spec, {}), b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(),
            "b_max,mre_closed,ef_closed\n"
            "0.5,0,0\n"
            "0.75,0.188721875541,0.354578902665\n"
            "1,1,1\n");
}

TEST(Sweep, WernerRowsCarryTheNumericalColumns) {
  SweepSpec spec = SweepSpec::defaults(SweepFamily::Werner);
  spec.min = 0.7;
  spec.max = 0.8;
  spec.steps = 2;
  const SweepTable t = run_sweep(spec, {});
  ASSERT_EQ(t.rows.size(), 2u);
  for (const auto& row : t.rows) {
    EXPECT_NEAR(row[3], row[1], 1e-4);
    EXPECT_LE(row[4], row[3] + 1e-4);
  }
  EXPECT_TRUE(check_orderings(spec, t).empty());
}

TEST(Measure, BellWernerAndProduct) {
  const Json bell = cmd_measure(fixture("bell_pure.json"), {});
  EXPECT_NEAR(bell["mre"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(bell["ef"].get<double>(), 1.0, 1e-12);
  EXPECT_FALSE(bell["is_ppt"].get<bool>());

  const Json werner = cmd_measure(fixture("werner_075.json"), {});
  EXPECT_NEAR(werner["mre"].get<double>(), 0.188721875540867136, 1e-12);
  EXPECT_NEAR(werner["ef"].get<double>(), 0.354578902665269884, 1e-12);
  EXPECT_EQ(werner["mre_method"], "bell-mixture closed form");

  const Json prod = cmd_measure(fixture("product_pure.json"), {});
  EXPECT_EQ(prod["mre"].get<double>(), 0.0);
  EXPECT_EQ(prod["ef"].get<double>(), 0.0);
  EXPECT_TRUE(prod["is_ppt"].get<bool>());
}

TEST(Measure, DepartureStateUsesItsClosedForm) {
  const Json j = cmd_measure(departure_state({2, 0.3}), {});
  EXPECT_EQ(j["mre_method"], "departure closed form");
  EXPECT_NEAR(j["mre"].get<double>(), 0.0827506614697679985, 1e-12);
}

TEST(Search, MReturnsZeroAndReconstructs) {
  const Json j = cmd_search(fixture("m_density.json"), {});
  EXPECT_LT(j["value"].get<double>(), 1e-6);
  EXPECT_LT(j["reconstruction_residual"].get<double>(), 1e-9);
  const Ensemble e = decode_ensemble(j["ensemble"]);
  EXPECT_LT(mre::test::max_abs_diff(ensemble_matrix(e), diag(0.5, 0, 0, 0.5)), 1e-9);
}

TEST(LgmApply, UnitarySetLeavesTheStateUnchanged) {
  const StateInput werner = fixture("werner_075.json");
  const KrausSet set = decode_kraus_set(read_json_file(std::string(MRE_TEST_DATA) + "/unitary_kraus.json"));
  const Json j = cmd_lgm_apply(werner, set);
  EXPECT_NEAR(j["q_sum"].get<double>(), 1.0, 1e-12);
  const Mat4 total = decode_mat4(j["total"]);
  EXPECT_LT(mre::test::max_abs_diff(total, density_of(werner).matrix()), 1e-12);
}

TEST(LgmApply, FilterOnBellReportsBothXiForms) {
  const KrausSet set = decode_kraus_set(read_json_file(std::string(MRE_TEST_DATA) + "/filter_kraus.json"));
  const Json j = cmd_lgm_apply(fixture("bell_pure.json"), set);
  EXPECT_NEAR(j["branches"][0]["q"].get<double>(), 2.0 / 3, 1e-12);
  EXPECT_NEAR(j["branches"][0]["xi2_closed"].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(j["branches"][0]["xi2_direct"].get<double>(), 0.25, 1e-12);
}

TEST(Verify, OnlyRunsOneProperty) {
  VerifyConfig cfg;
  cfg.only = "lemma-two";
  cfg.samples = 100;
  const VerifyReport r = run_verify(cfg);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].property, "lemma-two");
  EXPECT_EQ(r.results[0].samples, 100);
  EXPECT_TRUE(r.passed());
  cfg.only = "no-such-property";
  EXPECT_THROW(run_verify(cfg), InputError);
}

TEST(Verify, BrokenToleranceFailsWithAReplayableSample) {
  VerifyConfig cfg;
  cfg.only = "xi-concurrence";
  cfg.samples = 10;
  cfg.break_tolerance = true;
  const VerifyReport r = run_verify(cfg);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.results[0].failing_sample.has_value());
  const Json sample = *r.results[0].failing_sample;
  const PropertyResult again = replay_sample(parse_json(sample.dump()));
  EXPECT_FALSE(again.passed);
  EXPECT_EQ(again.max_residual, sample["residual"].get<double>());
  const Json report = r.to_json();
  EXPECT_FALSE(report["passed"].get<bool>());
  EXPECT_EQ(report["failures"].size(), 1u);
}

TEST(Verify, EveryPropertyPassesOnASmallBudget) {
  // Skips the per-branch Theorem Four property, which is false (see
  // CheckMonotonePure.PerBranchInequalityFailsForAnExplicitSet), and the
  // optimizer-heavy ones that the acceptance run covers.
  for (const PropertyInfo& p : verify_properties()) {
    if (p.name == "theorem-four-branch" || p.name == "theorem-five" || p.name == "bound-chain" ||
        p.name == "separable-zero")
      continue;
    VerifyConfig cfg;
    cfg.only = p.name;
    cfg.samples = 20;
    const VerifyReport r = run_verify(cfg);
    EXPECT_TRUE(r.passed()) << p.name << " max residual " << r.results[0].max_residual;
  }
}

}  // namespace
}  // namespace mre::cli
