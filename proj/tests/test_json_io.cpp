#include <mre/errors.hpp>
#include <mre/json_io.hpp>
#include <mre/random.hpp>

#include "test_util.hpp"

namespace mre {
namespace {

using test::diag;
using test::max_abs_diff;

TEST(JsonComplex, PairsAndBareNumbers) {
  EXPECT_EQ(decode_complex(parse_json("[1.5, -2]")), cplx(1.5, -2));
  EXPECT_EQ(decode_complex(parse_json("0.25")), cplx(0.25, 0));
  EXPECT_EQ(encode(cplx(3, 4)).dump(), "[3.0,4.0]");
  EXPECT_THROW(decode_complex(parse_json("[1, 2, 3]")), ParseError);
  EXPECT_THROW(decode_complex(parse_json("\"x\"")), ParseError);
}

TEST(JsonPure, RoundTrip) {
  Engine rng(101);
  for (int k = 0; k < 20; ++k) {
    const PureState psi = random_pure_state(rng);
    const PureState back = decode_pure(parse_json(encode(psi).dump()));
    EXPECT_EQ((back.amplitudes() - psi.amplitudes()).norm(), 0.0);
  }
}

TEST(JsonPure, Errors) {
  EXPECT_THROW(decode_pure(parse_json("[1, 1, 0, 0]")), NormalizationError);
  EXPECT_THROW(decode_pure(parse_json("[1, 0, 0]")), ParseError);
}

TEST(JsonDensity, RoundTripAndErrors) {
  Engine rng(102);
  const DensityMatrix rho = random_density(rng, 3);
  EXPECT_EQ(max_abs_diff(decode_density(parse_json(encode(rho).dump())).matrix(), rho.matrix()), 0.0);
  EXPECT_THROW(decode_density(parse_json("[[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0.5]]")), NonPhysicalError);
  EXPECT_THROW(decode_density(parse_json("[[1,0,0],[0,0,0],[0,0,0]]")), ParseError);
}

TEST(JsonEnsemble, RoundTripAndErrors) {
  const Ensemble e({{0.5, bell_state(Bell::PhiPlus)}, {0.5, bell_state(Bell::PhiMinus)}});
  const Ensemble back = decode_ensemble(parse_json(encode(e).dump()));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_LT(max_abs_diff(ensemble_matrix(back), diag(0.5, 0, 0, 0.5)), 1e-15);
  EXPECT_THROW(decode_ensemble(parse_json(R"({"members": [{"p": 0.4, "psi": [1,0,0,0]}]})")), NonPhysicalError);
  EXPECT_THROW(decode_ensemble(parse_json(R"({"members": [{"psi": [1,0,0,0]}]})")), ParseError);
  EXPECT_THROW(decode_ensemble(parse_json(R"({"people": []})")), ParseError);
}

TEST(JsonKraus, RoundTripAndCompleteness) {
  Engine rng(103);
  const KrausSet set = random_kraus_set(rng);
  const KrausSet back = decode_kraus_set(parse_json(encode(set).dump()));
  ASSERT_EQ(back.size(), set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    EXPECT_EQ((back.pairs()[i].a - set.pairs()[i].a).norm(), 0.0);
    EXPECT_EQ((back.pairs()[i].b - set.pairs()[i].b).norm(), 0.0);
  }
  EXPECT_THROW(decode_kraus_set(parse_json("[[[[1,0],[0,1]], [[1,0],[0,0.5]]]]")), CompletenessError);
  EXPECT_THROW(decode_kraus_set(parse_json("[[[[1,0],[0,1]]]]")), ParseError);
}

TEST(JsonState, LayoutSelectsTheForm) {
  EXPECT_TRUE(std::holds_alternative<PureState>(decode_state(parse_json("[[0.6,0],0,0,[0,0.8]]"))));
  EXPECT_TRUE(std::holds_alternative<DensityMatrix>(
      decode_state(parse_json("[[0.5,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0.5]]"))));
  EXPECT_TRUE(std::holds_alternative<Ensemble>(decode_state(parse_json(R"({"members":[{"p":1,"psi":[1,0,0,0]}]})"))));
  EXPECT_THROW(decode_state(parse_json("[1, 2, 3]")), ParseError);
  EXPECT_THROW(decode_state(parse_json("true")), ParseError);
}

TEST(JsonParse, MalformedTextAndMissingFiles) {
  EXPECT_THROW(parse_json("[1, 2"), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/state.json"), ParseError);
  EXPECT_NO_THROW(read_json_file(std::string(MRE_TEST_DATA) + "/bell_pure.json"));
}

TEST(JsonState, DensityOfEachForm) {
  const Mat4 phi = diag(0.5, 0, 0, 0.5);
  Mat4 bell = phi;
  bell(0, 3) = bell(3, 0) = 0.5;
  const auto pure = decode_state(read_json_file(std::string(MRE_TEST_DATA) + "/bell_pure.json"));
  EXPECT_LT(max_abs_diff(density_of(pure).matrix(), bell), 1e-15);
  const auto ens = decode_state(read_json_file(std::string(MRE_TEST_DATA) + "/m_ensemble.json"));
  EXPECT_LT(max_abs_diff(density_of(ens).matrix(), phi), 1e-15);
}

}  // namespace
}  // namespace mre
