#include <mre/entropy.hpp>
#include <mre/errors.hpp>
#include <mre/families.hpp>
#include <mre/lgm.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/pure_measures.hpp>
#include <mre/random.hpp>
#include <mre/re_oracle.hpp>
#include <mre/search.hpp>
#include <mre_cli/verify.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace mre::cli {

namespace {

// ------------------------------------------------------------ serialization

Json encode_matrix(const Eigen::MatrixXcd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Eigen::MatrixXcd decode_matrix(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be a nested array");
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j[0].size()));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != j[0].size()) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < j[r].size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = decode_complex(j[r][c]);
  }
  return m;
}

Json encode_config(const RunConfig& cfg) {
  return {{"seed", cfg.seed}, {"restarts", cfg.restarts}, {"m_max", cfg.m_max}, {"tol", cfg.tol}};
}

RunConfig decode_config(const Json& j) {
  RunConfig cfg;
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.restarts = j.at("restarts").get<int>();
  cfg.m_max = j.at("m_max").get<int>();
  cfg.tol = j.at("tol").get<double>();
  return cfg;
}

MreSearchConfig search_config(const RunConfig& cfg) {
  MreSearchConfig s;
  s.seed = cfg.seed;
  s.m_max = cfg.m_max;
  s.tol = cfg.tol;
  if (cfg.restarts >= 0) s.restarts = cfg.restarts;
  return s;
}

ReConfig re_config(const RunConfig& cfg) {
  ReConfig r;
  r.seed = cfg.seed;
  if (cfg.restarts >= 0) r.restarts = cfg.restarts;
  return r;
}

// ----------------------------------------------------------------- drawing

int uniform_int(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform(Engine& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

DensityMatrix any_density(Engine& rng) { return random_density(rng, uniform_int(rng, 1, 4)); }

DensityMatrix full_rank_density(Engine& rng) { return random_density(rng, 4); }

// Random pure state, with one draw in four maximally entangled so the
// degenerate relative-matrix branch is exercised.
PureState varied_pure_state(Engine& rng) {
  if (uniform_int(rng, 0, 3) != 0) return random_pure_state(rng);
  const Vec4 phi = bell_vectors()[0];
  return PureState::normalized(kron(random_unitary2(rng), random_unitary2(rng)) * phi);
}

std::array<double, 4> entangled_bell_weights(Engine& rng) {
  std::array<double, 4> b{};
  const int k = uniform_int(rng, 0, 3);
  const double top = uniform(rng, 0.5, 1.0);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  double rest = 0.0;
  for (int i = 0; i < 4; ++i)
    if (i != k) rest += (b[static_cast<std::size_t>(i)] = gamma(rng));
  for (int i = 0; i < 4; ++i)
    b[static_cast<std::size_t>(i)] = i == k ? top : (1.0 - top) * b[static_cast<std::size_t>(i)] / rest;
  return b;
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

// Kraus pairs (I, |0><0|), (I, |0><1|): traces out B and re-prepares |0>.
KrausSet trace_out_b() {
  Mat2 p00 = Mat2::Zero(), p01 = Mat2::Zero();
  p00(0, 0) = 1.0;
  p01(0, 1) = 1.0;
  return KrausSet({{Mat2::Identity(), p00}, {Mat2::Identity(), p01}});
}

// --------------------------------------------------------------- properties

struct Property {
  PropertyInfo info;
  std::function<Json(Engine&)> draw;
  std::function<double(const Json&, const RunConfig&)> residual;
};

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {{"pauli-round-trip", "pauli_reconstruct(pauli_expand(rho)) = rho and a_00 = 1", 1000, 1e-12},
       [](Engine& rng) { return Json{{"rho", encode(any_density(rng))}}; },
       [](const Json& in, const RunConfig&) {
         const DensityMatrix rho = decode_density(in.at("rho"));
         const PauliCoefficients c = pauli_expand(rho);
         return std::max(max_abs(pauli_reconstruct(c).matrix() - rho.matrix()), std::abs(c(0, 0) - 1.0));
       }},
      {{"purity-identity", "(1/4) sum a_mu_nu^2 = 1 on pure states", 1000, 1e-10},
       [](Engine& rng) { return Json{{"psi", encode(random_pure_state(rng))}}; },
       [](const Json& in, const RunConfig&) {
         return std::abs(pauli_expand(decode_pure(in.at("psi"))).purity() - 1.0);
       }},
      {{"lemma-two", "xi_A = a xi_B and xi_B = a^T xi_A on pure states", 10000, 1e-10},
       [](Engine& rng) { return Json{{"psi", encode(random_pure_state(rng))}}; },
       [](const Json& in, const RunConfig&) { return lemma_two_residual(decode_pure(in.at("psi"))); }},
      {{"xi-concurrence", "C^2 + xi^2 = 1 and |xi_A| = |xi_B| = xi_norm", 1000, 1e-10},
       [](Engine& rng) { return Json{{"psi", encode(varied_pure_state(rng))}}; },
       [](const Json& in, const RunConfig&) {
         const PureState psi = decode_pure(in.at("psi"));
         const double c = concurrence_pure(psi), xi = xi_norm(psi);
         const PolarizedPair v = polarized_vectors(psi);
         return std::max({std::abs(c * c + xi * xi - 1.0), std::abs(v.a.norm() - xi), std::abs(v.b.norm() - xi)});
       }},
      {{"hjw-reconstruction", "hjw_ensemble(rho, U) reproduces rho for any isometry", 300, 1e-10},
       [](Engine& rng) {
         const DensityMatrix rho = any_density(rng);
         const int r = support(rho).rank();
         const int m = uniform_int(rng, r, std::max(r, 8));
         return Json{{"rho", encode(rho)}, {"isometry", encode_matrix(random_isometry(rng, m, r))}};
       },
       [](const Json& in, const RunConfig&) {
         const DensityMatrix rho = decode_density(in.at("rho"));
         const Ensemble e = hjw_ensemble(rho, decode_matrix(in.at("isometry")));
         return max_abs(ensemble_matrix(e) - rho.matrix());
       }},
      {{"lemma-one", "eigen-form relative entropy equals the direct definition", 1000, 1e-9},
       [](Engine& rng) {
         return Json{{"rho", encode(any_density(rng))}, {"sigma", encode(full_rank_density(rng))}};
       },
       [](const Json& in, const RunConfig&) {
         const DensityMatrix rho = decode_density(in.at("rho")), sigma = decode_density(in.at("sigma"));
         return std::abs(relative_entropy_lemma1(rho, eigensystem_of(sigma.matrix())) -
                         relative_entropy_direct(rho, sigma));
       }},
      {{"klein", "S(rho||sigma) >= 0", 1000, 1e-12},
       [](Engine& rng) {
         return Json{{"rho", encode(any_density(rng))}, {"sigma", encode(full_rank_density(rng))}};
       },
       [](const Json& in, const RunConfig&) {
         return std::max(0.0, -relative_entropy_direct(decode_density(in.at("rho")), decode_density(in.at("sigma"))));
       }},
      {{"joint-convexity", "S(sum p rho_i || sum p sigma_i) <= sum p S(rho_i||sigma_i)", 300, 1e-9},
       [](Engine& rng) {
         return Json{{"p", uniform(rng, 0.0, 1.0)},
                     {"rho", {encode(any_density(rng)), encode(any_density(rng))}},
                     {"sigma", {encode(full_rank_density(rng)), encode(full_rank_density(rng))}}};
       },
       [](const Json& in, const RunConfig&) {
         const double p = in.at("p").get<double>();
         const DensityMatrix r0 = decode_density(in.at("rho")[0]), r1 = decode_density(in.at("rho")[1]);
         const DensityMatrix s0 = decode_density(in.at("sigma")[0]), s1 = decode_density(in.at("sigma")[1]);
         const DensityMatrix r(p * r0.matrix() + (1 - p) * r1.matrix()), s(p * s0.matrix() + (1 - p) * s1.matrix());
         const double rhs = p * relative_entropy_direct(r0, s0) + (1 - p) * relative_entropy_direct(r1, s1);
         return std::max(0.0, relative_entropy_direct(r, s) - rhs);
       }},
      {{"channel-monotonicity", "S(Phi(rho)||Phi(sigma)) <= S(rho||sigma) for LGM channels and Tr_B", 300, 1e-9},
       [](Engine& rng) {
         return Json{{"rho", encode(any_density(rng))},
                     {"sigma", encode(full_rank_density(rng))},
                     {"kraus", encode(random_kraus_set(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 3)))}};
       },
       [](const Json& in, const RunConfig&) {
         const DensityMatrix rho = decode_density(in.at("rho")), sigma = decode_density(in.at("sigma"));
         const double before = relative_entropy_direct(rho, sigma);
         double worst = 0.0;
         for (const KrausSet& set : {decode_kraus_set(in.at("kraus")), trace_out_b()}) {
           const double after = relative_entropy_direct(apply_mixed(set, rho).total, apply_mixed(set, sigma).total);
           worst = std::max(worst, after - before);
         }
         return worst;
       }},
      {{"pure-identity", "mre_pure = ef_pure = S(rho_A) = S(rho_B)", 1000, 1e-9},
       [](Engine& rng) { return Json{{"psi", encode(varied_pure_state(rng))}}; },
       [](const Json& in, const RunConfig&) {
         const PureState psi = decode_pure(in.at("psi"));
         const double mre = mre_pure(psi);
         return std::max({std::abs(mre - ef_pure(psi)), std::abs(mre - von_neumann(reduced(psi, Party::A))),
                          std::abs(mre - von_neumann(reduced(psi, Party::B)))});
       }},
      {{"relative-matrix", "R(psi) is PPT, |eta| = 1, q1 = (1-xi)/2, spectrum = omega", 1000, 1e-10},
       [](Engine& rng) { return Json{{"psi", encode(varied_pure_state(rng))}}; },
       [](const Json& in, const RunConfig&) {
         const PureState psi = decode_pure(in.at("psi"));
         const RelativeMatrixParts parts = relative_matrix_pure(psi);
         std::array<double, 4> omega = omega_spectrum(psi).omega;
         std::sort(omega.begin(), omega.end());
         const Eigen::Vector4d eig = parts.matrix.eigenvalues();
         double r = std::max({-ppt_margin(parts.matrix), std::abs(parts.eta_a.norm() - 1.0),
                              std::abs(parts.eta_b.norm() - 1.0), std::abs(parts.q1 - 0.5 * (1.0 - xi_norm(psi)))});
         for (int k = 0; k < 4; ++k) r = std::max(r, std::abs(eig(k) - omega[static_cast<std::size_t>(k)]));
         return r;
       }},
      {{"theorem-two", "mre_for_decomposition(rho, e) <= sum p_i ef_pure(psi_i)", 300, 1e-9},
       [](Engine& rng) {
         const DensityMatrix rho = any_density(rng);
         const int r = support(rho).rank();
         return Json{{"rho", encode(rho)},
                     {"isometry", encode_matrix(random_isometry(rng, uniform_int(rng, r, 2 * r), r))}};
       },
       [](const Json& in, const RunConfig&) {
         const DensityMatrix rho = decode_density(in.at("rho"));
         const Ensemble e = hjw_ensemble(rho, decode_matrix(in.at("isometry")));
         double average = 0.0;
         for (const auto& [p, psi] : e) average += p * ef_pure(psi);
         return std::max(0.0, mre_for_decomposition(rho, e) - average);
       }},
      {{"bell-mixture-closed", "Bell-mixture MPSD, relative matrix, MRE and EF closed forms", 50, 1e-9},
       [](Engine& rng) { return Json{{"b", entangled_bell_weights(rng)}}; },
       [](const Json& in, const RunConfig&) {
         const BellMixture b(in.at("b").get<std::array<double, 4>>());
         const DensityMatrix rho = bell_mixture_state(b);
         const Ensemble e = bell_mixture_mpsd(b);
         return std::max({max_abs(ensemble_matrix(e) - rho.matrix()),
                          max_abs(total_relative_matrix(e).matrix() - bell_mixture_relative_matrix(b).matrix()),
                          std::abs(mre_for_decomposition(rho, e) - bell_mixture_mre_closed(b.b_max())),
                          std::abs(wootters_ef(rho) - bell_mixture_ef_closed(b.b_max()))});
       }},
      {{"departure-closed", "departure MPSD, relative matrices, MRE and EF closed forms", 50, 1e-9},
       [](Engine& rng) { return Json{{"index", uniform_int(rng, 1, 4)}, {"G", uniform(rng, 0.0, 1.0)}}; },
       [](const Json& in, const RunConfig&) {
         const DepartureFamily fam(in.at("index").get<int>(), in.at("G").get<double>());
         const DensityMatrix rho = departure_state(fam);
         const Ensemble e = departure_mpsd(fam);
         const double closed = departure_mre_closed(fam);
         return std::max({max_abs(ensemble_matrix(e) - rho.matrix()),
                          max_abs(total_relative_matrix(e).matrix() - departure_relative_matrix(fam).matrix()),
                          std::abs(mre_for_decomposition(rho, e) - closed),
                          std::abs(wootters_ef(rho) - departure_ef_closed(fam.g))});
       }},
      {{"separable-zero", "mre_search and re_estimate vanish on separable states", 10, 1e-6},
       [](Engine& rng) { return Json{{"rho", encode(random_separable(rng, uniform_int(rng, 1, 6)))}}; },
       [](const Json& in, const RunConfig& cfg) {
         const DensityMatrix rho = decode_density(in.at("rho"));
         return std::max(mre_search(rho, search_config(cfg)).value, re_estimate(rho, re_config(cfg)).value);
       }},
      {{"lemma-four", "transformed xi^2 closed form and the determinant identity", 1000, 1e-9},
       [](Engine& rng) {
         const KrausSet set = random_kraus_set(rng, 2, 2);
         return Json{{"psi", encode(varied_pure_state(rng))},
                     {"pair", {encode(set.pairs()[0].a), encode(set.pairs()[0].b)}}};
       },
       [](const Json& in, const RunConfig&) {
         const PureState psi = decode_pure(in.at("psi"));
         const KrausPair pair{decode_mat2(in.at("pair")[0]), decode_mat2(in.at("pair")[1])};
         const PureBranch out = apply_pure(pair, psi);
         const Vec4& u = out.unnormalized;
         const cplx det_after = u(0) * u(3) - u(1) * u(2);
         const double xi = xi_norm(out.state);
         return std::max(std::abs(xi_squared_after_lgm(psi, pair) - xi * xi),
                         std::abs(det_after - psi.det() * pair.a.determinant() * pair.b.determinant()));
       }},
      {{"lemma-five", "local unitaries preserve xi and ef_pure", 500, 1e-10},
       [](Engine& rng) {
         return Json{{"psi", encode(varied_pure_state(rng))}, {"kraus", encode(random_unitary_set(rng))}};
       },
       [](const Json& in, const RunConfig&) {
         const PureState psi = decode_pure(in.at("psi"));
         const KrausSet set = decode_kraus_set(in.at("kraus"));
         const PureBranch out = apply_pure(set.pairs()[0], psi);
         return std::max(std::abs(xi_norm(out.state) - xi_norm(psi)), std::abs(ef_pure(out.state) - ef_pure(psi)));
       }},
      {{"trace-preservation", "branch probabilities of a complete set sum to 1", 500, 1e-10},
       [](Engine& rng) {
         return Json{{"rho", encode(any_density(rng))},
                     {"kraus", encode(random_kraus_set(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 3)))}};
       },
       [](const Json& in, const RunConfig&) {
         const MixedOutcome out = apply_mixed(decode_kraus_set(in.at("kraus")), decode_density(in.at("rho")));
         double q = 0.0;
         for (const BranchOutcome& b : out.branches) q += b.q;
         return std::abs(q - 1.0);
       }},
      {{"lemma-six", "complete LGM sets keep separable states at zero EF on every branch", 200, 1e-9},
       [](Engine& rng) {
         return Json{{"rho", encode(random_separable(rng, uniform_int(rng, 1, 6)))},
                     {"kraus", encode(random_kraus_set(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 3)))}};
       },
       [](const Json& in, const RunConfig&) {
         const MixedOutcome out = apply_mixed(decode_kraus_set(in.at("kraus")), decode_density(in.at("rho")));
         double worst = wootters_ef(out.total);
         for (const BranchOutcome& b : out.branches) worst = std::max(worst, wootters_ef(b.state));
         return worst;
       }},
      {{"theorem-four-branch", "every branch of a pure state keeps xi''^2 >= xi^2", 500, 1e-9},
       [](Engine& rng) {
         return Json{{"psi", encode(random_pure_state(rng))}, {"kraus", encode(random_kraus_set(rng, 2, 2))}};
       },
       [](const Json& in, const RunConfig&) {
         const PureMonotoneReport rep = check_monotone_pure(decode_pure(in.at("psi")), decode_kraus_set(in.at("kraus")));
         return std::max(0.0, -rep.worst_branch_gap);
       }},
      {{"theorem-four-average", "sum_l q_l mre_pure(branch_l) <= mre_pure(psi)", 500, 1e-9},
       [](Engine& rng) {
         return Json{{"psi", encode(random_pure_state(rng))}, {"kraus", encode(random_kraus_set(rng, 2, 2))}};
       },
       [](const Json& in, const RunConfig&) {
         const PureMonotoneReport rep = check_monotone_pure(decode_pure(in.at("psi")), decode_kraus_set(in.at("kraus")));
         return std::max(0.0, rep.mre_after_average - rep.mre_before);
       }},
      {{"theorem-five", "proportional LGM sets do not increase MRE of Bell-diagonal states", 10, 1e-4},
       [](Engine& rng) {
         const auto b = uniform_int(rng, 0, 1) ? entangled_bell_weights(rng) : random_simplex4(rng);
         return Json{{"b", b}, {"kraus", encode(random_proportional_set(rng, uniform_int(rng, 1, 4)))}};
       },
       [](const Json& in, const RunConfig& cfg) {
         const DensityMatrix rho = bell_mixture_state(BellMixture(in.at("b").get<std::array<double, 4>>()));
         MixedMonotoneConfig mc;
         mc.search = search_config(cfg);
         const MixedMonotoneReport rep = check_monotone_mixed(rho, decode_kraus_set(in.at("kraus")), mc);
         return std::max(0.0, rep.mre_after - rep.mre_before);
       }},
      {{"bound-chain", "re_estimate <= mre_search <= wootters_ef on rank-2 states", 5, 1e-4},
       [](Engine& rng) { return Json{{"rho", encode(random_density(rng, 2))}}; },
       [](const Json& in, const RunConfig& cfg) {
         BoundChainConfig bc;
         bc.search = search_config(cfg);
         bc.re = re_config(cfg);
         const BoundChainReport rep = verify_bound_chain(decode_density(in.at("rho")), bc);
         return std::max({0.0, rep.re - rep.mre, rep.mre - rep.ef});
       }},
  };
  return all;
}

const Property& find_property(const std::string& name) {
  for (const Property& p : properties())
    if (p.info.name == name) return p;
  throw InputError("unknown property '" + name + "'");
}

Engine property_engine(std::uint64_t seed, const std::string& name) {
  std::uint32_t h = 2166136261u;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 16777619u;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h};
  return Engine(seq);
}

Json result_json(const PropertyResult& r) {
  return {{"property", r.property},
          {"samples", r.samples},
          {"max_residual", r.max_residual},
          {"threshold", r.threshold},
          {"passed", r.passed}};
}

}  // namespace

const std::vector<PropertyInfo>& verify_properties() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> out;
    for (const Property& p : properties()) out.push_back(p.info);
    return out;
  }();
  return infos;
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

Json VerifyReport::to_json() const {
  Json props = Json::array(), failures = Json::array();
  for (const PropertyResult& r : results) {
    props.push_back(result_json(r));
    if (r.failing_sample) failures.push_back(*r.failing_sample);
  }
  return {{"seed", seed}, {"passed", passed()}, {"properties", props}, {"failures", failures}};
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  if (!cfg.only.empty()) find_property(cfg.only);
  VerifyReport report;
  report.seed = cfg.run.seed;
  for (const Property& prop : properties()) {
    if (!cfg.only.empty() && prop.info.name != cfg.only) continue;
    PropertyResult res;
    res.property = prop.info.name;
    res.threshold = cfg.break_tolerance ? -1.0 : prop.info.threshold;
    const int n = cfg.samples > 0 ? cfg.samples : prop.info.default_samples;
    Engine rng = property_engine(cfg.run.seed, prop.info.name);
    for (int i = 0; i < n; ++i) {
      const Json input = prop.draw(rng);
      const double r = prop.residual(input, cfg.run);
      ++res.samples;
      res.max_residual = std::max(res.max_residual, r);
      if (!(r <= res.threshold) && !res.failing_sample) {
        res.passed = false;
        res.failing_sample = Json{{"property", prop.info.name}, {"index", i},           {"residual", r},
                                  {"threshold", res.threshold}, {"config", encode_config(cfg.run)},
                                  {"input", input}};
      }
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

PropertyResult replay_sample(const Json& sample) {
  if (!sample.is_object() || !sample.contains("property") || !sample.contains("input"))
    throw ParseError("replay file must be a failing sample with \"property\" and \"input\"");
  const Property& prop = find_property(sample.at("property").get<std::string>());
  const RunConfig cfg = sample.contains("config") ? decode_config(sample.at("config")) : RunConfig{};
  PropertyResult res;
  res.property = prop.info.name;
  res.threshold = sample.value("threshold", prop.info.threshold);
  res.samples = 1;
  res.max_residual = prop.residual(sample.at("input"), cfg);
  res.passed = res.max_residual <= res.threshold;
  if (!res.passed) res.failing_sample = sample;
  return res;
}

}  // namespace mre::cli
