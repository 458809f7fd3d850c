#include <mre/errors.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/optimize.hpp>
#include <mre/random.hpp>
#include <mre/re_oracle.hpp>

#include <Eigen/SVD>
#include <cmath>
#include <numbers>

namespace mre {

namespace {

RVec3 direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Mat4 product_projector(const ProductTerm& t) {
  return kron(bloch_projector(direction(t.theta_a, t.phi_a)), bloch_projector(direction(t.theta_b, t.phi_b)));
}

void angles_of(const Vec2& v, double& theta, double& phi) {
  const Mat2 p = v * v.adjoint() / v.squaredNorm();
  const RVec3 n{2.0 * p(0, 1).real(), -2.0 * p(0, 1).imag(), (p(0, 0) - p(1, 1)).real()};
  theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  phi = std::atan2(n.y(), n.x());
}

// Real parameters: K weight roots followed by K angle quadruples.
Eigen::VectorXd encode(const SeparableCandidate& c) {
  const auto k = static_cast<Eigen::Index>(c.size());
  Eigen::VectorXd x(5 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const ProductTerm& t = c.terms()[static_cast<std::size_t>(i)];
    x(i) = std::sqrt(t.w);
    x.segment<4>(k + 4 * i) << t.theta_a, t.phi_a, t.theta_b, t.phi_b;
  }
  return x;
}

std::vector<ProductTerm> decode(const Eigen::VectorXd& x) {
  const Eigen::Index k = x.size() / 5;
  const double norm = x.head(k).squaredNorm();
  std::vector<ProductTerm> terms(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) {
    const double w = norm > 0.0 ? x(i) * x(i) / norm : 1.0 / static_cast<double>(k);
    const auto a = x.segment<4>(k + 4 * i);
    terms[static_cast<std::size_t>(i)] = {w, a(0), a(1), a(2), a(3)};
  }
  return terms;
}

}  // namespace

SeparableCandidate::SeparableCandidate(std::vector<ProductTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty() || terms_.size() > kMaxTerms)
    throw InputError("a separable candidate needs between 1 and 16 product terms");
  double total = 0.0;
  for (const ProductTerm& t : terms_) {
    if (!(t.w >= 0.0)) throw InputError("product-term weights must be non-negative");
    total += t.w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InputError("product-term weights must sum to 1");
}

Mat4 SeparableCandidate::matrix() const {
  Mat4 m = Mat4::Zero();
  for (const ProductTerm& t : terms_) m += t.w * product_projector(t);
  return m;
}

SeparableCandidate SeparableCandidate::from_separable(const DensityMatrix& sigma) {
  if (wootters_concurrence(sigma) > 1e-9) throw DomainError("state is entangled; no product decomposition");
  std::vector<ProductTerm> terms;
  for (const auto& [p, psi] : wootters_decomposition(sigma)) {
    Mat2 m;
    m << psi.a(), psi.b(), psi.c(), psi.d();
    Eigen::JacobiSVD<Mat2> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    ProductTerm t{p, 0, 0, 0, 0};
    angles_of(svd.matrixU().col(0), t.theta_a, t.phi_a);
    angles_of(svd.matrixV().col(0).conjugate(), t.theta_b, t.phi_b);
    terms.push_back(t);
  }
  return SeparableCandidate(std::move(terms));
}

ReEstimate re_estimate(const DensityMatrix& rho, const ReConfig& config) {
  if (config.terms < 1 || config.terms > static_cast<int>(SeparableCandidate::kMaxTerms))
    throw InputError("the number of product terms must be in 1..16");
  if (config.restarts < 0) throw InputError("restarts must be non-negative");
  const Mat4 r = rho.matrix();
  const double entropy = von_neumann(rho);
  const Objective f = [&](const Eigen::VectorXd& x) {
    Mat4 sigma = Mat4::Zero();
    for (const ProductTerm& t : decode(x)) sigma += t.w * product_projector(t);
    return std::max(0.0, -entropy + detail::cross_entropy(r, sigma));
  };

  Eigen::VectorXd best_x;
  double best_value = std::numeric_limits<double>::infinity();
  bool converged = false;
  int descents = 0;
  auto refine = [&](const Eigen::VectorXd& x0, double step) {
    NelderMeadOptions opt;
    opt.tol = config.tol;
    opt.initial_step = step;
    opt.max_evaluations = config.max_evaluations > 0 ? config.max_evaluations : 300 * static_cast<int>(x0.size());
    const NelderMeadResult res = nelder_mead(f, x0, opt);
    ++descents;
    if (res.value < best_value) {
      best_value = res.value;
      best_x = res.x;
      converged = res.converged;
    }
  };

  if (config.warm_start) refine(encode(SeparableCandidate::from_separable(*config.warm_start)), 0.02);
  if (wootters_concurrence(rho) <= 1e-9) refine(encode(SeparableCandidate::from_separable(rho)), 0.02);

  Engine rng(config.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  for (int j = 0; j < config.restarts; ++j) {
    std::vector<ProductTerm> terms(static_cast<std::size_t>(config.terms));
    double total = 0.0;
    for (ProductTerm& t : terms) {
      total += (t.w = gamma(rng));
      t.theta_a = std::acos(unit(rng));
      t.phi_a = angle(rng);
      t.theta_b = std::acos(unit(rng));
      t.phi_b = angle(rng);
    }
    for (ProductTerm& t : terms) t.w /= total;
    refine(encode(SeparableCandidate(std::move(terms))), 0.3);
  }
  if (descents == 0) throw InputError("re_estimate needs at least one start");

  SeparableCandidate best(decode(best_x));
  const DensityMatrix sigma(best.matrix());
  if (!is_ppt(sigma)) throw Error("internal: product mixture failed the PPT check");
  const Bits value = relative_entropy_lemma1(rho, eigensystem_of(sigma.matrix()));
  return {value, std::move(best), descents, converged};
}

BoundChainReport verify_bound_chain(const DensityMatrix& rho, const BoundChainConfig& config) {
  const MreResult mre = mre_search(rho, config.search);
  ReConfig re_cfg = config.re;
  re_cfg.warm_start = mre.best_relative_matrix;
  const ReEstimate re = re_estimate(rho, re_cfg);
  const Bits ef = wootters_ef(rho);
  return {re.value,
          mre.value,
          ef,
          re.value <= mre.value + config.tol,
          mre.value <= ef + config.tol,
          mre.converged,
          re.converged};
}

}  // namespace mre
