#include <mre/families.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/pure_measures.hpp>
#include <mre/re_oracle.hpp>
#include <mre/search.hpp>
#include <mre_cli/commands.hpp>

#include <algorithm>
#include <iomanip>

namespace mre::cli {

namespace {

const char* kind_of(const StateInput& s) {
  if (std::holds_alternative<PureState>(s)) return "pure";
  if (std::holds_alternative<DensityMatrix>(s)) return "density";
  return "ensemble";
}

MreSearchConfig search_config(const RunConfig& cfg) {
  MreSearchConfig s;
  s.seed = cfg.seed;
  s.m_max = cfg.m_max;
  s.tol = cfg.tol;
  if (cfg.restarts >= 0) s.restarts = cfg.restarts;
  return s;
}

void measure_pure(const PureState& psi, Json& out) {
  out["xi"] = xi_norm(psi);
  out["concurrence"] = concurrence_pure(psi);
  out["ef"] = ef_pure(psi);
  out["ef_method"] = "pure";
  out["mre"] = mre_pure(psi);
  out["mre_method"] = "pure";
}

void measure_mixed_mre(const DensityMatrix& rho, const RunConfig& cfg, Json& out) {
  const Support s = support(rho);
  if (s.rank() == 1) {
    const PureState psi = PureState::normalized(s.vectors.col(0));
    out["mre"] = mre_pure(psi);
    out["mre_method"] = "pure";
    return;
  }
  if (const auto bell = as_bell_mixture(rho); bell && bell->b_max() >= 0.5) {
    out["mre"] = bell_mixture_mre_closed(bell->b_max());
    out["mre_method"] = "bell-mixture closed form";
    out["bell_weights"] = bell->weights();
    return;
  }
  if (const auto dep = as_departure(rho)) {
    out["mre"] = departure_mre_closed(*dep);
    out["mre_method"] = "departure closed form";
    out["departure"] = {{"index", dep->index}, {"G", dep->g}};
    return;
  }
  const MreResult r = mre_search(rho, search_config(cfg));
  out["mre"] = r.value;
  out["mre_method"] = "search";
  out["converged"] = r.converged;
  out["restarts_used"] = r.restarts_used;
}

}  // namespace

Json cmd_measure(const StateInput& state, const RunConfig& cfg) {
  Json out;
  out["input"] = kind_of(state);
  const DensityMatrix rho = density_of(state);
  if (const auto* psi = std::get_if<PureState>(&state)) {
    measure_pure(*psi, out);
  } else {
    const PolarizedPair xi = polarized_vectors(rho);
    out["xi_a"] = xi.a.norm();
    out["xi_b"] = xi.b.norm();
    out["concurrence"] = wootters_concurrence(rho);
    out["ef"] = wootters_ef(rho);
    out["ef_method"] = "wootters";
    measure_mixed_mre(rho, cfg, out);
    if (const auto* e = std::get_if<Ensemble>(&state)) out["mre_given_decomposition"] = mre_for_decomposition(rho, *e);
  }
  out["is_ppt"] = is_ppt(rho);
  return out;
}

Json cmd_search(const StateInput& state, const RunConfig& cfg) {
  const DensityMatrix rho = density_of(state);
  const MreResult r = mre_search(rho, search_config(cfg));
  return {{"value", r.value},
          {"converged", r.converged},
          {"restarts_used", r.restarts_used},
          {"evaluations", r.evaluations},
          {"reconstruction_residual", (ensemble_matrix(r.best_ensemble) - rho.matrix()).cwiseAbs().maxCoeff()},
          {"ensemble", encode(r.best_ensemble)},
          {"relative_matrix", encode(r.best_relative_matrix)}};
}

Json cmd_re_bound(const StateInput& state, const RunConfig& cfg) {
  BoundChainConfig bc;
  bc.search = search_config(cfg);
  bc.re.seed = cfg.seed;
  if (cfg.restarts >= 0) bc.re.restarts = cfg.restarts;
  const DensityMatrix rho = density_of(state);
  const MreResult mre = mre_search(rho, bc.search);
  bc.re.warm_start = mre.best_relative_matrix;
  const ReEstimate re = re_estimate(rho, bc.re);
  const double ef = wootters_ef(rho);

  Json terms = Json::array();
  for (const ProductTerm& t : re.best.terms())
    terms.push_back({{"w", t.w}, {"theta_a", t.theta_a}, {"phi_a", t.phi_a}, {"theta_b", t.theta_b}, {"phi_b", t.phi_b}});
  const bool re_ok = re.value <= mre.value + bc.tol;
  const bool mre_ok = mre.value <= ef + bc.tol;
  return {{"re", re.value},
          {"mre", mre.value},
          {"ef", ef},
          {"tol", bc.tol},
          {"re_below_mre", re_ok},
          {"mre_below_ef", mre_ok},
          {"holds", re_ok && mre_ok},
          {"mre_converged", mre.converged},
          {"re_converged", re.converged},
          {"separable_candidate", terms}};
}

Json cmd_lgm_apply(const StateInput& state, const KrausSet& set) {
  Json branches = Json::array();
  double q_sum = 0.0;
  Json out;
  out["input"] = kind_of(state);
  if (const auto* psi = std::get_if<PureState>(&state)) {
    Mat4 total = Mat4::Zero();
    for (std::size_t l = 0; l < set.size(); ++l) {
      const KrausPair& pair = set.pairs()[l];
      const double q = (pair.op() * psi->amplitudes()).squaredNorm();
      if (!(q > kAnnihilatedBranch)) {
        branches.push_back({{"index", l}, {"q", q}, {"annihilated", true}});
        continue;
      }
      const PureBranch b = apply_pure(pair, *psi);
      const double xi = xi_norm(b.state);
      q_sum += b.q;
      total += b.q * b.state.projector();
      branches.push_back({{"index", l},
                          {"q", b.q},
                          {"state", encode(b.state)},
                          {"xi2_closed", xi_squared_after_lgm(*psi, pair)},
                          {"xi2_direct", xi * xi},
                          {"ef", ef_pure(b.state)}});
    }
    out["xi2_before"] = std::pow(xi_norm(*psi), 2);
    out["ef_before"] = ef_pure(*psi);
    out["total"] = encode(total);
  } else {
    const DensityMatrix rho = density_of(state);
    const MixedOutcome m = apply_mixed(set, rho);
    for (const BranchOutcome& b : m.branches) {
      q_sum += b.q;
      branches.push_back({{"index", b.index}, {"q", b.q}, {"state", encode(b.state)}, {"ef", wootters_ef(b.state)}});
    }
    out["ef_before"] = wootters_ef(rho);
    out["ef_total"] = wootters_ef(m.total);
    out["total"] = encode(m.total);
  }
  out["q_sum"] = q_sum;
  out["branches"] = std::move(branches);
  return out;
}

namespace {

int nesting(const Json& j) {
  if (j.is_object()) return 100;
  if (!j.is_array()) return 0;
  int depth = 0;
  for (const Json& e : j) depth = std::max(depth, nesting(e));
  return depth + 1;
}

void render_json_at(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out << pad << Json(key).dump() << ": ";
      render_json_at(value, out, indent + 2);
      out << (++k < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else if (j.is_array() && !j.empty() && nesting(j) > 2) {
    out << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out << pad;
      render_json_at(j[k], out, indent + 2);
      out << (k + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else {
    out << j.dump();
  }
}

}  // namespace

void render_json(const Json& report, std::ostream& out) {
  render_json_at(report, out, 0);
  out << '\n';
}

void render_table(const Json& report, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [key, value] : report.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : report.items()) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << key;
    if (value.is_number()) {
      out << format_number(value.get<double>());
    } else if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

}  // namespace mre::cli
