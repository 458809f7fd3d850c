#include <mre/errors.hpp>
#include <mre/families.hpp>
#include <mre/mixed_measures.hpp>
#include <mre/re_oracle.hpp>
#include <mre/search.hpp>
#include <mre_cli/sweep.hpp>

#include <cmath>

namespace mre::cli {

SweepFamily parse_family(std::string_view name) {
  if (name == "werner") return SweepFamily::Werner;
  if (name == "bell-mixture") return SweepFamily::BellMixture;
  if (name == "departure") return SweepFamily::Departure;
  throw InputError("unknown sweep family '" + std::string(name) + "' (werner, bell-mixture, departure)");
}

SweepSpec SweepSpec::defaults(SweepFamily family) {
  if (family == SweepFamily::Departure) return {family, 0.0, 1.0, 51};
  return {family, 0.5, 1.0, 51};
}

void validate(const SweepSpec& spec) {
  if (!(spec.min < spec.max)) throw DomainError("sweep range needs min < max");
  if (spec.steps < 2) throw DomainError("sweep needs at least 2 steps");
  const double lo = spec.family == SweepFamily::Departure ? 0.0 : 0.5;
  if (spec.min < lo || spec.max > 1.0)
    throw DomainError("sweep range must lie in [" + format_number(lo) + ", 1] for this family");
}

std::vector<std::string> sweep_header(SweepFamily family) {
  switch (family) {
    case SweepFamily::Werner:
      return {"F", "mre_closed", "ef_closed", "mre_search", "re_estimate"};
    case SweepFamily::BellMixture:
      return {"b_max", "mre_closed", "ef_closed"};
    case SweepFamily::Departure:
      return {"G", "mre_14", "mre_23", "wootters_ef_14", "wootters_ef_23", "avg_reduced_entropy_23"};
  }
  throw Error("internal: unhandled sweep family");
}

namespace {

std::vector<double> werner_row(double f, const RunConfig& cfg) {
  BoundChainConfig chain;
  chain.search.seed = chain.re.seed = cfg.seed;
  chain.search.tol = cfg.tol;
  chain.search.m_max = cfg.m_max;
  if (cfg.restarts >= 0) chain.search.restarts = chain.re.restarts = cfg.restarts;
  const BoundChainReport rep = verify_bound_chain(werner_state(f), chain);
  return {f, werner_mre_closed(f), werner_ef_closed(f), rep.mre, rep.re};
}

std::vector<double> departure_row(double g) {
  const DepartureFamily f14(1, g), f23(2, g);
  return {g,
          departure_mre_closed(f14),
          departure_mre_closed(f23),
          wootters_ef(departure_state(f14)),
          wootters_ef(departure_state(f23)),
          departure_avg_reduced_entropy(f23)};
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec, const RunConfig& cfg) {
  validate(spec);
  SweepTable table{sweep_header(spec.family), {}};
  for (int k = 0; k < spec.steps; ++k) {
    const double x = k + 1 == spec.steps ? spec.max : spec.min + (spec.max - spec.min) * k / (spec.steps - 1);
    switch (spec.family) {
      case SweepFamily::Werner:
        table.rows.push_back(werner_row(x, cfg));
        break;
      case SweepFamily::BellMixture:
        table.rows.push_back({x, bell_mixture_mre_closed(x), bell_mixture_ef_closed(x)});
        break;
      case SweepFamily::Departure:
        table.rows.push_back(departure_row(x));
        break;
    }
  }
  return table;
}

void write_csv(const SweepTable& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.header.size(); ++c) out << (c ? "," : "") << table.header[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
    out << '\n';
  }
}

std::vector<std::string> check_orderings(const SweepSpec& spec, const SweepTable& table, double tol) {
  constexpr double exact = 1e-12;
  std::vector<std::string> issues;
  auto require = [&](bool ok, const std::vector<double>& row, const char* what) {
    if (!ok) issues.push_back(table.header[0] + "=" + format_number(row[0]) + ": " + what);
  };
  for (const auto& row : table.rows) {
    for (double v : row) require(std::isfinite(v), row, "non-finite value");
    switch (spec.family) {
      case SweepFamily::Werner:
        require(row[1] <= row[2] + exact, row, "mre_closed > ef_closed");
        require(row[4] <= row[3] + tol, row, "re_estimate > mre_search");
        require(row[3] <= row[2] + tol, row, "mre_search > ef_closed");
        break;
      case SweepFamily::BellMixture:
        require(row[1] <= row[2] + exact, row, "mre_closed > ef_closed");
        break;
      case SweepFamily::Departure:
        require(row[2] <= row[1] + exact, row, "mre_23 > mre_14");
        require(row[5] + exact >= row[2], row, "avg_reduced_entropy_23 < mre_23");
        break;
    }
  }
  return issues;
}

}  // namespace mre::cli
