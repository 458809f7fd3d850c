#pragma once

// Subcommands of the mre tool. Each returns a JSON document; the caller
// renders it (JSON or table) and picks the exit status.

#include <mre/json_io.hpp>
#include <mre_cli/config.hpp>

#include <ostream>

namespace mre::cli {

/// xi, concurrence, EF, MRE and PPT of a state. Bell mixtures with
/// b_max >= 1/2 and departure states use their closed forms; other mixed
/// states fall back to mre_search. An ensemble input also reports the MRE of
/// that particular decomposition.
Json cmd_measure(const StateInput& state, const RunConfig& cfg);

/// mre_search result with the best ensemble and its relative matrix.
Json cmd_search(const StateInput& state, const RunConfig& cfg);

/// Bound chain re_estimate <= mre_search <= wootters_ef; "holds" is false on a
/// violation.
Json cmd_re_bound(const StateInput& state, const RunConfig& cfg);

/// Branch probabilities and states of a Kraus set applied to a state. Pure
/// inputs keep pure branches and report xi''^2 in closed and direct form.
Json cmd_lgm_apply(const StateInput& state, const KrausSet& set);

/// Indented JSON that keeps scalars' innermost arrays (complex numbers,
/// matrix rows) on one line.
void render_json(const Json& report, std::ostream& out);

/// Two-column "key value" rendering of a report; nested arrays and objects are
/// printed as compact JSON.
void render_table(const Json& report, std::ostream& out);

}  // namespace mre::cli
