#pragma once

// JSON encoding of states, ensembles and Kraus sets.
//
//   complex      [re, im]   (a bare number is read as a real entry)
//   pure state   [a, b, c, d]
//   density      [[..4..], [..4..], [..4..], [..4..]]
//   ensemble     {"members": [{"p": 0.5, "psi": [a, b, c, d]}, ...]}
//   Kraus set    [[A, B], ...] with A, B as 2x2 nested arrays
//
// Layout problems raise ParseError. Well-formed but unphysical content
// (unnormalized amplitudes, weights off the simplex, incomplete Kraus sets)
// raises the corresponding physics error from the constructors.

#include <mre/lgm.hpp>
#include <mre/states.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace mre {

using Json = nlohmann::json;

Json encode(cplx z);
Json encode(const Vec4& v);
Json encode(const Mat2& m);
Json encode(const Mat4& m);
Json encode(const PureState& psi);
Json encode(const DensityMatrix& rho);
Json encode(const Ensemble& e);
Json encode(const KrausSet& set);

cplx decode_complex(const Json& j);
Vec4 decode_vec4(const Json& j);
Mat2 decode_mat2(const Json& j);
Mat4 decode_mat4(const Json& j);
PureState decode_pure(const Json& j);
DensityMatrix decode_density(const Json& j);
Ensemble decode_ensemble(const Json& j);
KrausSet decode_kraus_set(const Json& j);

using StateInput = std::variant<PureState, DensityMatrix, Ensemble>;

/// Picks the pure, density or ensemble reading from the layout.
StateInput decode_state(const Json& j);
DensityMatrix density_of(const StateInput& s);
Json encode(const StateInput& s);

Json parse_json(std::string_view text);
/// Reads and parses a file; a missing file is a ParseError as well.
Json read_json_file(const std::string& path);

}  // namespace mre
