#include <mre/errors.hpp>
#include <mre/json_io.hpp>

#include <fstream>
#include <sstream>

namespace mre {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& expect_array(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n)
    fail(std::string(what) + ": expected an array of " + std::to_string(n) + " entries");
  return j;
}

template <int N, typename M>
M decode_square(const Json& j, const char* what) {
  expect_array(j, N, what);
  M m;
  for (int r = 0; r < N; ++r) {
    const Json& row = expect_array(j[static_cast<std::size_t>(r)], N, what);
    for (int c = 0; c < N; ++c) m(r, c) = decode_complex(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

template <typename M>
Json encode_square(const M& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

bool is_complex_entry(const Json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

}  // namespace

Json encode(cplx z) { return Json::array({z.real(), z.imag()}); }

Json encode(const Vec4& v) {
  Json out = Json::array();
  for (int i = 0; i < 4; ++i) out.push_back(encode(v(i)));
  return out;
}

Json encode(const Mat2& m) { return encode_square(m); }
Json encode(const Mat4& m) { return encode_square(m); }
Json encode(const PureState& psi) { return encode(psi.amplitudes()); }
Json encode(const DensityMatrix& rho) { return encode(rho.matrix()); }

Json encode(const Ensemble& e) {
  Json members = Json::array();
  for (const auto& [p, psi] : e) members.push_back({{"p", p}, {"psi", encode(psi)}});
  return {{"members", std::move(members)}};
}

Json encode(const KrausSet& set) {
  Json out = Json::array();
  for (const auto& [a, b] : set) out.push_back(Json::array({encode(a), encode(b)}));
  return out;
}

cplx decode_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!is_complex_entry(j)) fail("complex entry must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Vec4 decode_vec4(const Json& j) {
  expect_array(j, 4, "amplitude vector");
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = decode_complex(j[static_cast<std::size_t>(i)]);
  return v;
}

Mat2 decode_mat2(const Json& j) { return decode_square<2, Mat2>(j, "2x2 matrix"); }
Mat4 decode_mat4(const Json& j) { return decode_square<4, Mat4>(j, "4x4 matrix"); }
PureState decode_pure(const Json& j) { return PureState(decode_vec4(j)); }
DensityMatrix decode_density(const Json& j) { return DensityMatrix(decode_mat4(j)); }

Ensemble decode_ensemble(const Json& j) {
  if (!j.is_object() || !j.contains("members") || !j["members"].is_array() || j["members"].empty())
    fail("ensemble must be an object with a non-empty \"members\" array");
  std::vector<EnsembleMember> members;
  double total = 0.0;
  for (const Json& m : j["members"]) {
    if (!m.is_object() || !m.contains("p") || !m.contains("psi") || !m["p"].is_number())
      fail("ensemble member must be {\"p\": number, \"psi\": [a, b, c, d]}");
    const double p = m["p"].get<double>();
    if (!(p > 0.0)) throw NonPhysicalError("ensemble weights must be positive");
    total += p;
    members.push_back({p, decode_pure(m["psi"])});
  }
  if (std::abs(total - 1.0) > Ensemble::kSumTolerance)
    throw NonPhysicalError("ensemble weights sum to " + std::to_string(total) + ", not 1");
  return Ensemble(std::move(members));
}

KrausSet decode_kraus_set(const Json& j) {
  if (!j.is_array() || j.empty()) fail("Kraus set must be a non-empty array of [A, B] pairs");
  std::vector<KrausPair> pairs;
  for (const Json& pair : j) {
    expect_array(pair, 2, "Kraus pair");
    pairs.push_back({decode_mat2(pair[0]), decode_mat2(pair[1])});
  }
  return KrausSet(std::move(pairs));
}

StateInput decode_state(const Json& j) {
  if (j.is_object()) return decode_ensemble(j);
  if (j.is_array() && j.size() == 4) {
    const bool rows = j[0].is_array() && j[0].size() == 4;
    if (rows) return decode_density(j);
    if (is_complex_entry(j[0])) return decode_pure(j);
  }
  fail("state must be a 4-amplitude array, a 4x4 matrix or an ensemble object");
}

DensityMatrix density_of(const StateInput& s) {
  if (const auto* psi = std::get_if<PureState>(&s)) return pure_to_density(*psi);
  if (const auto* rho = std::get_if<DensityMatrix>(&s)) return *rho;
  return ensemble_to_density(std::get<Ensemble>(s));
}

Json encode(const StateInput& s) {
  return std::visit([](const auto& v) { return encode(v); }, s);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace mre
