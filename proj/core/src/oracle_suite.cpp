#include "ossig/oracle_suite.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ossig {

namespace {

CosetDescription sample_coset(DeterministicRng& rng, const Params& p) {
  const std::size_t cols = p.n - p.r;
  const std::size_t ell = p.ell_code;
  for (std::size_t attempt = 0; attempt < 256; ++attempt) {
    BitMatrix a = random_matrix(rng, p.k, cols);
    if (rank(a) != cols) continue;
    if (rank(a.rows_slice(p.k - ell, ell)) != ell) continue;
    if (p.bloat_s && *p.bloat_s > 0) {
      BitMatrix a1 = a.cols_slice(*p.bloat_s, cols - *p.bloat_s);
      if (rank(a1.rows_slice(p.k - ell, ell)) != ell) continue;
    }
    return CosetDescription{std::move(a), rng.next_bitvec(p.k)};
  }
  throw std::runtime_error("coset sampling: retry bound exhausted");
}

}  // namespace

OracleSuite::OracleSuite(const Params& params, const DeterministicRng::Seed& seed)
    : params_(params),
      seed_(seed),
      pi_(params.n, DeterministicRng(seed, "PI")),
      coset_fn_(seed, "F", [p = params](DeterministicRng& rng) { return sample_coset(rng, p); }) {
  params_.validate();
}

const CosetDescription& OracleSuite::coset(const BitVec& y) {
  if (y.size() != params_.r) throw std::invalid_argument("coset: y length mismatch");
  return coset_fn_.query(y);
}

PointOutput OracleSuite::p_forward(const BitVec& x) {
  if (x.size() != params_.n) throw std::invalid_argument("p_forward: x length mismatch");
  BitVec image = pi_.forward(x);
  BitVec y = image.slice(0, params_.r);
  BitVec z = image.slice(params_.r, params_.n - params_.r);
  const CosetDescription& c = coset(y);
  return PointOutput{y, c.a.mat_vec(z) ^ c.b};
}

std::optional<BitVec> OracleSuite::p_inverse(const BitVec& y, const BitVec& u) {
  if (y.size() != params_.r) throw std::invalid_argument("p_inverse: y length mismatch");
  if (u.size() != params_.k) throw std::invalid_argument("p_inverse: u length mismatch");
  const CosetDescription& c = coset(y);
  std::optional<BitVec> z = solve(c.a, u ^ c.b);
  if (!z) return std::nullopt;
  return pi_.inverse(BitVec::concat(y, *z));
}

std::optional<BitVec> dual_coordinates(const BitMatrix& a_part, std::size_t ell_code,
                                       const BitVec& v) {
  if (v.size() != a_part.rows()) throw std::invalid_argument("dual: v length mismatch");
  BitVec w = a_part.transpose().mat_vec(v);  // v^T A, as a column
  BitMatrix bottom = a_part.rows_slice(a_part.rows() - ell_code, ell_code);
  return coordinates(bottom, w);
}

std::optional<BitVec> OracleSuite::d_oracle(const BitVec& y, const BitVec& v) {
  if (y.size() != params_.r) throw std::invalid_argument("d_oracle: y length mismatch");
  return dual_coordinates(coset(y).a, params_.ell_code, v);
}

std::optional<BitVec> OracleSuite::d_bloated(const BitVec& y, const BitVec& v, std::size_t s) {
  if (y.size() != params_.r) throw std::invalid_argument("d_bloated: y length mismatch");
  if (s > params_.n - params_.r - params_.ell_code)
    throw std::invalid_argument("d_bloated: s too large");
  const CosetDescription& c = coset(y);
  if (s == 0) return dual_coordinates(c.a, params_.ell_code, v);
  return dual_coordinates(c.a.cols_slice(s, params_.n - params_.r - s), params_.ell_code, v);
}

std::string OracleSuite::to_json_string() const {
  nlohmann::json j = nlohmann::json::parse(params_.to_json_string());
  j["seed"] = DeterministicRng::seed_to_hex(seed_);
  return j.dump();
}

OracleSuite OracleSuite::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Params p = Params::from_json_string(text);
  auto seed = DeterministicRng::seed_from_hex(j.at("seed").get<std::string>());
  return OracleSuite(p, seed);
}

}  // namespace ossig
