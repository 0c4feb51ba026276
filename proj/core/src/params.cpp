#include "ossig/params.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ossig {

void Params::validate() const {
  if (r >= n) throw std::invalid_argument("params: need r < n");
  if (n - r < ell_code) throw std::invalid_argument("params: need n - r >= ell_code");
  if (k < n - r) throw std::invalid_argument("params: need k >= n - r");
  if (ell_code > k) throw std::invalid_argument("params: need ell_code <= k");
  if (ell_code == 0) throw std::invalid_argument("params: need ell_code >= 1");
  if (bloat_s && *bloat_s > n - r - ell_code)
    throw std::invalid_argument("params: need bloat_s <= n - r - ell_code");
}

std::string Params::to_json_string() const {
  nlohmann::json j;
  j["lambda"] = lambda;
  j["s"] = s;
  j["r"] = r;
  j["n"] = n;
  j["k"] = k;
  j["ell_code"] = ell_code;
  j["rounds"] = rounds;
  if (bloat_s) j["bloat_s"] = *bloat_s;
  return j.dump();
}

Params Params::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Params p;
  p.lambda = j.at("lambda").get<std::size_t>();
  p.s = j.value("s", std::size_t(0));
  p.r = j.at("r").get<std::size_t>();
  p.n = j.at("n").get<std::size_t>();
  p.k = j.at("k").get<std::size_t>();
  p.ell_code = j.at("ell_code").get<std::size_t>();
  p.rounds = j.value("rounds", std::size_t(3));
  if (j.contains("bloat_s") && !j["bloat_s"].is_null())
    p.bloat_s = j["bloat_s"].get<std::size_t>();
  p.validate();
  return p;
}

Params paper_params(std::size_t lambda) {
  if (lambda < 2) throw std::invalid_argument("paper_params: need lambda >= 2");
  Params p;
  p.lambda = lambda;
  p.s = 16 * lambda;
  p.r = p.s * (lambda - 1);
  p.n = p.r + (3 * p.s) / 2;
  p.ell_code = lambda;
  p.k = (p.n - p.r) + lambda;
  p.rounds = 3;
  p.validate();
  return p;
}

Params toy_params() {
  Params p;
  p.lambda = 12;
  p.s = 0;
  p.r = 6;
  p.n = 20;
  p.k = 16;
  p.ell_code = 12;
  p.rounds = 3;
  p.validate();
  return p;
}

}  // namespace ossig
