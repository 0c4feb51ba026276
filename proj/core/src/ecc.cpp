#include "ossig/ecc.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ossig {

BitVec LinearCode::encode(const BitVec& message) const {
  if (message.size() != msg_len) throw std::invalid_argument("encode: message length mismatch");
  return generator.transpose().mat_vec(message);
}

bool LinearCode::within_radius(const BitVec& word, const BitVec& codeword) const {
  if (word.size() != code_len || codeword.size() != code_len)
    throw std::invalid_argument("within_radius: length mismatch");
  return (word ^ codeword).popcount() <= radius();
}

std::size_t min_distance_bruteforce(const BitMatrix& generator) {
  if (generator.rows() > 20) throw std::invalid_argument("min distance: msg_len too large");
  std::size_t best = generator.cols() + 1;
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << generator.rows()); ++m) {
    BitVec word(generator.cols());
    for (std::size_t j = 0; j < generator.rows(); ++j)
      if ((m >> j) & 1) word ^= generator.row(j);
    std::size_t w = word.popcount();
    if (w < best) best = w;
  }
  return best;
}

LinearCode sample_code(DeterministicRng& rng, std::size_t msg_len, std::size_t code_len,
                       std::size_t max_retries, std::size_t* retries_out) {
  if (msg_len > code_len) throw std::invalid_argument("sample_code: msg_len > code_len");
  if (msg_len > 20) throw std::invalid_argument("sample_code: msg_len too large to certify");
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    BitMatrix g = random_matrix(rng, msg_len, code_len);
    if (rank(g) != msg_len) continue;
    std::size_t d = min_distance_bruteforce(g);
    if (d <= code_len / 3) continue;
    if (retries_out) *retries_out = attempt;
    return LinearCode{msg_len, code_len, std::move(g), d};
  }
  throw std::runtime_error("sample_code: retry bound exhausted, rate too high for the distance");
}

std::string LinearCode::to_json_string() const {
  nlohmann::json j;
  j["msg_len"] = msg_len;
  j["code_len"] = code_len;
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < generator.rows(); ++i) rows.push_back(generator.row(i).to_hex());
  j["generator_rows"] = rows;
  j["min_distance"] = certified_min_distance;
  return j.dump();
}

LinearCode LinearCode::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LinearCode code;
  code.msg_len = j.at("msg_len").get<std::size_t>();
  code.code_len = j.at("code_len").get<std::size_t>();
  std::vector<BitVec> rows;
  for (const auto& hex : j.at("generator_rows"))
    rows.push_back(BitVec::from_hex(hex.get<std::string>(), code.code_len));
  if (rows.size() != code.msg_len) throw std::invalid_argument("code: generator row count");
  code.generator = BitMatrix::from_rows(rows);
  code.certified_min_distance = j.at("min_distance").get<std::size_t>();
  if (rank(code.generator) != code.msg_len)
    throw std::invalid_argument("code: generator not full rank");
  if (min_distance_bruteforce(code.generator) != code.certified_min_distance)
    throw std::invalid_argument("code: distance certificate does not match");
  return code;
}

}  // namespace ossig
