#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace ossig {

/// Scheme parameters.
///
/// n is the hash input width, r the hash output width, k the ambient
/// dimension of the coset vectors, ell_code the signing block width (the last
/// ell_code coordinates carry the codeword), lambda the statistical
/// parameter, rounds the signing iteration count, and bloat_s the optional
/// column split for the relaxed dual oracle.
struct Params {
  std::size_t lambda = 0;
  std::size_t s = 0;
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t ell_code = 0;
  std::size_t rounds = 3;
  std::optional<std::size_t> bloat_s;

  void validate() const;  // throws std::invalid_argument with the violated rule

  std::string to_json_string() const;
  static Params from_json_string(const std::string& text);
};

/// Textbook parameter schedule: s = 16*lambda, r = s*(lambda-1),
/// n = r + (3/2)*s. The ambient dimension is set to k = (n - r) + lambda,
/// the smallest k admitting both full column rank n - r and the
/// claw-free-permutation embedding bound k >= n - r + lambda.
Params paper_params(std::size_t lambda);

/// Small defaults used by the experiment harness and the CLI:
/// n=20, r=6, k=16, ell_code=12, rounds=3.
Params toy_params();

}  // namespace ossig
