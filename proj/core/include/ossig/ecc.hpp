#pragma once

#include <cstddef>
#include <string>

#include "ossig/gf2.hpp"
#include "ossig/rng.hpp"

namespace ossig {

/// Random linear binary code with a brute-forced distance certificate.
/// certified_min_distance is the exact minimum weight over all nonzero
/// codewords and is strictly greater than floor(code_len / 3), which makes
/// the radius-floor(code_len / 6) balls around codewords pairwise disjoint.
struct LinearCode {
  std::size_t msg_len = 0;   // lambda'
  std::size_t code_len = 0;  // ell
  BitMatrix generator;       // msg_len x code_len, full row rank
  std::size_t certified_min_distance = 0;

  BitVec encode(const BitVec& message) const;
  /// Hamming(word, codeword) <= floor(code_len / 6).
  bool within_radius(const BitVec& word, const BitVec& codeword) const;
  std::size_t radius() const { return code_len / 6; }

  std::string to_json_string() const;
  static LinearCode from_json_string(const std::string& text);
};

/// Exact minimum nonzero-codeword weight by enumerating all 2^msg_len
/// codewords; requires msg_len <= 20.
std::size_t min_distance_bruteforce(const BitMatrix& generator);

/// Uniform full-rank generator conditioned on min distance > floor(ell / 3),
/// by resampling. Throws after max_retries draws, which signals that no such
/// code exists (or is vanishingly rare) at this rate. retries_out, when
/// given, receives the number of rejected draws.
LinearCode sample_code(DeterministicRng& rng, std::size_t msg_len, std::size_t code_len,
                       std::size_t max_retries = 1000, std::size_t* retries_out = nullptr);

}  // namespace ossig
