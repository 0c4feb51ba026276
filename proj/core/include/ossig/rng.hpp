#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ossig/bitvec.hpp"

namespace ossig {

/// The raw ChaCha20 block function (20 rounds, 32-bit little-endian words).
/// Exposed so the keystream can be pinned against published test vectors.
std::array<std::uint8_t, 64> chacha20_block(const std::array<std::uint8_t, 32>& key,
                                            const std::array<std::uint8_t, 12>& nonce,
                                            std::uint32_t counter);

/// Seeded deterministic randomness stream with domain separation.
///
/// The stream is the ChaCha20 keystream under key = seed and nonce =
/// FNV-1a-96(domain_tag), starting at block counter 0. Everything downstream
/// consumes this stream, so identical (seed, tag, query sequence) yields
/// identical outputs on any platform.
class DeterministicRng {
 public:
  using Seed = std::array<std::uint8_t, 32>;

  DeterministicRng(const Seed& seed, const std::string& domain_tag);

  /// Independent stream for a sub-role; tag is extended, seed is shared.
  DeterministicRng child(const std::string& sub_tag) const;

  const Seed& seed() const { return seed_; }
  const std::string& domain_tag() const { return tag_; }

  std::uint8_t next_byte();
  std::uint64_t next_u64();
  /// Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound);
  bool next_bit();
  double next_unit_double();  // 53 random bits over [0,1)

  BitVec next_bitvec(std::size_t length);

  static Seed seed_from_hex(const std::string& hex64);
  static std::string seed_to_hex(const Seed& seed);
  /// Convenience seed for tests and defaults: ASCII label hashed into 32 bytes.
  static Seed seed_from_label(const std::string& label);
  /// Fresh 32-byte seed drawn from the (seed, label) stream, for handing
  /// independently seeded instances to sub-experiments.
  static Seed derive_seed(const Seed& seed, const std::string& label);

 private:
  Seed seed_;
  std::string tag_;
  std::array<std::uint8_t, 12> nonce_;
  std::uint32_t counter_ = 0;
  std::array<std::uint8_t, 64> block_{};
  std::size_t pos_ = 64;  // forces refill on first use

  void refill();
};

}  // namespace ossig
