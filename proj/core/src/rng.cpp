#include "ossig/rng.hpp"

#include <bit>
#include <stdexcept>

namespace ossig {

namespace {

inline std::uint32_t load32_le(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) | (std::uint32_t(p[2]) << 16) |
         (std::uint32_t(p[3]) << 24);
}

inline void store32_le(std::uint8_t* p, std::uint32_t v) {
  p[0] = v & 0xff;
  p[1] = (v >> 8) & 0xff;
  p[2] = (v >> 16) & 0xff;
  p[3] = (v >> 24) & 0xff;
}

inline void quarter_round(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) {
  a += b; d ^= a; d = std::rotl(d, 16);
  c += d; b ^= c; b = std::rotl(b, 12);
  a += b; d ^= a; d = std::rotl(d, 8);
  c += d; b ^= c; b = std::rotl(b, 7);
}

std::uint64_t fnv1a64(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("invalid hex digit in seed");
}

}  // namespace

std::array<std::uint8_t, 64> chacha20_block(const std::array<std::uint8_t, 32>& key,
                                            const std::array<std::uint8_t, 12>& nonce,
                                            std::uint32_t counter) {
  std::uint32_t state[16];
  state[0] = 0x61707865;
  state[1] = 0x3320646e;
  state[2] = 0x79622d32;
  state[3] = 0x6b206574;
  for (int i = 0; i < 8; ++i) state[4 + i] = load32_le(key.data() + 4 * i);
  state[12] = counter;
  for (int i = 0; i < 3; ++i) state[13 + i] = load32_le(nonce.data() + 4 * i);

  std::uint32_t w[16];
  for (int i = 0; i < 16; ++i) w[i] = state[i];
  for (int round = 0; round < 10; ++round) {
    quarter_round(w[0], w[4], w[8], w[12]);
    quarter_round(w[1], w[5], w[9], w[13]);
    quarter_round(w[2], w[6], w[10], w[14]);
    quarter_round(w[3], w[7], w[11], w[15]);
    quarter_round(w[0], w[5], w[10], w[15]);
    quarter_round(w[1], w[6], w[11], w[12]);
    quarter_round(w[2], w[7], w[8], w[13]);
    quarter_round(w[3], w[4], w[9], w[14]);
  }
  std::array<std::uint8_t, 64> out;
  for (int i = 0; i < 16; ++i) store32_le(out.data() + 4 * i, w[i] + state[i]);
  return out;
}

DeterministicRng::DeterministicRng(const Seed& seed, const std::string& domain_tag)
    : seed_(seed), tag_(domain_tag) {
  // nonce = FNV-1a-96(tag): 8 bytes of the standard 64-bit hash, then 4 bytes
  // of a second pass chained from the first
  std::uint64_t h1 = fnv1a64(tag_, 14695981039346656037ull);
  std::uint64_t h2 = fnv1a64(tag_, h1 * 1099511628211ull + 1);
  for (int i = 0; i < 8; ++i) nonce_[i] = (h1 >> (8 * i)) & 0xff;
  for (int i = 0; i < 4; ++i) nonce_[8 + i] = (h2 >> (8 * i)) & 0xff;
}

DeterministicRng DeterministicRng::child(const std::string& sub_tag) const {
  return DeterministicRng(seed_, tag_ + "/" + sub_tag);
}

void DeterministicRng::refill() {
  block_ = chacha20_block(seed_, nonce_, counter_);
  ++counter_;
  pos_ = 0;
}

std::uint8_t DeterministicRng::next_byte() {
  if (pos_ >= 64) refill();
  return block_[pos_++];
}

std::uint64_t DeterministicRng::next_u64() {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(next_byte()) << (8 * i);
  return v;
}

std::uint64_t DeterministicRng::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: zero bound");
  if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
  std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
  for (;;) {
    std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

bool DeterministicRng::next_bit() { return next_byte() & 1; }

double DeterministicRng::next_unit_double() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

BitVec DeterministicRng::next_bitvec(std::size_t length) {
  BitVec v(length);
  for (std::size_t i = 0; i < length; i += 8) {
    std::uint8_t byte = next_byte();
    for (std::size_t j = 0; j < 8 && i + j < length; ++j)
      if ((byte >> j) & 1) v.set(i + j, true);
  }
  return v;
}

DeterministicRng::Seed DeterministicRng::seed_from_hex(const std::string& hex64) {
  if (hex64.size() != 64) throw std::invalid_argument("seed must be 64 hex characters");
  Seed s;
  for (int i = 0; i < 32; ++i)
    s[i] = std::uint8_t(hex_value(hex64[2 * i]) << 4 | hex_value(hex64[2 * i + 1]));
  return s;
}

std::string DeterministicRng::seed_to_hex(const Seed& seed) {
  static const char* digits = "0123456789abcdef";
  std::string out(64, '0');
  for (int i = 0; i < 32; ++i) {
    out[2 * i] = digits[seed[i] >> 4];
    out[2 * i + 1] = digits[seed[i] & 0xf];
  }
  return out;
}

DeterministicRng::Seed DeterministicRng::derive_seed(const Seed& seed, const std::string& label) {
  DeterministicRng rng(seed, "derive/" + label);
  Seed out;
  for (auto& b : out) b = rng.next_byte();
  return out;
}

DeterministicRng::Seed DeterministicRng::seed_from_label(const std::string& label) {
  Seed s{};
  std::uint64_t h = 14695981039346656037ull;
  for (int chunk = 0; chunk < 4; ++chunk) {
    h = fnv1a64(label, h * 1099511628211ull + std::uint64_t(chunk) + 1);
    for (int i = 0; i < 8; ++i) s[8 * chunk + i] = (h >> (8 * i)) & 0xff;
  }
  return s;
}

}  // namespace ossig
