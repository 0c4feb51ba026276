#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

#include "ossig/bitvec.hpp"
#include "ossig/rng.hpp"

namespace ossig {

/// Random permutation over {0,1}^domain_bits, sampled lazily.
///
/// Forward and inverse tables grow together and stay mutually consistent;
/// an assignment, once made, never changes. A fresh forward query draws a
/// uniformly random unused image (rejection against the inverse table), and a
/// fresh inverse query draws a uniformly random unused preimage, which is
/// exactly the conditional distribution of a uniform permutation given the
/// pairs fixed so far. Usable even when 2^domain_bits is far beyond memory,
/// as long as the query count stays small.
class LazyPermutation {
 public:
  LazyPermutation(std::size_t domain_bits, DeterministicRng rng)
      : bits_(domain_bits), rng_(std::move(rng)) {}

  std::size_t domain_bits() const { return bits_; }

  BitVec forward(const BitVec& x);
  BitVec inverse(const BitVec& y);

  std::size_t assigned_pairs() const { return fwd_.size(); }

 private:
  std::size_t bits_;
  DeterministicRng rng_;
  std::unordered_map<BitVec, BitVec, BitVec::Hash> fwd_;
  std::unordered_map<BitVec, BitVec, BitVec::Hash> inv_;
};

/// Random function with memoized, per-input deterministic outputs.
///
/// Each input y gets its own randomness stream derived from (seed, tag, y),
/// so outputs are independent across inputs and do not depend on query order.
template <class T>
class LazyFunction {
 public:
  using Sampler = std::function<T(DeterministicRng&)>;

  LazyFunction(const DeterministicRng::Seed& seed, std::string domain_tag, Sampler sampler)
      : seed_(seed), tag_(std::move(domain_tag)), sampler_(std::move(sampler)) {}

  const T& query(const BitVec& y) {
    auto it = memo_.find(y);
    if (it != memo_.end()) return it->second;
    DeterministicRng rng(seed_, tag_ + "/y:" + y.to_hex());
    return memo_.emplace(y, sampler_(rng)).first->second;
  }

 private:
  DeterministicRng::Seed seed_;
  std::string tag_;
  Sampler sampler_;
  std::unordered_map<BitVec, T, BitVec::Hash> memo_;
};

}  // namespace ossig
