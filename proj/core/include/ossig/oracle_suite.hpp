#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ossig/gf2.hpp"
#include "ossig/lazy.hpp"
#include "ossig/params.hpp"
#include "ossig/rng.hpp"

namespace ossig {

struct PointOutput {
  BitVec y;  // r bits
  BitVec u;  // k bits
  bool operator==(const PointOutput&) const = default;
};

/// Affine coset description served for a hash output y: the fiber over y is
/// ColSpan(a) + b inside Z2^k.
struct CosetDescription {
  BitMatrix a;  // k x (n - r), full column rank, bottom ell_code rows full rank
  BitVec b;     // k bits
};

/// Deterministic instance of the oracle triple around a lazily sampled
/// permutation pi over n bits and a per-output coset sampler.
///
///   forward(x)      = (y, A(y) * z + b(y))  with (y, z) = split(pi(x))
///   inverse(y, u)   = pi^{-1}(y || z) when A(y) * z + b(y) = u is solvable
///   dual(y, v)      = coordinates of v^T A(y) in the bottom ell_code rows
///                     of A(y), or nullopt when outside their row span
///   dual_bloated    = same check against the rightmost n - r - s columns
///
/// Querying mutates internal memo tables; transcripts are deterministic per
/// (seed, query order). Absent results model the reject answer.
class OracleSuite {
 public:
  OracleSuite(const Params& params, const DeterministicRng::Seed& seed);

  const Params& params() const { return params_; }
  const DeterministicRng::Seed& seed() const { return seed_; }

  PointOutput p_forward(const BitVec& x);
  std::optional<BitVec> p_inverse(const BitVec& y, const BitVec& u);
  std::optional<BitVec> d_oracle(const BitVec& y, const BitVec& v);
  /// Accepts v iff v^T A1 lies in the row span of the bottom ell_code rows of
  /// A1, where A1 is the rightmost n - r - s columns of A(y). With s = 0 this
  /// is d_oracle. Coordinates are unique when the bottom rows of A1 are
  /// independent, which the sampler enforces for s in {0, bloat_s}.
  std::optional<BitVec> d_bloated(const BitVec& y, const BitVec& v, std::size_t s);

  /// Hash part of the forward map (first r output bits).
  BitVec hash(const BitVec& x) { return p_forward(x).y; }

  /// Coset served for y. Simulation-level access used by the signer and the
  /// test batteries; the query interface above is what adversaries get.
  const CosetDescription& coset(const BitVec& y);

  static OracleSuite from_json_string(const std::string& text);
  std::string to_json_string() const;

 private:
  Params params_;
  DeterministicRng::Seed seed_;
  LazyPermutation pi_;
  LazyFunction<CosetDescription> coset_fn_;

  std::optional<BitVec> dual_answer(const BitMatrix& a_part, const BitVec& v) const;
};

/// Coordinate answer of the dual check against an explicit matrix; shared by
/// the genuine suite and the reduction-simulated oracles.
std::optional<BitVec> dual_coordinates(const BitMatrix& a_part, std::size_t ell_code,
                                       const BitVec& v);

}  // namespace ossig
