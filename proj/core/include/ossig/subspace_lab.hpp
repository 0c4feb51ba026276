#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ossig/gf2.hpp"
#include "ossig/rng.hpp"

namespace ossig {

/// Membership check for a subspace with an instrumented query counter.
class MembershipOracle {
 public:
  explicit MembershipOracle(Subspace s) : sub_(std::move(s)) {}

  bool operator()(const BitVec& v) const {
    ++queries_;
    return sub_.contains(v);
  }
  const Subspace& subspace() const { return sub_; }
  std::uint64_t queries() const { return queries_; }

 private:
  Subspace sub_;
  mutable std::uint64_t queries_ = 0;
};

/// Uniform superspace T of base with dim(T) = dim(base) + added_dim, sampled
/// by drawing added_dim random vectors outside the running span.
Subspace sample_superspace(const Subspace& base, std::size_t added_dim, DeterministicRng& rng);

/// All superspaces of base with added_dim extra dimensions; exhaustive,
/// intended for small ambient dimension (counts follow the Gaussian
/// binomial [ambient - dim(base), added_dim]_2).
std::vector<Subspace> enumerate_superspaces(const Subspace& base, std::size_t added_dim);

/// The chain S0 < S_1, ..., S_lambda < S together with the lifted chain
/// T_i = joint_span(T0, S_i), T = joint_span(T0, S). The index function maps
/// an element of S (or T) to the lambda-bit index of its S0-parallel coset,
/// bit i being the complement of membership in S_i (or T_i).
struct ShfFamily {
  Subspace s0;
  std::vector<Subspace> intermediates;  // lambda subspaces of dim r + lambda - 1
  Subspace s;
  Subspace t0;
  std::vector<Subspace> lifted;  // T_i
  Subspace t;

  BitVec index_of(const BitVec& v, bool use_lifted) const;
};

/// Intermediates with independent index functionals: S_i spans S0 plus all
/// chain extension vectors except the i-th.
std::vector<Subspace> canonical_intermediates(const Subspace& s0, const Subspace& s);

/// T0 is uniform over superspaces of S0 with added_dim extra dimensions that
/// meet S only in S0, so every dimension in the statement is exact:
/// dim T_i = dim T0 + 1, dim T = dim T0 + lambda.
ShfFamily sample_shf(const Subspace& s0, const std::vector<Subspace>& intermediates,
                     const Subspace& s, std::size_t added_dim, DeterministicRng& rng);

struct IntersectionEstimate {
  double estimate = 0;  // fraction of trials with all-trivial intersections
  double stderr_value = 0;
  std::size_t trials = 0;
  double reference_bound = 0;  // 1 - t * 2^{t - s}
};

/// Monte Carlo estimate of the probability that dual(T), for T a random
/// superspace of a fixed dim-r subspace with s added dimensions, meets each
/// of t fixed random duals only in zero. per_trial, when given, receives one
/// flag per trial.
IntersectionEstimate trivial_intersection_probability(std::size_t k, std::size_t r, std::size_t s,
                                                      std::size_t t, std::size_t trials,
                                                      DeterministicRng& rng,
                                                      std::vector<bool>* per_trial = nullptr);

/// One adversary call per sampled superspace; the callback sees only the
/// membership oracle and returns a k-bit vector.
using Adversary = std::function<BitVec(const MembershipOracle&)>;

enum class OutputClass { kOutsideSDual, kInTDualNonzero, kInSDualOnly, kZero };

struct AntiConcentrationTrial {
  OutputClass cls;
  bool counted_in_span;  // vector was in dual(S) and fed to the rank
};

struct AntiConcentrationRun {
  std::size_t k = 0, r = 0, s = 0, t = 0;
  double epsilon = 0;
  std::size_t executions = 0;  // ell = ceil(k (t + 1) / epsilon)
  std::vector<AntiConcentrationTrial> trials;
  std::vector<BitVec> collected;     // adversary outputs that landed in dual(S)
  std::vector<bool> bucket_success;  // t + 1 buckets
  std::size_t span_dimension = 0;    // D, tracked by incremental rank
  // reference numbers, reported but never asserted: the distinguishing
  // budget q * ell^2 * s / sqrt(2^(k-r-s)) at the observed per-execution
  // query count q
  std::uint64_t max_adversary_queries = 0;
  double hiding_reference = 0;
};

/// Bookkeeping reduction: ell executions of the adversary against fresh
/// random superspaces of a dim-r base (sampled here unless fixed_base is
/// given), collecting outputs inside dual(S) and tracking the dimension D of
/// their span by incremental rank. Buckets partition the executions into
/// t + 1 consecutive groups; a bucket succeeds when some execution lands a
/// nonzero vector of dual(T_i) whose dual meets all previous winners
/// trivially.
AntiConcentrationRun anticoncentration_reduction(
    const Adversary& adversary, std::size_t k, std::size_t r, std::size_t s, double epsilon,
    DeterministicRng& rng, const std::optional<Subspace>& fixed_base = std::nullopt);

}  // namespace ossig
