#include "ossig/subspace_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ossig {

Subspace sample_superspace(const Subspace& base, std::size_t added_dim, DeterministicRng& rng) {
  if (base.dim() + added_dim > base.ambient_dim())
    throw std::invalid_argument("sample_superspace: dimension overflow");
  Subspace t = base;
  while (t.dim() < base.dim() + added_dim) {
    BitVec v = rng.next_bitvec(base.ambient_dim());
    if (t.contains(v)) continue;
    t = joint_span(t, Subspace::from_generators(base.ambient_dim(), std::vector<BitVec>{v}));
  }
  return t;
}

std::vector<Subspace> enumerate_superspaces(const Subspace& base, std::size_t added_dim) {
  if (base.ambient_dim() > 16)
    throw std::invalid_argument("enumerate_superspaces: ambient too large");
  std::vector<Subspace> frontier{base};
  for (std::size_t step = 0; step < added_dim; ++step) {
    std::vector<Subspace> next;
    std::set<std::string> next_seen;
    for (const Subspace& cur : frontier) {
      for (std::uint64_t vi = 1; vi < (std::uint64_t(1) << base.ambient_dim()); ++vi) {
        BitVec v = BitVec::from_u64(base.ambient_dim(), vi);
        if (cur.contains(v)) continue;
        Subspace grown =
            joint_span(cur, Subspace::from_generators(base.ambient_dim(), std::vector<BitVec>{v}));
        std::string key;
        for (std::size_t i = 0; i < grown.basis().rows(); ++i)
          key += grown.basis().row(i).to_hex() + ",";
        if (next_seen.insert(key).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

BitVec ShfFamily::index_of(const BitVec& v, bool use_lifted) const {
  const auto& chain = use_lifted ? lifted : intermediates;
  BitVec idx(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) idx.set(i, !chain[i].contains(v));
  return idx;
}

std::vector<Subspace> canonical_intermediates(const Subspace& s0, const Subspace& s) {
  if (!s0.is_subspace_of(s)) throw std::invalid_argument("intermediates: s0 must lie in s");
  const std::size_t lambda = s.dim() - s0.dim();
  // extend a basis of s0 to one of s
  std::vector<BitVec> extension;
  Subspace grown = s0;
  for (std::size_t i = 0; i < s.basis().rows() && extension.size() < lambda; ++i) {
    BitVec cand = s.basis().row(i);
    if (grown.contains(cand)) continue;
    extension.push_back(cand);
    grown = joint_span(grown, Subspace::from_generators(s.ambient_dim(),
                                                        std::vector<BitVec>{cand}));
  }
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < lambda; ++i) {
    std::vector<BitVec> gens;
    for (std::size_t j = 0; j < s0.basis().rows(); ++j) gens.push_back(s0.basis().row(j));
    for (std::size_t j = 0; j < lambda; ++j)
      if (j != i) gens.push_back(extension[j]);
    out.push_back(Subspace::from_generators(s.ambient_dim(), gens));
  }
  return out;
}

ShfFamily sample_shf(const Subspace& s0, const std::vector<Subspace>& intermediates,
                     const Subspace& s, std::size_t added_dim, DeterministicRng& rng) {
  const std::size_t lambda = intermediates.size();
  if (s.dim() != s0.dim() + lambda)
    throw std::invalid_argument("shf: dim(s) must be dim(s0) + lambda");
  if (s0.dim() + lambda + added_dim > s0.ambient_dim())
    throw std::invalid_argument("shf: dimension overflow");
  for (std::size_t i = 0; i < lambda; ++i) {
    const Subspace& si = intermediates[i];
    if (si.dim() != s0.dim() + lambda - 1 || !s0.is_subspace_of(si) || !si.is_subspace_of(s))
      throw std::invalid_argument("shf: invalid chain");
    for (std::size_t j = 0; j < i; ++j)
      if (si == intermediates[j]) throw std::invalid_argument("shf: intermediates must differ");
  }

  ShfFamily fam;
  fam.s0 = s0;
  fam.intermediates = intermediates;
  fam.s = s;
  // fresh dimensions are sampled outside the span of both the running t0 and
  // s, so joint spans below have exact dimensions
  Subspace t0 = s0;
  Subspace avoid = s;
  while (t0.dim() < s0.dim() + added_dim) {
    BitVec v = rng.next_bitvec(s0.ambient_dim());
    if (avoid.contains(v)) continue;
    Subspace line = Subspace::from_generators(s0.ambient_dim(), std::vector<BitVec>{v});
    t0 = joint_span(t0, line);
    avoid = joint_span(avoid, line);
  }
  fam.t0 = t0;
  for (const Subspace& si : intermediates) fam.lifted.push_back(joint_span(t0, si));
  fam.t = joint_span(t0, s);
  return fam;
}

IntersectionEstimate trivial_intersection_probability(std::size_t k, std::size_t r, std::size_t s,
                                                      std::size_t t, std::size_t trials,
                                                      DeterministicRng& rng,
                                                      std::vector<bool>* per_trial) {
  if (r + s > k) throw std::invalid_argument("intersection: r + s > k");
  IntersectionEstimate est;
  est.trials = trials;
  est.reference_bound = 1.0 - double(t) * std::pow(2.0, double(t) - double(s));
  if (t == 0) {
    est.estimate = 1.0;
    if (per_trial) per_trial->assign(trials, true);
    return est;
  }
  Subspace base = random_subspace(rng, k, r);
  std::vector<Subspace> fixed_duals;
  for (std::size_t i = 0; i < t; ++i)
    fixed_duals.push_back(sample_superspace(base, s, rng).dual());
  std::size_t good = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Subspace t_dual = sample_superspace(base, s, rng).dual();
    bool trivial = true;
    for (const Subspace& other : fixed_duals)
      if (intersect(t_dual, other).dim() != 0) {
        trivial = false;
        break;
      }
    if (trivial) ++good;
    if (per_trial) per_trial->push_back(trivial);
  }
  double p = double(good) / double(trials);
  est.estimate = p;
  est.stderr_value = std::sqrt(p * (1.0 - p) / double(trials));
  return est;
}

AntiConcentrationRun anticoncentration_reduction(const Adversary& adversary, std::size_t k,
                                                 std::size_t r, std::size_t s, double epsilon,
                                                 DeterministicRng& rng,
                                                 const std::optional<Subspace>& fixed_base) {
  if (epsilon <= 0 || epsilon > 1) throw std::invalid_argument("anticoncentration: bad epsilon");
  if (r + s > k) throw std::invalid_argument("anticoncentration: r + s > k");
  if (fixed_base && (fixed_base->ambient_dim() != k || fixed_base->dim() != r))
    throw std::invalid_argument("anticoncentration: fixed base has the wrong shape");
  AntiConcentrationRun run;
  run.k = k;
  run.r = r;
  run.s = s;
  run.t = k - r - s;
  run.epsilon = epsilon;
  run.executions = std::size_t(std::ceil(double(k) * double(run.t + 1) / epsilon));

  Subspace base = fixed_base ? *fixed_base : random_subspace(rng, k, r);
  Subspace base_dual = base.dual();
  const std::size_t buckets = run.t + 1;
  const std::size_t bucket_len = (run.executions + buckets - 1) / buckets;
  run.bucket_success.assign(buckets, false);

  Subspace span(k);  // incremental span of the collected vectors
  std::vector<Subspace> winners;  // dual(T) of each bucket's first success
  for (std::size_t i = 0; i < run.executions; ++i) {
    Subspace t_space = sample_superspace(base, s, rng);
    MembershipOracle oracle(t_space);
    BitVec u = adversary(oracle);
    run.max_adversary_queries = std::max(run.max_adversary_queries, oracle.queries());
    Subspace t_dual = t_space.dual();

    AntiConcentrationTrial trial{OutputClass::kOutsideSDual, false};
    if (u.is_zero())
      trial.cls = OutputClass::kZero;
    else if (t_dual.contains(u))
      trial.cls = OutputClass::kInTDualNonzero;
    else if (base_dual.contains(u))
      trial.cls = OutputClass::kInSDualOnly;

    if (base_dual.contains(u) && !u.is_zero()) {
      trial.counted_in_span = true;
      run.collected.push_back(u);
      if (!span.contains(u)) {
        span = joint_span(span, Subspace::from_generators(k, std::vector<BitVec>{u}));
        ++run.span_dimension;
      }
    }

    std::size_t bucket = i / bucket_len;
    if (!run.bucket_success[bucket] && trial.cls == OutputClass::kInTDualNonzero) {
      bool disjoint = true;
      for (const Subspace& w : winners)
        if (intersect(t_dual, w).dim() != 0) {
          disjoint = false;
          break;
        }
      if (disjoint) {
        run.bucket_success[bucket] = true;
        winners.push_back(t_dual);
      }
    }
    run.trials.push_back(trial);
  }
  run.hiding_reference = double(run.max_adversary_queries) * double(run.executions) *
                         double(run.executions) * double(s) /
                         std::sqrt(std::pow(2.0, double(k - r - s)));
  return run;
}

}  // namespace ossig
