#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <memory>
#include <set>

#include "doctest.h"
#include "ossig/stats.hpp"
#include "ossig/subspace_lab.hpp"
#include "test_util.hpp"

using namespace ossig;

TEST_CASE("gaussian binomial: small table") {
  CHECK(stats::gaussian_binomial(3, 1) == 7);
  CHECK(stats::gaussian_binomial(4, 2) == 35);
  CHECK(stats::gaussian_binomial(5, 0) == 1);
  CHECK(stats::gaussian_binomial(5, 5) == 1);
  CHECK(stats::gaussian_binomial(2, 3) == 0);
}

TEST_CASE("sample_superspace: base cases and containment") {
  auto r = testutil::rng("lab-super");
  Subspace base = random_subspace(r, 6, 2);
  CHECK(sample_superspace(base, 0, r) == base);
  for (int i = 0; i < 100; ++i) {
    Subspace t = sample_superspace(base, 3, r);
    CHECK(t.dim() == 5);
    CHECK(base.is_subspace_of(t));
    CHECK(t.dual().is_subspace_of(base.dual()));
    CHECK(t.dual().dim() == 6 - 5);
  }
  CHECK_THROWS_AS(sample_superspace(base, 5, r), std::invalid_argument);
}

TEST_CASE("enumerate_superspaces: counts match the gaussian binomial") {
  auto r = testutil::rng("lab-enum");
  for (auto [k, rdim, s] : {std::tuple<std::size_t, std::size_t, std::size_t>{4, 1, 1},
                            {4, 1, 2},
                            {5, 2, 1},
                            {6, 2, 2}}) {
    Subspace base = random_subspace(r, k, rdim);
    auto all = enumerate_superspaces(base, s);
    CHECK(all.size() == stats::gaussian_binomial(k - rdim, s));
    for (const Subspace& t : all) {
      CHECK(t.dim() == rdim + s);
      CHECK(base.is_subspace_of(t));
    }
  }
}

TEST_CASE("superspace sampling is uniform over the 7 candidates") {
  auto r = testutil::rng("lab-uniform");
  Subspace base = random_subspace(r, 4, 1);
  auto all = enumerate_superspaces(base, 1);
  REQUIRE(all.size() == 7);
  std::map<std::string, std::size_t> index;
  auto key_of = [](const Subspace& s) {
    std::string key;
    for (std::size_t i = 0; i < s.basis().rows(); ++i) key += s.basis().row(i).to_hex() + ",";
    return key;
  };
  for (std::size_t i = 0; i < all.size(); ++i) index[key_of(all[i])] = i;
  std::vector<std::size_t> counts(7, 0);
  const std::size_t trials = 7000;
  for (std::size_t i = 0; i < trials; ++i) ++counts[index.at(key_of(sample_superspace(base, 1, r)))];
  std::vector<double> expected(7, trials / 7.0);
  CHECK(stats::chi_square_pvalue(stats::chi_square_statistic(counts, expected), 6) > 0.001);
}

TEST_CASE("membership oracle: agrees with coordinate solving, counts queries") {
  auto r = testutil::rng("lab-member");
  Subspace s = random_subspace(r, 10, 4);
  MembershipOracle oracle(s);
  CHECK(oracle(BitVec(10)));
  for (std::size_t i = 0; i < s.basis().rows(); ++i) CHECK(oracle(s.basis().row(i)));
  std::size_t checked = 0;
  for (std::uint64_t vi = 0; vi < (1u << 10); ++vi) {
    BitVec v = BitVec::from_u64(10, vi);
    bool by_coords = coordinates(s.basis(), v).has_value();
    CHECK(oracle(v) == by_coords);
    ++checked;
  }
  CHECK(oracle.queries() == checked + 1 + s.basis().rows());
}

TEST_CASE("shf family: chain shapes, degenerate s = 0, index function") {
  auto r = testutil::rng("lab-shf");
  const std::size_t k = 10, rdim = 2, lambda = 3;
  Subspace s0 = random_subspace(r, k, rdim);
  Subspace s = sample_superspace(s0, lambda, r);
  auto intermediates = canonical_intermediates(s0, s);
  REQUIRE(intermediates.size() == lambda);

  ShfFamily flat = sample_shf(s0, intermediates, s, 0, r);
  CHECK(flat.t0 == s0);
  CHECK(flat.t == s);
  for (std::size_t i = 0; i < lambda; ++i) CHECK(flat.lifted[i] == intermediates[i]);

  ShfFamily fam = sample_shf(s0, intermediates, s, 2, r);
  CHECK(fam.t0.dim() == rdim + 2);
  CHECK(fam.t.dim() == rdim + lambda + 2);
  CHECK(s0.is_subspace_of(fam.t0));
  for (std::size_t i = 0; i < lambda; ++i) {
    CHECK(fam.t0.is_subspace_of(fam.lifted[i]));
    CHECK(fam.lifted[i].is_subspace_of(fam.t));
    CHECK(fam.lifted[i].dim() == fam.t0.dim() + lambda - 1);
  }

  // the index is constant on each parallel coset of S0 inside S and
  // injective across the cosets (and the lifted index extends it)
  std::map<std::string, std::set<std::uint64_t>> index_to_cosets;
  for (const BitVec& v : s.enumerate()) {
    BitVec idx = fam.index_of(v, false);
    CHECK(fam.index_of(v, true) == idx);  // lifted chain agrees on S
    BitVec rep = s0.reduce(v);
    index_to_cosets[idx.to_hex()].insert(rep.to_u64());
  }
  CHECK(index_to_cosets.size() == (std::uint64_t(1) << lambda));
  for (auto& [idx, reps] : index_to_cosets) CHECK(reps.size() == 1);
}

TEST_CASE("trivial intersection probability: edges and the loose bound") {
  auto r = testutil::rng("lab-intersect");
  IntersectionEstimate none = trivial_intersection_probability(10, 2, 4, 0, 50, r);
  CHECK(none.estimate == 1.0);

  // s far above t: the reference bound is sharp enough to be informative
  IntersectionEstimate est = trivial_intersection_probability(12, 2, 7, 3, 4000, r);
  CHECK(est.reference_bound == 1.0 - 3.0 * std::pow(2.0, 3.0 - 7.0));
  CHECK(est.estimate >= est.reference_bound - 3.0 * est.stderr_value);
}

TEST_CASE("anticoncentration reduction: scripted adversaries") {
  const std::size_t k = 10, rdim = 3, s = 4;  // t = 3
  auto r = testutil::rng("lab-anti");

  // the zero adversary never contributes to the span
  AntiConcentrationRun zero = anticoncentration_reduction(
      [k](const MembershipOracle&) { return BitVec(k); }, k, rdim, s, 0.5, r);
  CHECK(zero.span_dimension == 0);
  CHECK(zero.executions == std::size_t(std::ceil(10.0 * 4.0 / 0.5)));
  for (const auto& trial : zero.trials) CHECK(trial.cls == OutputClass::kZero);

  // round-robin over a fixed dual basis of S reaches full span dimension
  Subspace base = random_subspace(r, k, rdim);
  Subspace base_dual = base.dual();
  auto counter = std::make_shared<std::size_t>(0);
  Adversary round_robin = [&base_dual, counter, k](const MembershipOracle&) {
    return base_dual.basis().row((*counter)++ % base_dual.dim());
  };
  AntiConcentrationRun rr =
      anticoncentration_reduction(round_robin, k, rdim, s, 0.5, r, base);
  CHECK(rr.span_dimension == k - rdim);
  // incremental rank agrees with the batch rank of everything collected
  BitMatrix collected = BitMatrix::from_rows(rr.collected);
  CHECK(rank(collected) == rr.span_dimension);

  // a perfect dual-hitting adversary: reconstructs T and samples its dual
  std::size_t trial_no = 0;
  Adversary dual_sampler = [k, &trial_no](const MembershipOracle& oracle) {
    std::vector<BitVec> members;
    for (std::uint64_t vi = 0; vi < (std::uint64_t(1) << k); ++vi) {
      BitVec v = BitVec::from_u64(k, vi);
      if (oracle(v)) members.push_back(v);
    }
    Subspace t_dual = Subspace::from_generators(k, members).dual();
    DeterministicRng pick(testutil::seed("lab-anti-pick"), std::to_string(trial_no++));
    for (;;) {
      BitVec u = t_dual.element(pick.next_below(std::uint64_t(1) << t_dual.dim()));
      if (!u.is_zero()) return u;
    }
  };
  AntiConcentrationRun hit =
      anticoncentration_reduction(dual_sampler, k, rdim, s, 0.9, r, base);
  for (const auto& trial : hit.trials) CHECK(trial.cls == OutputClass::kInTDualNonzero);
  // bucket bookkeeping: with every output in the dual, early buckets succeed
  CHECK(hit.bucket_success.size() == k - rdim - s + 1);
  CHECK(hit.bucket_success[0]);
}
