#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "ossig/oss.hpp"
#include "test_util.hpp"

using namespace ossig;

namespace {

Params dense_params() {
  // k <= 8 so states stay dense-checkable
  Params p;
  p.lambda = 3;
  p.r = 4;
  p.n = 10;
  p.k = 8;
  p.ell_code = 3;
  p.rounds = 3;
  p.validate();
  return p;
}

// the subspace of ColSpan(a) whose last ell block coordinates all vanish,
// and its one-freed-bit siblings
Subspace block_zero_subspace(const BitMatrix& a, std::size_t ell,
                             std::optional<std::size_t> freed = std::nullopt) {
  const std::size_t k = a.rows();
  std::vector<BitVec> gens;
  Subspace span = colspan(a);
  for (const BitVec& v : span.enumerate()) {
    bool ok = true;
    for (std::size_t j = 0; j < ell && ok; ++j) {
      if (freed && *freed == j) continue;
      if (v.get(k - ell + j)) ok = false;
    }
    if (ok) gens.push_back(v);
  }
  return Subspace::from_generators(k, gens);
}

}  // namespace

TEST_CASE("siggen: support is exactly the fiber (dense check)") {
  Params p = dense_params();
  OracleSuite suite(p, testutil::seed("oss-siggen"));
  auto r = testutil::rng("oss-siggen");
  KeyPair key = siggen(suite, r);

  std::vector<int> amp(1 << p.k, 0);
  for (std::uint64_t xi = 0; xi < (1u << p.n); ++xi) {
    PointOutput out = suite.p_forward(BitVec::from_u64(p.n, xi));
    if (out.y == key.pk) amp[out.u.to_u64()] = 1;
  }
  CHECK(dense_equal_up_to_global_sign(key.sk.to_dense(), DenseState(p.k, amp)));
  CHECK(key.sk.phase().is_zero());

  // measuring every bit yields a vector the inverse oracle accepts
  std::vector<std::size_t> all(p.k);
  for (std::size_t i = 0; i < p.k; ++i) all[i] = i;
  auto [u, post] = key.sk.measure_bits(all, r);
  CHECK(suite.p_inverse(key.pk, u).has_value());
}

TEST_CASE("siggen: reproducible pk sequence per seed stream") {
  Params p = dense_params();
  auto sequence = [](const Params& params) {
    OracleSuite suite(params, testutil::seed("oss-repro"));
    auto r = testutil::rng("oss-repro");
    std::vector<std::string> pks;
    for (int i = 0; i < 10; ++i) pks.push_back(siggen(suite, r).pk.to_hex());
    return pks;
  };
  CHECK(sequence(p) == sequence(p));
}

TEST_CASE("sign then verify at toy parameters") {
  Params p = toy_params();
  auto code_rng = testutil::rng("oss-code");
  LinearCode code = sample_code(code_rng, 3, p.ell_code);
  std::size_t successes = 0;
  const std::size_t trials = 200;
  for (std::size_t i = 0; i < trials; ++i) {
    auto seed = DeterministicRng::derive_seed(testutil::seed("oss-roundtrip"),
                                              "t" + std::to_string(i));
    OracleSuite suite(p, seed);
    DeterministicRng r(seed, "trial");
    KeyPair key = siggen(suite, r);
    BitVec msg = r.next_bitvec(3);
    auto [sig, transcript] = sign(suite, key, msg, code, r);
    CHECK(suite.p_inverse(key.pk, sig.sigma).has_value());
    if (transcript.success) {
      CHECK(verify(suite, key.pk, msg, sig.sigma, code));
      ++successes;
    }
    CHECK(key.spent);
    CHECK_THROWS_AS(sign(suite, key, msg, code, r), std::runtime_error);
  }
  CHECK(double(successes) / double(trials) >= 0.85);
}

TEST_CASE("zero rounds degenerates to a uniform fiber sample") {
  Params p = toy_params();
  p.rounds = 0;
  OracleSuite suite(p, testutil::seed("oss-zero-rounds"));
  auto r = testutil::rng("oss-zero-rounds");
  LinearCode code = sample_code(r, 3, p.ell_code);
  KeyPair key = siggen(suite, r);
  auto [sig, transcript] = sign(suite, key, r.next_bitvec(3), code, r);
  CHECK(transcript.rounds.empty());
  CHECK(suite.p_inverse(key.pk, sig.sigma).has_value());
  CHECK(transcript.success ==
        code.within_radius(sig.sigma.slice(p.k - p.ell_code, p.ell_code),
                           code.encode(sig.message)));
}

TEST_CASE("dual functionals: accept set is the block-zero dual, coordinates agree") {
  Params p = dense_params();
  OracleSuite suite(p, testutil::seed("oss-duals"));
  auto r = testutil::rng("oss-duals");
  BitVec y = suite.p_forward(r.next_bitvec(p.n)).y;
  const BitMatrix& a = suite.coset(y).a;
  DualFunctionals duals = build_dual_functionals(a, p.ell_code);

  Subspace s_y = block_zero_subspace(a, p.ell_code);
  CHECK(duals.accept == s_y.dual());

  for (const BitVec& v : duals.accept.enumerate()) {
    auto c = suite.d_oracle(y, v);
    REQUIRE(c.has_value());
    for (std::size_t j = 0; j < p.ell_code; ++j)
      CHECK(c->get(j) == duals.linear[j].dot(v));
  }
}

TEST_CASE("signing walks the predicted state forms (dense lockstep)") {
  Params p = dense_params();
  auto seed = testutil::seed("oss-stateform");
  OracleSuite suite(p, seed);
  DeterministicRng r(seed, "trial");
  LinearCode code = sample_code(r, 1, p.ell_code);
  KeyPair key = siggen(suite, r);
  BitVec msg = r.next_bitvec(1);
  BitVec target = code.encode(msg);

  const BitMatrix& a = suite.coset(key.pk).a;
  Subspace fiber_span = colspan(a);
  Subspace s_y = block_zero_subspace(a, p.ell_code);
  std::vector<Subspace> s_yj;
  for (std::size_t j = 0; j < p.ell_code; ++j)
    s_yj.push_back(block_zero_subspace(a, p.ell_code, j));
  for (std::size_t j = 0; j < p.ell_code; ++j) {
    CHECK(s_y.is_subspace_of(s_yj[j]));
    CHECK(s_yj[j].dim() == s_y.dim() + 1);
    CHECK(s_yj[j].is_subspace_of(fiber_span));
  }
  DualFunctionals duals = build_dual_functionals(a, p.ell_code);

  // replay the signing loop by hand on the same rng stream the library
  // consumes, checking the state form at every stage
  DeterministicRng mine(seed, "replay");
  DeterministicRng theirs(seed, "replay");

  SymbolicCosetState state = key.sk;
  std::vector<std::size_t> block(p.ell_code);
  for (std::size_t j = 0; j < p.ell_code; ++j) block[j] = p.k - p.ell_code + j;

  for (std::size_t t = 0; t < p.rounds; ++t) {
    auto [measured, after] = state.measure_bits(block, mine);
    state = after;
    CHECK(state.support().subspace() == s_y);  // collapsed block leaves S_y

    state = state.hadamard_all();
    CHECK(state.support().subspace() == s_y.dual());  // dual form
    std::vector<std::size_t> mismatches;
    for (std::size_t j = 0; j < p.ell_code; ++j)
      if (measured.get(j) != target.get(j)) mismatches.push_back(j);
    for (std::size_t j : mismatches) {
      CHECK(duals.accept.contains(state.support().offset()));
      CHECK(state.support().subspace().is_subspace_of(duals.accept));
      auto [bit, next] = state.measure_functional({duals.linear[j], false}, mine);
      state = next;
    }
    state = state.hadamard_all();

    Subspace expected = s_y;
    for (std::size_t j : mismatches) expected = joint_span(expected, s_yj[j]);
    CHECK(state.support().subspace() == expected);
    CHECK(fiber_span.contains(state.support().offset() ^ suite.coset(key.pk).b));
    CHECK(s_y.dual().contains(state.phase()));  // phase stays in dual(S_y)
  }

  // the library loop consumes the same stream, so outcomes coincide
  KeyPair key2{key.pk, key.sk, false};
  auto [sig, transcript] = sign(suite, key2, msg, code, theirs);
  std::vector<std::size_t> all(p.k);
  for (std::size_t i = 0; i < p.k; ++i) all[i] = i;
  auto [sigma, final_state] = state.measure_bits(all, mine);
  CHECK(sig.sigma == sigma);
}

TEST_CASE("verify: in-coset block perturbations flip the verdict at the radius") {
  Params p = toy_params();
  OracleSuite suite(p, testutil::seed("oss-perturb"));
  auto r = testutil::rng("oss-perturb");
  LinearCode code = sample_code(r, 3, p.ell_code);
  KeyPair key = siggen(suite, r);
  BitVec msg = r.next_bitvec(3);
  BitVec target = code.encode(msg);
  const CosetDescription& c = suite.coset(key.pk);
  BitMatrix bottom = c.a.rows_slice(p.k - p.ell_code, p.ell_code);

  // build sigma inside the fiber with an exact codeword block
  BitVec current = c.b.slice(p.k - p.ell_code, p.ell_code);
  auto z = solve(bottom, current ^ target);
  REQUIRE(z.has_value());
  BitVec sigma = c.a.mat_vec(*z) ^ c.b;
  REQUIRE(verify(suite, key.pk, msg, sigma, code));

  // flip the block by an in-coset vector of weight radius: still verifies
  auto flip_block = [&](const BitVec& block_delta) {
    auto zz = solve(bottom, block_delta);
    REQUIRE(zz.has_value());
    return sigma ^ c.a.mat_vec(*zz);
  };
  BitVec small(p.ell_code);
  for (std::size_t j = 0; j < code.radius(); ++j) small.set(j, true);
  CHECK(verify(suite, key.pk, msg, flip_block(small), code));

  // one bit past the radius: same coset, rejected
  BitVec big = small;
  big.set(code.radius(), true);
  CHECK_FALSE(verify(suite, key.pk, msg, flip_block(big), code));

  // off-coset vectors are rejected outright
  Subspace span = colspan(c.a);
  for (;;) {
    BitVec probe = r.next_bitvec(p.k);
    if (!span.contains(probe ^ c.b)) {
      CHECK_FALSE(verify(suite, key.pk, msg, probe, code));
      break;
    }
  }
}

TEST_CASE("strong unforgeability witness: extraction and uniqueness") {
  Params p = dense_params();
  OracleSuite suite(p, testutil::seed("oss-witness"));
  auto r = testutil::rng("oss-witness");
  LinearCode code = sample_code(r, 1, p.ell_code);
  KeyPair key = siggen(suite, r);
  const CosetDescription& c = suite.coset(key.pk);
  BitMatrix bottom = c.a.rows_slice(p.k - p.ell_code, p.ell_code);

  auto sigma_for = [&](const BitVec& msg) {
    BitVec current = c.b.slice(p.k - p.ell_code, p.ell_code);
    auto z = solve(bottom, current ^ code.encode(msg));
    REQUIRE(z.has_value());
    return c.a.mat_vec(*z) ^ c.b;
  };
  BitVec m0 = BitVec::from_bits({0}), m1 = BitVec::from_bits({1});
  Signature s0{sigma_for(m0), m0}, s1{sigma_for(m1), m1};
  REQUIRE(verify(suite, key.pk, m0, s0.sigma, code));
  REQUIRE(verify(suite, key.pk, m1, s1.sigma, code));
  CHECK(s0.sigma != s1.sigma);  // unique decoding forces distinct blocks

  auto witness = strong_unforgeability_witness(suite, key.pk, s0, s1);
  REQUIRE(witness.has_value());
  CHECK(witness->first != witness->second);
  CHECK(suite.p_forward(witness->first).y == key.pk);
  CHECK(suite.p_forward(witness->second).y == key.pk);

  CHECK_FALSE(strong_unforgeability_witness(suite, key.pk, s0, s0).has_value());

  Signature junk{r.next_bitvec(p.k), m1};
  if (!suite.p_inverse(key.pk, junk.sigma))
    CHECK_THROWS_AS(strong_unforgeability_witness(suite, key.pk, s0, junk),
                    std::invalid_argument);
}

TEST_CASE("any two verifying signatures on distinct messages collide in the hash") {
  Params p = dense_params();
  OracleSuite suite(p, testutil::seed("oss-pairs"));
  auto r = testutil::rng("oss-pairs");
  LinearCode code = sample_code(r, 1, p.ell_code);
  KeyPair key = siggen(suite, r);
  const CosetDescription& c = suite.coset(key.pk);
  Subspace span = colspan(c.a);

  // adversarially perturbed coset points, kept only when they verify
  std::map<std::uint64_t, std::vector<BitVec>> verifying;  // message -> sigmas
  for (int i = 0; i < 400; ++i) {
    BitVec sigma = c.b ^ span.element(r.next_below(std::uint64_t(1) << span.dim()));
    for (std::uint64_t mi = 0; mi < 2; ++mi) {
      BitVec m = BitVec::from_u64(1, mi);
      if (verify(suite, key.pk, m, sigma, code)) verifying[mi].push_back(sigma);
    }
  }
  REQUIRE(verifying.size() == 2);
  int pairs = 0;
  for (const BitVec& sig0 : verifying[0])
    for (const BitVec& sig1 : verifying[1]) {
      auto witness = strong_unforgeability_witness(
          suite, key.pk, Signature{sig0, BitVec::from_u64(1, 0)},
          Signature{sig1, BitVec::from_u64(1, 1)});
      REQUIRE(witness.has_value());
      REQUIRE(witness->first != witness->second);
      REQUIRE(suite.p_forward(witness->first).y == suite.p_forward(witness->second).y);
      if (++pairs > 200) return;
    }
  CHECK(pairs > 0);
}
