#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "branch_walk.hpp"
#include "doctest.h"
#include "ossig/coset_state.hpp"
#include "test_util.hpp"

using namespace ossig;

TEST_CASE("uniform_over: frozen small states") {
  // point coset -> classical basis state
  SymbolicCosetState zero = SymbolicCosetState::uniform_over(Coset(Subspace(3), BitVec(3)));
  DenseState d = zero.to_dense();
  CHECK(d.amplitudes()[0] == 1);
  CHECK(d.support_size() == 1);

  // full space -> uniform superposition
  SymbolicCosetState full =
      SymbolicCosetState::uniform_over(Coset(Subspace::full(3), BitVec(3)));
  CHECK(full.to_dense().support_size() == 8);

  // k=2, span{(1,1)} -> (|00> + |11>)/sqrt(2)
  Subspace diag = Subspace::from_generators(2, std::vector<BitVec>{BitVec::from_bits({1, 1})});
  SymbolicCosetState bell = SymbolicCosetState::uniform_over(Coset(diag, BitVec(2)));
  auto amp = bell.to_dense().amplitudes();
  CHECK(amp[0b00] == 1);
  CHECK(amp[0b11] == 1);
  CHECK(amp[0b01] == 0);
  CHECK(amp[0b10] == 0);
}

TEST_CASE("hadamard_all: frozen examples") {
  SymbolicCosetState zero = SymbolicCosetState::basis_state(BitVec(4));
  SymbolicCosetState spread = zero.hadamard_all();
  CHECK(spread.support().dim() == 4);
  CHECK(spread.phase().is_zero());

  // Bell-type state is its own transform (checked against the dense oracle)
  Subspace diag = Subspace::from_generators(2, std::vector<BitVec>{BitVec::from_bits({1, 1})});
  SymbolicCosetState bell = SymbolicCosetState::uniform_over(Coset(diag, BitVec(2)));
  CHECK(bell.hadamard_all() == bell);
  CHECK(dense_equal_up_to_global_sign(bell.hadamard_all().to_dense(),
                                      bell.to_dense().hadamard_all()));
}

TEST_CASE("hadamard_all is an involution on canonical forms") {
  auto r = testutil::rng("had-involution");
  for (int i = 0; i < 1000; ++i) {
    std::size_t k = 1 + r.next_below(10);
    SymbolicCosetState st = branchwalk::random_state(r, k);
    CHECK(st.hadamard_all().hadamard_all() == st);
  }
}

TEST_CASE("hadamard_all agrees with the dense transform on 500 random k=6 states") {
  auto r = testutil::rng("had-dense");
  for (int i = 0; i < 500; ++i) {
    SymbolicCosetState st = branchwalk::random_state(r, 6);
    CHECK(dense_equal_up_to_global_sign(st.hadamard_all().to_dense(),
                                        st.to_dense().hadamard_all()));
  }
}

TEST_CASE("phase is well-defined modulo the support dual") {
  auto r = testutil::rng("phase-quotient");
  for (int i = 0; i < 300; ++i) {
    std::size_t k = 1 + r.next_below(8);
    SymbolicCosetState st = branchwalk::random_state(r, k);
    const Subspace& dual = st.support_dual();
    BitVec shift = dual.element(r.next_below(std::uint64_t(1) << dual.dim()));
    SymbolicCosetState shifted(st.support(), st.phase() ^ shift);
    CHECK(shifted == st);
    CHECK(dense_equal_up_to_global_sign(shifted.to_dense(), st.to_dense()));
  }
}

TEST_CASE("measure_functional: constant functional leaves the state alone") {
  auto r = testutil::rng("measure-const");
  Subspace diag = Subspace::from_generators(2, std::vector<BitVec>{BitVec::from_bits({1, 1})});
  SymbolicCosetState bell = SymbolicCosetState::uniform_over(Coset(diag, BitVec(2)));
  // parity <(1,1), u> is 0 on the whole support
  AffineFunctional parity{BitVec::from_bits({1, 1}), false};
  auto [outcome, post] = bell.measure_functional(parity, r);
  CHECK_FALSE(outcome);
  CHECK(post == bell);
}

TEST_CASE("measure_functional: Bell state bit collapse") {
  Subspace diag = Subspace::from_generators(2, std::vector<BitVec>{BitVec::from_bits({1, 1})});
  SymbolicCosetState bell = SymbolicCosetState::uniform_over(Coset(diag, BitVec(2)));
  AffineFunctional bit0{BitVec::from_bits({1, 0}), false};
  auto branches = bell.branches_for(bit0);
  REQUIRE(branches.balanced);
  CHECK(branches.on_zero->support() == Coset(Subspace(2), BitVec::from_bits({0, 0})));
  CHECK(branches.on_one->support() == Coset(Subspace(2), BitVec::from_bits({1, 1})));
}

TEST_CASE("affine dichotomy: every outcome weight is 0, half or all") {
  auto r = testutil::rng("dichotomy");
  for (int i = 0; i < 400; ++i) {
    std::size_t k = 1 + r.next_below(8);
    SymbolicCosetState st = branchwalk::random_state(r, k);
    AffineFunctional f{r.next_bitvec(k), r.next_bit()};
    auto split = st.to_dense().split_on(f);
    std::size_t total = split.count_zero + split.count_one;
    bool dichotomous = split.count_zero == 0 || split.count_one == 0 ||
                       (split.count_zero == total / 2 && split.count_one == total / 2);
    CHECK(dichotomous);
    // and the symbolic branch structure matches
    auto branches = st.branches_for(f);
    CHECK(branches.balanced == (split.count_zero == split.count_one));
  }
}

TEST_CASE("measure_bits equals sequential coordinate functionals; projective idempotence") {
  auto r = testutil::rng("measure-bits");
  for (int i = 0; i < 200; ++i) {
    std::size_t k = 2 + r.next_below(7);
    SymbolicCosetState st = branchwalk::random_state(r, k);
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < k; ++j)
      if (r.next_bit()) idx.push_back(j);
    if (idx.empty()) idx.push_back(r.next_below(k));

    auto fork = testutil::rng("measure-bits-fork-" + std::to_string(i));
    auto fork2 = testutil::rng("measure-bits-fork-" + std::to_string(i));
    auto [outs, post] = st.measure_bits(idx, fork);
    // same rng stream, by-hand sequential functionals
    SymbolicCosetState manual = st;
    BitVec expect(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
      AffineFunctional f{BitVec(k), false};
      f.linear.set(idx[j], true);
      auto [bit, next] = manual.measure_functional(f, fork2);
      expect.set(j, bit);
      manual = next;
    }
    CHECK(outs == expect);
    CHECK(post == manual);

    // re-measuring the same indices is deterministic and does not move
    auto [outs2, post2] = post.measure_bits(idx, fork);
    CHECK(outs2 == outs);
    CHECK(post2 == post);
  }
}

TEST_CASE("measuring every bit of a coset state samples the coset") {
  auto r = testutil::rng("measure-all");
  for (int i = 0; i < 100; ++i) {
    std::size_t k = 1 + r.next_below(8);
    Coset c(random_subspace(r, k, r.next_below(k + 1)), r.next_bitvec(k));
    SymbolicCosetState st = SymbolicCosetState::uniform_over(c);
    std::vector<std::size_t> all(k);
    for (std::size_t j = 0; j < k; ++j) all[j] = j;
    auto [outs, post] = st.measure_bits(all, r);
    CHECK(c.contains(outs));
    CHECK(post.support().dim() == 0);
    CHECK(post.support().offset() == outs);
  }
}

TEST_CASE("lockstep branch enumeration against the dense oracle") {
  auto r = testutil::rng("walker");
  std::size_t leaves = 0;
  for (int i = 0; i < 60; ++i) {
    std::size_t k = 1 + r.next_below(8);
    SymbolicCosetState st = branchwalk::random_state(r, k);
    auto script = branchwalk::random_script(r, k, 8, 5);
    leaves += branchwalk::walk_all_branches(st, st.to_dense(), script);
  }
  CHECK(leaves >= 60);
}

TEST_CASE("state json round trip") {
  auto r = testutil::rng("state-json");
  for (int i = 0; i < 50; ++i) {
    SymbolicCosetState st = branchwalk::random_state(r, 1 + r.next_below(10));
    CHECK(SymbolicCosetState::from_json_string(st.to_json_string()) == st);
  }
}

TEST_CASE("to_dense guards its range") {
  SymbolicCosetState big =
      SymbolicCosetState::uniform_over(Coset(Subspace::full(17), BitVec(17)));
  CHECK_THROWS_AS(big.to_dense(), std::invalid_argument);
}
