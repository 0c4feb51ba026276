#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ossig/ecc.hpp"
#include "test_util.hpp"

using namespace ossig;

TEST_CASE("min distance brute force: frozen examples") {
  CHECK(min_distance_bruteforce(BitMatrix::from_rows({BitVec::from_bits({1, 1, 1})})) == 3);
  BitMatrix split = BitMatrix::from_rows({BitVec::from_bits({1, 1, 1, 0, 0, 0}),
                                          BitVec::from_bits({0, 0, 0, 1, 1, 1})});
  CHECK(min_distance_bruteforce(split) == 3);  // four codewords: 0, two weight-3, one weight-6
  CHECK(min_distance_bruteforce(BitMatrix::identity(5)) == 1);
}

TEST_CASE("the weight-3 split generator is an acceptable length-6 code") {
  // distance 3 > floor(6/3) = 2, so the certificate holds
  BitMatrix split = BitMatrix::from_rows({BitVec::from_bits({1, 1, 1, 0, 0, 0}),
                                          BitVec::from_bits({0, 0, 0, 1, 1, 1})});
  LinearCode code{2, 6, split, min_distance_bruteforce(split)};
  CHECK(code.certified_min_distance == 3);
  CHECK(code.certified_min_distance > code.code_len / 3);
}

TEST_CASE("sample_code: postconditions and edge rates") {
  auto r = testutil::rng("ecc-sample");
  LinearCode tiny = sample_code(r, 1, 6);
  CHECK(tiny.msg_len == 1);
  CHECK(tiny.encode(BitVec::from_bits({1})).popcount() >= 3);  // single nonzero codeword

  LinearCode code = sample_code(r, 3, 12);
  CHECK(rank(code.generator) == 3);
  CHECK(code.certified_min_distance > 4);
  CHECK(code.certified_min_distance == min_distance_bruteforce(code.generator));

  // no [6,5] binary code has distance > 2 (checked by exhausting retries)
  CHECK_THROWS_AS(sample_code(r, 5, 6, 50), std::runtime_error);
}

TEST_CASE("encode: linearity and generator rows") {
  auto r = testutil::rng("ecc-encode");
  LinearCode code = sample_code(r, 3, 12);
  CHECK(code.encode(BitVec(3)).is_zero());
  for (std::size_t j = 0; j < 3; ++j) {
    BitVec unit(3);
    unit.set(j, true);
    CHECK(code.encode(unit) == code.generator.row(j));
  }
  for (int i = 0; i < 100; ++i) {
    BitVec a = r.next_bitvec(3), b = r.next_bitvec(3);
    CHECK((code.encode(a) ^ code.encode(b)) == code.encode(a ^ b));
  }
}

TEST_CASE("within_radius: frozen boundary at ell = 12") {
  auto r = testutil::rng("ecc-radius");
  LinearCode code = sample_code(r, 3, 12);
  BitVec c = code.encode(r.next_bitvec(3));
  CHECK(code.within_radius(c, c));
  BitVec two = c, three = c;
  two.flip(0);
  two.flip(5);
  three.flip(0);
  three.flip(5);
  three.flip(9);
  CHECK(code.within_radius(two, c));        // distance 2 <= floor(12/6)
  CHECK_FALSE(code.within_radius(three, c));  // distance 3
}

TEST_CASE("unique decoding: radius balls are pairwise disjoint, exhaustively") {
  auto r = testutil::rng("ecc-unique");
  for (auto [msg_len, code_len] : {std::pair<std::size_t, std::size_t>{1, 6},
                                   {2, 9},
                                   {3, 12},
                                   {3, 14}}) {
    LinearCode code = sample_code(r, msg_len, code_len);
    for (std::uint64_t wi = 0; wi < (std::uint64_t(1) << code_len); ++wi) {
      BitVec word = BitVec::from_u64(code_len, wi);
      std::size_t close = 0;
      for (std::uint64_t mi = 0; mi < (std::uint64_t(1) << msg_len); ++mi)
        if (code.within_radius(word, code.encode(BitVec::from_u64(msg_len, mi)))) ++close;
      REQUIRE(close <= 1);
    }
  }
}

TEST_CASE("resampling at rate <= 1/4 terminates quickly") {
  auto r = testutil::rng("ecc-retries");
  std::size_t total = 0;
  const std::size_t runs = 100;
  for (std::size_t i = 0; i < runs; ++i) {
    std::size_t retries = 0;
    sample_code(r, 3, 12, 1000, &retries);
    total += retries;
  }
  CHECK(double(total) / double(runs) < 10.0);
}

TEST_CASE("code json round trip") {
  auto r = testutil::rng("ecc-json");
  LinearCode code = sample_code(r, 3, 12);
  LinearCode back = LinearCode::from_json_string(code.to_json_string());
  CHECK(back.generator == code.generator);
  CHECK(back.certified_min_distance == code.certified_min_distance);
}
