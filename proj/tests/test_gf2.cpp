#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "ossig/gf2.hpp"
#include "ossig/stats.hpp"
#include "test_util.hpp"

using namespace ossig;

TEST_CASE("bitvec basics and hex layout") {
  BitVec v = BitVec::from_bits({1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(v.to_hex() == "80");  // bit 0 sits in the MSB of byte 0
  BitVec w = BitVec::from_bits({0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(w.to_hex() == "01");
  CHECK(BitVec::from_bits({1, 1, 0}).to_hex() == "c0");
  CHECK(BitVec::from_hex("c0", 3) == BitVec::from_bits({1, 1, 0}));
  CHECK_THROWS(BitVec::from_hex("ff", 3));  // pad bits must be zero

  auto r = testutil::rng("bitvec-roundtrip");
  for (int i = 0; i < 200; ++i) {
    std::size_t len = 1 + r.next_below(130);
    BitVec x = r.next_bitvec(len);
    CHECK(BitVec::from_hex(x.to_hex(), len) == x);
  }

  BitVec a = BitVec::from_bits({1, 0, 1});
  BitVec b = BitVec::from_bits({1, 1});
  CHECK(BitVec::concat(a, b) == BitVec::from_bits({1, 0, 1, 1, 1}));
  CHECK(BitVec::concat(a, b).slice(3, 2) == b);
}

TEST_CASE("rank: frozen examples and enumeration oracle") {
  CHECK(rank(BitMatrix::identity(3)) == 3);
  CHECK(rank(BitMatrix(2, 5)) == 0);
  BitMatrix m = BitMatrix::from_rows(
      {BitVec::from_bits({1, 1, 0}), BitVec::from_bits({0, 1, 1}), BitVec::from_bits({1, 0, 1})});
  CHECK(rank(m) == 2);  // third row is the sum of the first two
  CHECK(testutil::rank_by_enumeration(m) == 2);

  auto r = testutil::rng("rank-oracle");
  for (int i = 0; i < 100; ++i) {
    BitMatrix a = random_matrix(r, 1 + r.next_below(6), 1 + r.next_below(8));
    CHECK(rank(a) == testutil::rank_by_enumeration(a));
  }
}

TEST_CASE("solve: frozen examples") {
  BitVec t = BitVec::from_bits({1, 0, 1});
  auto z = solve(BitMatrix::identity(3), t);
  REQUIRE(z.has_value());
  CHECK(*z == t);

  // columns (1,1) and (0,1)
  BitMatrix m(2, 2);
  m.set(0, 0, true);
  m.set(1, 0, true);
  m.set(1, 1, true);
  auto z2 = solve(m, BitVec::from_bits({1, 0}));
  REQUIRE(z2.has_value());
  CHECK(*z2 == BitVec::from_bits({1, 1}));  // checked against all four candidates

  BitMatrix col(2, 1);
  col.set(0, 0, true);
  col.set(1, 0, true);
  CHECK_FALSE(solve(col, BitVec::from_bits({1, 0})).has_value());
}

TEST_CASE("solve/mat_vec round trip property") {
  auto r = testutil::rng("solve-roundtrip");
  int solved = 0;
  for (int i = 0; i < 300; ++i) {
    std::size_t rows = 1 + r.next_below(8), cols = 1 + r.next_below(8);
    BitMatrix m = random_matrix(r, rows, cols);
    BitVec target = r.next_bitvec(rows);
    auto z = solve(m, target);
    if (z) {
      ++solved;
      CHECK(m.mat_vec(*z) == target);
    }
  }
  CHECK(solved > 0);
}

TEST_CASE("dual: frozen examples and enumeration oracle") {
  CHECK(Subspace::full(4).dual().dim() == 0);
  CHECK(Subspace(5).dual() == Subspace::full(5));

  Subspace s = Subspace::from_generators(
      3, std::vector<BitVec>{BitVec::from_bits({1, 1, 0}), BitVec::from_bits({0, 1, 1})});
  Subspace expected =
      Subspace::from_generators(3, std::vector<BitVec>{BitVec::from_bits({1, 1, 1})});
  CHECK(s.dual() == expected);  // all 8 vectors of Z2^3 scanned by hand

  auto r = testutil::rng("dual-oracle");
  for (int i = 0; i < 60; ++i) {
    std::size_t ambient = 1 + r.next_below(10);
    Subspace sub = random_subspace(r, ambient, r.next_below(ambient + 1));
    CHECK(testutil::as_bitset(sub.dual().enumerate()) == testutil::dual_by_enumeration(sub));
  }
}

TEST_CASE("dual is an involution and dimensions are complementary") {
  auto r = testutil::rng("dual-involution");
  for (int i = 0; i < 1000; ++i) {
    std::size_t ambient = 1 + r.next_below(64);
    Subspace s = random_subspace(r, ambient, r.next_below(ambient + 1));
    CHECK(s.dual().dual() == s);
    CHECK(s.dim() + s.dual().dim() == ambient);
  }
}

TEST_CASE("coordinates: frozen examples") {
  auto c = coordinates(BitMatrix::identity(2), BitVec::from_bits({0, 1}));
  REQUIRE(c.has_value());
  CHECK(*c == BitVec::from_bits({0, 1}));

  BitMatrix rows = BitMatrix::from_rows(
      {BitVec::from_bits({1, 1, 0}), BitVec::from_bits({0, 0, 1})});
  auto c2 = coordinates(rows, BitVec::from_bits({1, 1, 1}));
  REQUIRE(c2.has_value());
  CHECK(*c2 == BitVec::from_bits({1, 1}));

  BitMatrix one = BitMatrix::from_rows({BitVec::from_bits({1, 1, 0})});
  CHECK_FALSE(coordinates(one, BitVec::from_bits({1, 0, 0})).has_value());
}

TEST_CASE("random_full_rank: shape constraints") {
  auto r = testutil::rng("rfr");
  BitMatrix sq = random_full_rank(r, 3, 3);
  CHECK(rank(sq) == 3);
  BitMatrix tall = random_full_rank(r, 4, 2, 2);
  CHECK(rank(tall) == 2);
  CHECK(rank(tall.rows_slice(2, 2)) == 2);
  CHECK_THROWS_AS(random_full_rank(r, 2, 3), std::invalid_argument);
}

TEST_CASE("random_full_rank: 3x3 invertible distribution is uniform") {
  // enumerate the 168 invertible 3x3 matrices and chi-square the sampler
  std::map<std::uint64_t, std::size_t> index;
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    BitMatrix m(3, 3);
    for (int i = 0; i < 9; ++i)
      if ((bits >> i) & 1) m.set(i / 3, i % 3, true);
    if (rank(m) == 3) index.emplace(bits, index.size());
  }
  REQUIRE(index.size() == 168);

  auto r = testutil::rng("rfr-chisq");
  std::vector<std::size_t> counts(168, 0);
  const std::size_t samples = 10000;
  for (std::size_t i = 0; i < samples; ++i) {
    BitMatrix m = random_full_rank(r, 3, 3);
    std::uint64_t bits = 0;
    for (int j = 0; j < 9; ++j)
      if (m.get(j / 3, j % 3)) bits |= std::uint64_t(1) << j;
    ++counts[index.at(bits)];
  }
  std::vector<double> expected(168, double(samples) / 168.0);
  double p = stats::chi_square_pvalue(stats::chi_square_statistic(counts, expected), 167);
  CHECK(p > 0.001);
}

TEST_CASE("joint span and intersection") {
  auto r = testutil::rng("join-intersect");
  Subspace s = random_subspace(r, 6, 3);
  CHECK(joint_span(s, Subspace(6)) == s);
  CHECK(intersect(s, s) == s);
  Subspace ex = Subspace::from_generators(2, std::vector<BitVec>{BitVec::from_bits({1, 0})});
  Subspace ey = Subspace::from_generators(2, std::vector<BitVec>{BitVec::from_bits({0, 1})});
  CHECK(intersect(ex, ey).dim() == 0);

  for (int i = 0; i < 100; ++i) {
    std::size_t ambient = 2 + r.next_below(8);
    Subspace a = random_subspace(r, ambient, r.next_below(ambient + 1));
    Subspace b = random_subspace(r, ambient, r.next_below(ambient + 1));
    Subspace meet = intersect(a, b);
    CHECK(meet.is_subspace_of(a));
    CHECK(meet.is_subspace_of(b));
    CHECK(a.is_subspace_of(joint_span(a, b)));
    // modular identity for dimensions
    CHECK(joint_span(a, b).dim() + meet.dim() == a.dim() + b.dim());
  }
}

TEST_CASE("coset canonicalization: equal sets compare bit-equal") {
  auto r = testutil::rng("coset-canon");
  for (int i = 0; i < 200; ++i) {
    std::size_t ambient = 2 + r.next_below(8);
    Subspace s = random_subspace(r, ambient, 1 + r.next_below(ambient));
    BitVec offset = r.next_bitvec(ambient);
    Coset c1(s, offset);

    // same set through a shuffled generating set and a shifted offset
    std::vector<BitVec> gens;
    for (std::size_t j = 0; j < s.dim(); ++j) {
      BitVec g = s.basis().row(j);
      if (j + 1 < s.dim() && r.next_bit()) g ^= s.basis().row(j + 1);
      gens.push_back(g);
    }
    BitVec shifted = offset ^ s.element(r.next_below(std::uint64_t(1) << s.dim()));
    Coset c2(Subspace::from_generators(ambient, gens), shifted);
    CHECK(c1 == c2);
    CHECK(c1.contains(shifted));
  }
}

TEST_CASE("mat_mul matches mat_vec column by column") {
  auto r = testutil::rng("matmul");
  for (int i = 0; i < 50; ++i) {
    BitMatrix a = random_matrix(r, 1 + r.next_below(6), 1 + r.next_below(6));
    BitMatrix b = random_matrix(r, a.cols(), 1 + r.next_below(6));
    BitMatrix c = mat_mul(a, b);
    for (std::size_t col = 0; col < b.cols(); ++col) CHECK(c.col(col) == a.mat_vec(b.col(col)));
    CHECK(mat_mul(a, b).transpose() == mat_mul(b.transpose(), a.transpose()));
  }
}
