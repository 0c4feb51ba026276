#pragma once

#include <optional>
#include <vector>

#include "ossig/bitvec.hpp"
#include "ossig/rng.hpp"

namespace ossig {

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in row order; the rank is the number of pivots.
std::vector<std::size_t> rref_in_place(BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// One solution z of m * z = target, or nullopt when target is outside the
/// column span. Free coordinates are set to zero, so the result is
/// deterministic and unique whenever m has full column rank.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& target);

/// Coefficients c with sum_j c_j * basis_rows[j] = v, or nullopt when v is
/// outside the row span. Unique when the rows are linearly independent.
std::optional<BitVec> coordinates(const BitMatrix& basis_rows, const BitVec& v);

/// Linear subspace of Z2^ambient in canonical form: the stored basis is the
/// RREF of any generating set, so equal subspaces are bit-identical values.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace from_generators(std::size_t ambient_dim, const BitMatrix& generators);
  static Subspace from_generators(std::size_t ambient_dim, const std::vector<BitVec>& generators);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const BitMatrix& basis() const { return basis_; }

  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }
  /// Canonical representative of v modulo this subspace.
  BitVec reduce(BitVec v) const;

  Subspace dual() const;
  bool is_subspace_of(const Subspace& other) const;

  /// All 2^dim elements; intended for exhaustive checks at small dimension.
  std::vector<BitVec> enumerate() const;
  BitVec element(std::uint64_t index) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t ambient_ = 0;
  BitMatrix basis_;  // RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

Subspace joint_span(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Column span of m as a subspace of Z2^rows.
Subspace colspan(const BitMatrix& m);

/// Affine subspace: subspace plus canonical offset. Two descriptions of the
/// same point set compare bit-equal.
class Coset {
 public:
  Coset() = default;
  Coset(Subspace subspace, const BitVec& offset);

  const Subspace& subspace() const { return sub_; }
  const BitVec& offset() const { return off_; }
  std::size_t ambient_dim() const { return sub_.ambient_dim(); }
  std::size_t dim() const { return sub_.dim(); }

  bool contains(const BitVec& v) const { return sub_.contains(v ^ off_); }
  std::vector<BitVec> enumerate() const;

  bool operator==(const Coset& o) const { return sub_ == o.sub_ && off_ == o.off_; }
  bool operator!=(const Coset& o) const { return !(*this == o); }

 private:
  Subspace sub_;
  BitVec off_;
};

/// Uniform matrix with full column rank, conditioned by rejection sampling.
/// When bottom_block is set, the bottom bottom_block rows must in addition
/// have full row rank (requires bottom_block <= cols). Throws after
/// max_retries failed draws.
BitMatrix random_full_rank(DeterministicRng& rng, std::size_t rows, std::size_t cols,
                           std::optional<std::size_t> bottom_block = std::nullopt,
                           std::size_t max_retries = 256);

BitMatrix random_matrix(DeterministicRng& rng, std::size_t rows, std::size_t cols);

/// Uniform subspace of the given dimension, drawn basis vector by basis
/// vector outside the running span.
Subspace random_subspace(DeterministicRng& rng, std::size_t ambient_dim, std::size_t dim);

}  // namespace ossig
