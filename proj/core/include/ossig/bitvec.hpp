#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ossig {

/// Fixed-length vector over Z2, packed into 64-bit words.
///
/// The length is set at construction and never changes; pad bits in the last
/// word are kept at zero so whole-word operations (xor, popcount, compare)
/// need no masking. Hex serialization is byte-oriented with bit 0 mapped to
/// the most significant bit of byte 0.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t length) : len_(length), words_((length + 63) / 64, 0) {}

  static BitVec from_u64(std::size_t length, std::uint64_t value);
  static BitVec from_bits(std::initializer_list<int> bits);
  static BitVec from_hex(const std::string& hex, std::size_t length);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  bool operator==(const BitVec& o) const { return len_ == o.len_ && words_ == o.words_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  /// Inner product mod 2.
  bool dot(const BitVec& o) const;
  std::size_t popcount() const;
  bool is_zero() const;

  /// Value of the bits interpreted with bit 0 as the least significant bit.
  /// Only valid for size() <= 64; used to index enumeration tables.
  std::uint64_t to_u64() const;

  BitVec slice(std::size_t from, std::size_t count) const;
  static BitVec concat(const BitVec& a, const BitVec& b);

  std::string to_hex() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  struct Hash {
    std::size_t operator()(const BitVec& v) const;
  };

 private:
  friend class BitMatrix;
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix over Z2, rows packed like BitVec.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (c & 63);
    if (v)
      words_[r * stride_ + (c >> 6)] |= mask;
    else
      words_[r * stride_ + (c >> 6)] &= ~mask;
  }

  BitVec row(std::size_t r) const;
  void set_row(std::size_t r, const BitVec& v);
  BitVec col(std::size_t c) const;

  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  /// Matrix-vector product; x must have cols() bits, result has rows() bits.
  BitVec mat_vec(const BitVec& x) const;

  BitMatrix transpose() const;

  BitMatrix rows_slice(std::size_t from, std::size_t count) const;
  BitMatrix cols_slice(std::size_t from, std::size_t count) const;
  /// Stack the rows of b below the rows of this matrix.
  BitMatrix stacked(const BitMatrix& b) const;

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
  }
  bool operator!=(const BitMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Schoolbook product with word-level row xor.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

}  // namespace ossig
