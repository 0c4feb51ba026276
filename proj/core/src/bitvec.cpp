#include "ossig/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace ossig {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("invalid hex digit");
}
}  // namespace

BitVec BitVec::from_u64(std::size_t length, std::uint64_t value) {
  if (length < 64 && length > 0 && (value >> length) != 0)
    throw std::invalid_argument("value does not fit in length bits");
  BitVec v(length);
  if (length > 0) v.words_[0] = length >= 64 ? value : (value & ((std::uint64_t(1) << length) - 1));
  return v;
}

BitVec BitVec::from_bits(std::initializer_list<int> bits) {
  BitVec v(bits.size());
  std::size_t i = 0;
  for (int b : bits) v.set(i++, b != 0);
  return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (len_ != o.len_) throw std::invalid_argument("BitVec length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVec::dot(const BitVec& o) const {
  if (len_ != o.len_) throw std::invalid_argument("BitVec length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool BitVec::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::uint64_t BitVec::to_u64() const {
  if (len_ > 64) throw std::invalid_argument("BitVec too long for to_u64");
  return words_.empty() ? 0 : words_[0];
}

BitVec BitVec::slice(std::size_t from, std::size_t count) const {
  if (from + count > len_) throw std::out_of_range("BitVec slice out of range");
  BitVec out(count);
  for (std::size_t i = 0; i < count; ++i) out.set(i, get(from + i));
  return out;
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
  BitVec out(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i));
  for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.get(i));
  return out;
}

std::string BitVec::to_hex() const {
  std::size_t nbytes = (len_ + 7) / 8;
  std::string out(nbytes * 2, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (!get(i)) continue;
    std::size_t byte = i / 8;
    // bit 0 of the vector is the most significant bit of byte 0
    std::size_t bit_in_byte = 7 - (i % 8);
    std::size_t nibble = byte * 2 + (bit_in_byte >= 4 ? 0 : 1);
    int shift = bit_in_byte % 4;
    int cur = hex_value(out[nibble]);
    out[nibble] = kHexDigits[cur | (1 << shift)];
  }
  return out;
}

BitVec BitVec::from_hex(const std::string& hex, std::size_t length) {
  if (hex.size() != (length + 7) / 8 * 2)
    throw std::invalid_argument("hex string length does not match bit length");
  BitVec v(length);
  for (std::size_t i = 0; i < length; ++i) {
    std::size_t byte = i / 8;
    std::size_t bit_in_byte = 7 - (i % 8);
    std::size_t nibble = byte * 2 + (bit_in_byte >= 4 ? 0 : 1);
    int shift = bit_in_byte % 4;
    if ((hex_value(hex[nibble]) >> shift) & 1) v.set(i, true);
  }
  // reject set pad bits so (hex, length) round-trips exactly
  for (std::size_t i = length; i < v.words_.size() * 64 && i < (length + 7) / 8 * 8; ++i) {
    std::size_t byte = i / 8;
    std::size_t bit_in_byte = 7 - (i % 8);
    std::size_t nibble = byte * 2 + (bit_in_byte >= 4 ? 0 : 1);
    int shift = bit_in_byte % 4;
    if ((hex_value(hex[nibble]) >> shift) & 1)
      throw std::invalid_argument("nonzero pad bits in hex string");
  }
  return v;
}

std::size_t BitVec::Hash::operator()(const BitVec& v) const {
  // FNV-1a over the packed words plus the length
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(v.len_);
  for (std::uint64_t w : v.words_) mix(w);
  return static_cast<std::size_t>(h);
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows) {
  if (rows.empty()) return BitMatrix();
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

BitVec BitMatrix::row(std::size_t r) const {
  BitVec v(cols_);
  for (std::size_t i = 0; i < stride_; ++i) v.words_[i] = words_[r * stride_ + i];
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t i = 0; i < stride_; ++i) words_[r * stride_ + i] = v.words()[i];
}

BitVec BitMatrix::col(std::size_t c) const {
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
  return v;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  for (std::size_t i = 0; i < stride_; ++i) words_[dst * stride_ + i] ^= words_[src * stride_ + i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < stride_; ++i)
    std::swap(words_[a * stride_ + i], words_[b * stride_ + i]);
}

BitVec BitMatrix::mat_vec(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("mat_vec dimension mismatch");
  BitVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < stride_; ++i) acc ^= words_[r * stride_ + i] & x.words()[i];
    out.set(r, std::popcount(acc) & 1);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < stride_; ++i) {
      std::uint64_t w = words_[r * stride_ + i];
      while (w) {
        int b = std::countr_zero(w);
        out.set(i * 64 + b, r, true);
        w &= w - 1;
      }
    }
  return out;
}

BitMatrix BitMatrix::rows_slice(std::size_t from, std::size_t count) const {
  if (from + count > rows_) throw std::out_of_range("rows_slice out of range");
  BitMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t i = 0; i < stride_; ++i)
      out.words_[r * stride_ + i] = words_[(from + r) * stride_ + i];
  return out;
}

BitMatrix BitMatrix::cols_slice(std::size_t from, std::size_t count) const {
  if (from + count > cols_) throw std::out_of_range("cols_slice out of range");
  BitMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out.set(r, c, get(r, from + c));
  return out;
}

BitMatrix BitMatrix::stacked(const BitMatrix& b) const {
  if (rows_ == 0) return b;
  if (b.rows_ == 0) return *this;
  if (cols_ != b.cols_) throw std::invalid_argument("stacked column mismatch");
  BitMatrix out(rows_ + b.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.set_row(r, row(r));
  for (std::size_t r = 0; r < b.rows_; ++r) out.set_row(rows_ + r, b.row(r));
  return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVec acc(b.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) acc ^= b.row(c);
    out.set_row(r, acc);
  }
  return out;
}

}  // namespace ossig
