#include "ossig/gf2.hpp"

#include <stdexcept>

namespace ossig {

std::vector<std::size_t> rref_in_place(BitMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < m.rows() && !m.get(pivot_row, col)) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    m.swap_rows(pivot_row, next_row);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != next_row && m.get(r, col)) m.xor_row_into(next_row, r);
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

std::size_t rank(const BitMatrix& m) {
  BitMatrix copy = m;
  return rref_in_place(copy).size();
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& target) {
  if (target.size() != m.rows()) throw std::invalid_argument("solve: target length mismatch");
  BitMatrix work = m;
  BitVec t = target;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < work.cols() && next_row < work.rows(); ++col) {
    std::size_t pivot_row = next_row;
    while (pivot_row < work.rows() && !work.get(pivot_row, col)) ++pivot_row;
    if (pivot_row == work.rows()) continue;
    work.swap_rows(pivot_row, next_row);
    bool tmp = t.get(pivot_row);
    t.set(pivot_row, t.get(next_row));
    t.set(next_row, tmp);
    for (std::size_t r = 0; r < work.rows(); ++r)
      if (r != next_row && work.get(r, col)) {
        work.xor_row_into(next_row, r);
        if (t.get(next_row)) t.flip(r);
      }
    pivots.emplace_back(next_row, col);
    ++next_row;
  }
  for (std::size_t r = next_row; r < work.rows(); ++r)
    if (t.get(r)) return std::nullopt;
  BitVec z(work.cols());
  for (auto [row, col] : pivots) z.set(col, t.get(row));
  return z;
}

std::optional<BitVec> coordinates(const BitMatrix& basis_rows, const BitVec& v) {
  if (v.size() != basis_rows.cols())
    throw std::invalid_argument("coordinates: vector length mismatch");
  return solve(basis_rows.transpose(), v);
}

Subspace Subspace::from_generators(std::size_t ambient_dim, const BitMatrix& generators) {
  if (generators.rows() > 0 && generators.cols() != ambient_dim)
    throw std::invalid_argument("generator length mismatch");
  BitMatrix work = generators;
  auto pivots = rref_in_place(work);
  Subspace s(ambient_dim);
  s.basis_ = work.rows_slice(0, pivots.size());
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::from_generators(std::size_t ambient_dim,
                                   const std::vector<BitVec>& generators) {
  return from_generators(ambient_dim, BitMatrix::from_rows(generators));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return from_generators(ambient_dim, BitMatrix::identity(ambient_dim));
}

BitVec Subspace::reduce(BitVec v) const {
  if (v.size() != ambient_) throw std::invalid_argument("reduce: length mismatch");
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    if (v.get(pivots_[i])) v ^= basis_.row(i);
  return v;
}

Subspace Subspace::dual() const {
  // kernel of the basis map: free columns seeded with identity, pivot
  // columns filled from the RREF rows
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<BitVec> kernel;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (is_pivot[c]) continue;
    BitVec v(ambient_);
    v.set(c, true);
    for (std::size_t i = 0; i < basis_.rows(); ++i)
      if (basis_.get(i, c)) v.set(pivots_[i], true);
    kernel.push_back(v);
  }
  return from_generators(ambient_, kernel);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    if (!other.contains(basis_.row(i))) return false;
  return true;
}

std::vector<BitVec> Subspace::enumerate() const {
  if (dim() > 24) throw std::invalid_argument("subspace too large to enumerate");
  std::vector<BitVec> out;
  out.reserve(std::size_t(1) << dim());
  for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << dim()); ++idx) out.push_back(element(idx));
  return out;
}

BitVec Subspace::element(std::uint64_t index) const {
  BitVec v(ambient_);
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    if ((index >> i) & 1) v ^= basis_.row(i);
  return v;
}

Subspace joint_span(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dim mismatch");
  return Subspace::from_generators(a.ambient_dim(), a.basis().stacked(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dim mismatch");
  return joint_span(a.dual(), b.dual()).dual();
}

Subspace colspan(const BitMatrix& m) {
  return Subspace::from_generators(m.rows(), m.transpose());
}

Coset::Coset(Subspace subspace, const BitVec& offset) : sub_(std::move(subspace)) {
  off_ = sub_.reduce(offset);
}

std::vector<BitVec> Coset::enumerate() const {
  std::vector<BitVec> out = sub_.enumerate();
  for (BitVec& v : out) v ^= off_;
  return out;
}

BitMatrix random_matrix(DeterministicRng& rng, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, rng.next_bitvec(cols));
  return m;
}

BitMatrix random_full_rank(DeterministicRng& rng, std::size_t rows, std::size_t cols,
                           std::optional<std::size_t> bottom_block, std::size_t max_retries) {
  if (cols > rows) throw std::invalid_argument("random_full_rank: cols > rows");
  if (bottom_block && (*bottom_block > cols || *bottom_block > rows))
    throw std::invalid_argument("random_full_rank: bottom block too tall");
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    BitMatrix m = random_matrix(rng, rows, cols);
    if (rank(m) != cols) continue;
    if (bottom_block && rank(m.rows_slice(rows - *bottom_block, *bottom_block)) != *bottom_block)
      continue;
    return m;
  }
  throw std::runtime_error("random_full_rank: retry bound exhausted");
}

Subspace random_subspace(DeterministicRng& rng, std::size_t ambient_dim, std::size_t dim) {
  if (dim > ambient_dim) throw std::invalid_argument("random_subspace: dim > ambient");
  Subspace s(ambient_dim);
  while (s.dim() < dim) {
    BitVec v = rng.next_bitvec(ambient_dim);
    if (s.contains(v)) continue;
    s = joint_span(s, Subspace::from_generators(ambient_dim, std::vector<BitVec>{v}));
  }
  return s;
}

}  // namespace ossig
