#include "ossig/coset_state.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace ossig {

SymbolicCosetState::SymbolicCosetState(const Coset& support, const BitVec& phase)
    : support_(support), dual_(support.subspace().dual()) {
  if (phase.size() != support.ambient_dim())
    throw std::invalid_argument("coset state: phase length mismatch");
  phase_ = dual_.reduce(phase);
}

SymbolicCosetState SymbolicCosetState::uniform_over(const Coset& support) {
  return SymbolicCosetState(support, BitVec(support.ambient_dim()));
}

SymbolicCosetState SymbolicCosetState::basis_state(const BitVec& value) {
  return uniform_over(Coset(Subspace(value.size()), value));
}

SymbolicCosetState SymbolicCosetState::hadamard_all() const {
  // (S, a, z) -> (dual(S), z, a): the new offset is the old phase and vice
  // versa, and both are already canonical for the new roles.
  SymbolicCosetState out;
  out.support_ = Coset(dual_, phase_);
  out.dual_ = support_.subspace();
  out.phase_ = out.dual_.reduce(support_.offset());
  return out;
}

SymbolicCosetState::Branches SymbolicCosetState::branches_for(const AffineFunctional& f) const {
  if (f.linear.size() != ambient_dim())
    throw std::invalid_argument("measure: functional length mismatch");
  Branches br;
  const BitMatrix& basis = support_.subspace().basis();
  bool value_at_offset = f.eval(support_.offset());

  std::optional<std::size_t> split_row;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (f.linear.dot(basis.row(i))) {
      split_row = i;
      break;
    }

  if (!split_row) {
    br.balanced = false;
    br.deterministic_value = value_at_offset;
    (value_at_offset ? br.on_one : br.on_zero) = *this;
    return br;
  }

  br.balanced = true;
  BitVec v0 = basis.row(*split_row);
  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (i == *split_row) continue;
    BitVec row = basis.row(i);
    if (f.linear.dot(row)) row ^= v0;
    rows.push_back(row);
  }
  Subspace sliced = Subspace::from_generators(ambient_dim(), rows);
  BitVec matched_offset = support_.offset();
  BitVec flipped_offset = support_.offset() ^ v0;
  auto make = [&](const BitVec& off) {
    return SymbolicCosetState(Coset(sliced, off), phase_);
  };
  br.on_zero = make(value_at_offset ? flipped_offset : matched_offset);
  br.on_one = make(value_at_offset ? matched_offset : flipped_offset);
  return br;
}

std::pair<bool, SymbolicCosetState> SymbolicCosetState::measure_functional(
    const AffineFunctional& f, DeterministicRng& rng) const {
  Branches br = branches_for(f);
  if (!br.balanced) {
    bool v = br.deterministic_value;
    return {v, *(v ? br.on_one : br.on_zero)};
  }
  bool outcome = rng.next_bit();
  return {outcome, *(outcome ? br.on_one : br.on_zero)};
}

std::pair<BitVec, SymbolicCosetState> SymbolicCosetState::measure_bits(
    const std::vector<std::size_t>& indices, DeterministicRng& rng) const {
  BitVec outcomes(indices.size());
  SymbolicCosetState state = *this;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= ambient_dim()) throw std::out_of_range("measure_bits: index out of range");
    AffineFunctional f{BitVec(ambient_dim()), false};
    f.linear.set(indices[i], true);
    auto [bit, next] = state.measure_functional(f, rng);
    outcomes.set(i, bit);
    state = std::move(next);
  }
  return {outcomes, state};
}

DenseState SymbolicCosetState::to_dense() const {
  if (ambient_dim() > 16) throw std::invalid_argument("to_dense: ambient dimension too large");
  std::vector<int> amp(std::size_t(1) << ambient_dim(), 0);
  for (const BitVec& u : support_.enumerate())
    amp[u.to_u64()] = phase_.dot(u) ? -1 : 1;
  return DenseState(ambient_dim(), std::move(amp));
}

std::string SymbolicCosetState::to_json_string() const {
  nlohmann::json j;
  j["k"] = ambient_dim();
  std::vector<std::string> rows;
  const BitMatrix& basis = support_.subspace().basis();
  for (std::size_t i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i).to_hex());
  j["basis_rows"] = rows;
  j["offset"] = support_.offset().to_hex();
  j["phase"] = phase_.to_hex();
  return j.dump();
}

SymbolicCosetState SymbolicCosetState::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::size_t k = j.at("k").get<std::size_t>();
  std::vector<BitVec> rows;
  for (const auto& hex : j.at("basis_rows")) rows.push_back(BitVec::from_hex(hex, k));
  Subspace sub = Subspace::from_generators(k, rows);
  if (sub.dim() != rows.size()) throw std::invalid_argument("state: basis rows not independent");
  Coset support(sub, BitVec::from_hex(j.at("offset"), k));
  return SymbolicCosetState(support, BitVec::from_hex(j.at("phase"), k));
}

DenseState::DenseState(std::size_t k, std::vector<int> amplitudes)
    : k_(k), amp_(std::move(amplitudes)) {
  if (amp_.size() != (std::size_t(1) << k_))
    throw std::invalid_argument("dense state: amplitude count mismatch");
  std::size_t support = 0;
  for (int a : amp_) {
    if (a != -1 && a != 0 && a != 1)
      throw std::invalid_argument("dense state: amplitudes must be -1, 0 or 1");
    if (a != 0) ++support;
  }
  if (support == 0 || (support & (support - 1)) != 0)
    throw std::invalid_argument("dense state: support must be a nonzero power of two");
}

std::size_t DenseState::support_size() const {
  std::size_t n = 0;
  for (int a : amp_)
    if (a != 0) ++n;
  return n;
}

DenseState DenseState::hadamard_all() const {
  // in-place Walsh-Hadamard transform in exact integers, then strip the
  // common 2^d factor
  std::vector<long long> w(amp_.begin(), amp_.end());
  for (std::size_t h = 1; h < w.size(); h <<= 1)
    for (std::size_t i = 0; i < w.size(); i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        long long x = w[j], y = w[j + h];
        w[j] = x + y;
        w[j + h] = x - y;
      }
  long long g = 0;
  for (long long v : w) g = std::gcd(g, v < 0 ? -v : v);
  if (g == 0) throw std::logic_error("dense hadamard: zero state");
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = int(w[i] / g);
  return DenseState(k_, std::move(out));
}

DenseState::MeasureSplit DenseState::split_on(const AffineFunctional& f) const {
  if (f.linear.size() != k_) throw std::invalid_argument("dense measure: length mismatch");
  MeasureSplit split;
  std::vector<int> zero(amp_.size(), 0), one(amp_.size(), 0);
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (amp_[i] == 0) continue;
    if (f.eval(BitVec::from_u64(k_, i))) {
      ++split.count_one;
      one[i] = amp_[i];
    } else {
      ++split.count_zero;
      zero[i] = amp_[i];
    }
  }
  if (split.count_zero > 0) split.on_zero = DenseState(k_, std::move(zero));
  if (split.count_one > 0) split.on_one = DenseState(k_, std::move(one));
  return split;
}

bool dense_equal_up_to_global_sign(const DenseState& a, const DenseState& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  const auto& x = a.amplitudes();
  const auto& y = b.amplitudes();
  bool plus = true, minus = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) plus = false;
    if (x[i] != -y[i]) minus = false;
    if (!plus && !minus) return false;
  }
  return plus || minus;
}

}  // namespace ossig
