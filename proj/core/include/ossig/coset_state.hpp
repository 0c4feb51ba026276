#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ossig/gf2.hpp"
#include "ossig/rng.hpp"

namespace ossig {

/// Affine form v -> <linear, v> + constant over Z2^k.
struct AffineFunctional {
  BitVec linear;
  bool constant = false;

  bool eval(const BitVec& v) const { return linear.dot(v) != constant; }
};

class DenseState;

/// Exact representation of the states
///
///     sum_{u in a + S} (-1)^{<z, u>} |u>
///
/// as the triple (S, a, z): support coset a + S and phase vector z. The
/// offset a is the canonical representative of its coset, and z is the
/// canonical representative modulo dual(S); shifting z by any element of
/// dual(S) changes the state only by a global sign, which is quotiented out.
/// All operations return new values; states are never mutated in place.
///
/// The operation set is exactly what the signing algorithm needs: full-width
/// Hadamard, which maps (S, a, z) to (dual(S), z, a), and measurement of
/// affine functionals, which on a coset are either constant or exactly
/// balanced, so every outcome probability is 0, 1/2 or 1.
class SymbolicCosetState {
 public:
  SymbolicCosetState() = default;
  SymbolicCosetState(const Coset& support, const BitVec& phase);

  static SymbolicCosetState uniform_over(const Coset& support);
  static SymbolicCosetState basis_state(const BitVec& value);

  std::size_t ambient_dim() const { return support_.ambient_dim(); }
  const Coset& support() const { return support_; }
  const BitVec& phase() const { return phase_; }
  /// dual(support().subspace()), kept alongside the triple.
  const Subspace& support_dual() const { return dual_; }

  SymbolicCosetState hadamard_all() const;

  /// Both measurement branches of an affine functional, with their exact
  /// probabilities (deterministic or perfectly balanced).
  struct Branches;
  Branches branches_for(const AffineFunctional& f) const;

  std::pair<bool, SymbolicCosetState> measure_functional(const AffineFunctional& f,
                                                         DeterministicRng& rng) const;
  std::pair<BitVec, SymbolicCosetState> measure_bits(const std::vector<std::size_t>& indices,
                                                     DeterministicRng& rng) const;

  /// Brute-force image; requires ambient_dim() <= 16.
  DenseState to_dense() const;

  std::string to_json_string() const;
  static SymbolicCosetState from_json_string(const std::string& text);

  bool operator==(const SymbolicCosetState& o) const {
    return support_ == o.support_ && phase_ == o.phase_;
  }
  bool operator!=(const SymbolicCosetState& o) const { return !(*this == o); }

 private:
  Coset support_;
  BitVec phase_;
  Subspace dual_;
};

struct SymbolicCosetState::Branches {
  bool balanced = false;
  bool deterministic_value = false;                   // meaningful when !balanced
  std::optional<SymbolicCosetState> on_zero, on_one;  // present iff outcome possible
};

/// Statevector oracle with integer amplitudes. Every state reachable here
/// has amplitudes in {-1, 0, +1} over a power-of-two support; the common
/// 1/sqrt(support) normalization is implicit, so all arithmetic is exact.
class DenseState {
 public:
  DenseState() = default;
  DenseState(std::size_t k, std::vector<int> amplitudes);

  std::size_t ambient_dim() const { return k_; }
  const std::vector<int>& amplitudes() const { return amp_; }
  std::size_t support_size() const;

  DenseState hadamard_all() const;

  struct MeasureSplit;
  MeasureSplit split_on(const AffineFunctional& f) const;

 private:
  std::size_t k_ = 0;
  std::vector<int> amp_;
};

struct DenseState::MeasureSplit {
  std::size_t count_zero = 0, count_one = 0;  // exact outcome weights over support_size()
  std::optional<DenseState> on_zero, on_one;
};

bool dense_equal_up_to_global_sign(const DenseState& a, const DenseState& b);

}  // namespace ossig
