#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ossig/battery.hpp"
#include "ossig/gf2.hpp"
#include "ossig/lazy.hpp"
#include "ossig/oracle_suite.hpp"
#include "ossig/rng.hpp"

namespace ossig {

/// Pair of random permutations Pi_0, Pi_1 on bit_len bits, composed into the
/// exactly 2-to-1 map (b, x) -> Pi_b(x). The two preimages of any image
/// differ in their first input bit. Holding the inverse direction is the
/// trapdoor; trapdoor use is counted so reductions can prove they never
/// touched a withheld instance.
class ClawFreePermutation {
 public:
  ClawFreePermutation(std::size_t bit_len, const DeterministicRng::Seed& seed,
                      const std::string& tag)
      : bits_(bit_len),
        pi0_(bit_len, DeterministicRng(seed, tag + "/PI0")),
        pi1_(bit_len, DeterministicRng(seed, tag + "/PI1")) {}

  std::size_t in_bits() const { return bits_ + 1; }
  std::size_t out_bits() const { return bits_; }
  std::size_t eff_bits() const { return bits_; }

  /// input = (b || x); output = Pi_b(x).
  BitVec eval(const BitVec& input) {
    if (input.size() != in_bits()) throw std::invalid_argument("claw eval: length mismatch");
    BitVec x = input.slice(1, bits_);
    return input.get(0) ? pi1_.forward(x) : pi0_.forward(x);
  }

  /// Trapdoor inversion: the unique preimage of y starting with bit b.
  std::optional<BitVec> invert(bool b, const BitVec& y) {
    if (y.size() != bits_) throw std::invalid_argument("claw invert: length mismatch");
    ++trapdoor_queries_;
    BitVec x = b ? pi1_.inverse(y) : pi0_.inverse(y);
    BitVec input(in_bits());
    input.set(0, b);
    for (std::size_t i = 0; i < bits_; ++i) input.set(1 + i, x.get(i));
    return input;
  }

  BitVec eff_of(const BitVec& input) const { return input.slice(1, bits_); }

  std::uint64_t trapdoor_queries() const { return trapdoor_queries_; }

 private:
  std::size_t bits_;
  LazyPermutation pi0_, pi1_;
  std::uint64_t trapdoor_queries_ = 0;
};

/// Parallel repetition of 2-to-1 instances with a folded digest.
///
/// The input w splits into one block per instance; the output is the
/// concatenation of the per-instance images together with the fold: the
/// vector of first bits followed by the XOR of the effective inputs.
/// Preimage sets of the image part are cosets (dimension = instance count
/// when every image has two preimages), and folding maps each such coset
/// reversibly onto a short coset whose coordinate vector is untouched: it is
/// exactly the first-bits vector.
template <class Inst>
class FoldingCpf {
 public:
  explicit FoldingCpf(std::vector<Inst> instances) : inst_(std::move(instances)) {
    if (inst_.empty()) throw std::invalid_argument("folding cpf: no instances");
    for (const Inst& i : inst_)
      if (i.in_bits() != inst_[0].in_bits() || i.out_bits() != inst_[0].out_bits() ||
          i.eff_bits() != inst_[0].eff_bits())
        throw std::invalid_argument("folding cpf: instance shapes differ");
  }

  std::size_t instance_count() const { return inst_.size(); }
  std::size_t in_bits() const { return inst_.size() * inst_[0].in_bits(); }
  std::size_t out_bits() const { return inst_.size() * inst_[0].out_bits(); }
  std::size_t eff_bits() const { return inst_[0].eff_bits(); }
  std::size_t folded_bits() const { return inst_.size() + eff_bits(); }

  Inst& instance(std::size_t i) { return inst_.at(i); }
  const Inst& instance(std::size_t i) const { return inst_.at(i); }

  struct Output {
    BitVec y;       // concatenated instance images
    BitVec folded;  // first-bits vector || XOR of effective inputs
  };

  Output q_forward(const BitVec& w) {
    if (w.size() != in_bits()) throw std::invalid_argument("q_forward: length mismatch");
    const std::size_t m = inst_.size();
    const std::size_t in = inst_[0].in_bits();
    BitVec y(out_bits());
    BitVec first_bits(m);
    BitVec sum(eff_bits());
    for (std::size_t i = 0; i < m; ++i) {
      BitVec block = w.slice(i * in, in);
      BitVec yi = inst_[i].eval(block);
      for (std::size_t j = 0; j < yi.size(); ++j) y.set(i * yi.size() + j, yi.get(j));
      first_bits.set(i, block.get(0));
      sum ^= inst_[i].eff_of(block);
    }
    return Output{y, BitVec::concat(first_bits, sum)};
  }

  /// Inverts every instance with its trapdoor and checks the folded sum
  /// against the recovered effective inputs; rejects on mismatch.
  std::optional<BitVec> q_inverse(const BitVec& y, const BitVec& folded) {
    check_shapes(y, folded);
    const std::size_t m = inst_.size();
    BitVec sum(eff_bits());
    std::vector<BitVec> blocks;
    for (std::size_t i = 0; i < m; ++i) {
      auto block = inst_[i].invert(folded.get(i), y.slice(i * inst_[0].out_bits(),
                                                          inst_[0].out_bits()));
      if (!block) return std::nullopt;
      sum ^= inst_[i].eff_of(*block);
      blocks.push_back(std::move(*block));
    }
    if (sum != folded.slice(m, eff_bits())) return std::nullopt;
    return assemble(blocks);
  }

  /// Same map without the trapdoor of instance i_star: that block's
  /// effective input is recovered by subtracting the others from the folded
  /// sum, then confirmed with one forward evaluation.
  std::optional<BitVec> q_inverse_missing(std::size_t i_star, const BitVec& y,
                                          const BitVec& folded) {
    check_shapes(y, folded);
    if (i_star >= inst_.size()) throw std::out_of_range("q_inverse_missing: bad index");
    const std::size_t m = inst_.size();
    const std::size_t out = inst_[0].out_bits();
    BitVec recovered = folded.slice(m, eff_bits());
    std::vector<BitVec> blocks(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i_star) continue;
      auto block = inst_[j].invert(folded.get(j), y.slice(j * out, out));
      if (!block) return std::nullopt;
      recovered ^= inst_[j].eff_of(*block);
      blocks[j] = std::move(*block);
    }
    BitVec star_block(inst_[0].in_bits());
    star_block.set(0, folded.get(i_star));
    for (std::size_t j = 0; j < eff_bits(); ++j) star_block.set(1 + j, recovered.get(j));
    if (inst_[i_star].eval(star_block) != y.slice(i_star * out, out)) return std::nullopt;
    blocks[i_star] = std::move(star_block);
    return assemble(blocks);
  }

  /// Coset description keeping the per-instance column structure: column i
  /// comes from instance i, so the coordinate vector of a fiber element with
  /// respect to these columns is meaningful (it is the first-bits vector).
  struct StructuredCoset {
    BitMatrix a;  // columns indexed by instance
    BitVec b;
  };

  /// Fiber of y in Z2^in_bits: column i is the difference of instance i's
  /// preimage pair placed in block i, the shift collects the b = 0 preimages
  /// (requires every image to have both preimages).
  StructuredCoset preimage_extended(const BitVec& y) {
    auto pairs = preimage_pairs(y);
    const std::size_t in = inst_[0].in_bits();
    StructuredCoset out{BitMatrix(in_bits(), inst_.size()), BitVec(in_bits())};
    for (std::size_t i = 0; i < inst_.size(); ++i) {
      BitVec diff = pairs[i].first ^ pairs[i].second;
      for (std::size_t j = 0; j < in; ++j) {
        if (diff.get(j)) out.a.set(i * in + j, i, true);
        if (pairs[i].first.get(j)) out.b.set(i * in + j, true);
      }
    }
    return out;
  }

  /// Folded fiber of y in Z2^folded_bits: column i is the i-th unit vector
  /// glued to the effective difference of instance i's preimage pair, so a
  /// folded point keeps the same coordinate vector as its unfolded original.
  StructuredCoset folded_extended(const BitVec& y) {
    auto pairs = preimage_pairs(y);
    const std::size_t m = inst_.size();
    StructuredCoset out{BitMatrix(folded_bits(), m), BitVec(folded_bits())};
    BitVec base_sum(eff_bits());
    for (std::size_t i = 0; i < m; ++i) {
      out.a.set(i, i, true);
      BitVec diff = inst_[i].eff_of(pairs[i].first) ^ inst_[i].eff_of(pairs[i].second);
      for (std::size_t j = 0; j < eff_bits(); ++j)
        if (diff.get(j)) out.a.set(m + j, i, true);
      base_sum ^= inst_[i].eff_of(pairs[i].first);
    }
    for (std::size_t j = 0; j < eff_bits(); ++j)
      if (base_sum.get(j)) out.b.set(m + j, true);
    return out;
  }

  Coset preimage_coset(const BitVec& y) {
    StructuredCoset ext = preimage_extended(y);
    return Coset(colspan(ext.a), ext.b);
  }

  Coset folded_coset(const BitVec& y) {
    StructuredCoset ext = folded_extended(y);
    return Coset(colspan(ext.a), ext.b);
  }

 private:
  std::vector<Inst> inst_;

  std::vector<std::pair<BitVec, BitVec>> preimage_pairs(const BitVec& y) {
    if (y.size() != out_bits()) throw std::invalid_argument("preimage pairs: length mismatch");
    const std::size_t out = inst_[0].out_bits();
    std::vector<std::pair<BitVec, BitVec>> pairs;
    for (std::size_t i = 0; i < inst_.size(); ++i) {
      BitVec yi = y.slice(i * out, out);
      auto w0 = inst_[i].invert(false, yi);
      auto w1 = inst_[i].invert(true, yi);
      if (!w0 || !w1) throw std::invalid_argument("preimage pairs: image lacks a full claw");
      pairs.emplace_back(std::move(*w0), std::move(*w1));
    }
    return pairs;
  }

  void check_shapes(const BitVec& y, const BitVec& folded) const {
    if (y.size() != out_bits() || folded.size() != folded_bits())
      throw std::invalid_argument("q_inverse: length mismatch");
  }

  BitVec assemble(const std::vector<BitVec>& blocks) const {
    BitVec w(in_bits());
    const std::size_t in = inst_[0].in_bits();
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = 0; j < in; ++j) w.set(i * in + j, blocks[i].get(j));
    return w;
  }
};

using FoldingCpfOracle = FoldingCpf<ClawFreePermutation>;

/// Claw-free-permutation instantiation at hash shape (n, r): n/(n-r) must be
/// an integer; builds n-r instances on n/(n-r) - 1 bits each.
FoldingCpfOracle make_folding_cpf(std::size_t n, std::size_t r, const DeterministicRng::Seed& seed);

/// Forward/inverse pair simulated from a folding CPF: inputs pass through a
/// random permutation and the CPF; the short folded digest is embedded into
/// Z2^k by a fresh random full-column-rank matrix and shift per output.
/// A collision of the simulated hash transports to a CPF collision through
/// the input permutation. Requires k >= folded_bits. When withhold_trapdoor
/// is set, the inverse path never touches that instance's trapdoor.
class SimulatedDualFree {
 public:
  SimulatedDualFree(FoldingCpfOracle& cpf, std::size_t k, const DeterministicRng::Seed& seed,
                    std::optional<std::size_t> withhold_trapdoor = std::nullopt);

  std::size_t n() const { return cpf_->in_bits(); }
  std::size_t r() const { return cpf_->out_bits(); }
  std::size_t k() const { return k_; }

  PointOutput forward(const BitVec& x);
  std::optional<BitVec> inverse(const BitVec& y, const BitVec& u);

  /// The CPF-side point a hash collision transports to.
  BitVec transport(const BitVec& x);

  OracleView view();

 private:
  FoldingCpfOracle* cpf_;
  std::size_t k_;
  std::optional<std::size_t> withhold_;
  LazyPermutation gamma_;
  LazyFunction<CosetDescription> embed_;
};

/// Oracle triple (P, P^-1, D') at parameters (n, r, k, s) simulated from a
/// dual-free inner suite at (r + s, r, k - (n - r - s)): the input splits
/// through a random permutation, the inner point output is glued to the
/// remaining bits and mixed by a random invertible matrix C(y), and the
/// relaxed dual answers against the last n - r - s columns of C(y). A strong
/// collision (difference outside ColSpan of those columns) transports to an
/// inner hash collision.
class SimulatedBloated {
 public:
  SimulatedBloated(OracleSuite& inner, const Params& outer, const DeterministicRng::Seed& seed);

  const Params& params() const { return outer_; }

  PointOutput forward(const BitVec& x);
  std::optional<BitVec> inverse(const BitVec& y, const BitVec& u);
  std::optional<BitVec> d_bloated(const BitVec& y, const BitVec& v);

  /// Last n - r - s columns of C(y), the matrix the relaxed dual checks.
  BitMatrix a1_of(const BitVec& y);
  /// Full effective matrix A(y) = C(y) * diag(inner A(y), I).
  BitMatrix effective_matrix(const BitVec& y);

  /// Inner-suite input a strong collision transports to.
  BitVec transport(const BitVec& x);

  OracleView view();
  DualView dual_view();

 private:
  struct Mixer {
    BitMatrix c;   // k x k invertible
    BitVec d;      // n - r - s bits
  };
  OracleSuite* inner_;
  Params outer_;
  LazyPermutation gamma_;
  LazyFunction<Mixer> mixer_;
};

struct BirthdayResult {
  std::optional<std::pair<BitVec, BitVec>> collision;
  std::size_t queries = 0;
};

/// Classical baseline: uniform random probing with a seen-table until two
/// distinct inputs share an output or the query budget runs out.
BirthdayResult collision_search_birthday(const std::function<BitVec(const BitVec&)>& fn,
                                         std::size_t in_bits, DeterministicRng& rng,
                                         std::size_t max_queries);

/// Toy parameters for the noisy trapdoor claw-free function
///   L((B, c), (t, f), b) = B t + f + b c  over Z_q,
/// with pk = (B, c = B s + e). q and B are powers of two so inputs and
/// outputs pack into bit strings; effective input is t alone, since f is
/// recoverable from (b, y, t) and the public key.
struct LweTcfParams {
  std::size_t u = 1, v = 2;
  std::int64_t q = 8, big_b = 2, b_bar = 1, sigma = 1;

  void validate() const;
  std::size_t q_bits() const;
  std::size_t f_bits() const;  // log2(2 * big_b)
};

class LweTcf {
 public:
  LweTcf(const LweTcfParams& params, DeterministicRng& rng);

  const LweTcfParams& params() const { return p_; }
  const std::vector<std::vector<std::int64_t>>& matrix() const { return mat_b_; }
  const std::vector<std::int64_t>& shift() const { return c_; }
  const std::vector<std::int64_t>& secret() const { return s_; }
  const std::vector<std::int64_t>& noise() const { return e_; }

  std::vector<std::int64_t> eval(const std::vector<std::int64_t>& t,
                                 const std::vector<std::int64_t>& f, bool b) const;

  struct Claw {
    std::vector<std::int64_t> t0, f0;  // preimage with b = 0
    std::vector<std::int64_t> t1, f1;  // preimage with b = 1
  };
  /// Exhaustive scan over the full domain; needs u <= 3, v <= 6, q <= 64.
  std::optional<Claw> claw_bruteforce(const std::vector<std::int64_t>& y) const;

  // bit-packed face, shape-compatible with FoldingCpf instances
  std::size_t in_bits() const { return 1 + p_.u * p_.q_bits() + p_.v * p_.f_bits(); }
  std::size_t out_bits() const { return p_.v * p_.q_bits(); }
  std::size_t eff_bits() const { return p_.u * p_.q_bits(); }
  BitVec eval(const BitVec& input);
  std::optional<BitVec> invert(bool b, const BitVec& y);  // brute force
  BitVec eff_of(const BitVec& input) const;
  /// Rebuild the full input from first bit, image and effective input:
  /// f = y - B t - b c.
  std::optional<BitVec> recover_input(bool b, const BitVec& y, const BitVec& eff) const;

  std::uint64_t trapdoor_queries() const { return trapdoor_queries_; }

 private:
  LweTcfParams p_;
  std::vector<std::vector<std::int64_t>> mat_b_;  // v x u
  std::vector<std::int64_t> s_, e_, c_;
  std::uint64_t trapdoor_queries_ = 0;

  std::int64_t mod_q(std::int64_t x) const;
};

}  // namespace ossig
