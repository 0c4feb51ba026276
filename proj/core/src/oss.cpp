#include "ossig/oss.hpp"

#include <stdexcept>

namespace ossig {

KeyPair siggen(OracleSuite& suite, DeterministicRng& rng) {
  const Params& p = suite.params();
  BitVec x = rng.next_bitvec(p.n);
  BitVec y = suite.p_forward(x).y;
  const CosetDescription& c = suite.coset(y);
  return KeyPair{y, SymbolicCosetState::uniform_over(Coset(colspan(c.a), c.b)), false};
}

DualFunctionals build_dual_functionals(const BitMatrix& a, std::size_t ell_code) {
  const std::size_t k = a.rows();
  const std::size_t cols = a.cols();
  BitMatrix bottom = a.rows_slice(k - ell_code, ell_code);
  if (rank(bottom) != ell_code)
    throw std::invalid_argument("dual functionals: bottom rows not independent");

  // accept = { v : v^T A in RowSpan(bottom) } = dual of the span of A*d over
  // d ranging over a basis of RowSpan(bottom)^perp
  Subspace row_span = Subspace::from_generators(cols, bottom);
  Subspace complement = row_span.dual();
  std::vector<BitVec> gens;
  for (std::size_t i = 0; i < complement.dim(); ++i)
    gens.push_back(a.mat_vec(complement.basis().row(i)));
  Subspace accept = Subspace::from_generators(k, gens).dual();

  // coordinates of each accept-basis vector, then one linear form per output
  // coordinate j solving <w_j, v_i> = c_i[j] over the accept basis
  const BitMatrix& accept_basis = accept.basis();
  BitMatrix at = a.transpose();
  std::vector<BitVec> coords;
  for (std::size_t i = 0; i < accept_basis.rows(); ++i) {
    auto c = coordinates(bottom, at.mat_vec(accept_basis.row(i)));
    if (!c) throw std::logic_error("dual functionals: accept basis outside bottom span");
    coords.push_back(*c);
  }
  DualFunctionals out;
  out.accept = accept;
  for (std::size_t j = 0; j < ell_code; ++j) {
    BitVec target(accept_basis.rows());
    for (std::size_t i = 0; i < coords.size(); ++i) target.set(i, coords[i].get(j));
    auto w = solve(accept_basis, target);
    if (!w) throw std::logic_error("dual functionals: inconsistent system");
    out.linear.push_back(*w);
  }
  return out;
}

namespace {

void assert_support_in_accept(const SymbolicCosetState& state, const Subspace& accept) {
  if (!accept.contains(state.support().offset()) ||
      !state.support().subspace().is_subspace_of(accept))
    throw std::logic_error("sign: dual-form support left the accept set");
}

}  // namespace

std::pair<Signature, SignTranscript> sign(OracleSuite& suite, KeyPair& keypair,
                                          const BitVec& message, const LinearCode& code,
                                          DeterministicRng& rng) {
  const Params& p = suite.params();
  if (keypair.spent) throw std::runtime_error("sign: key already spent");
  if (code.code_len != p.ell_code) throw std::invalid_argument("sign: code length mismatch");
  if (message.size() != code.msg_len) throw std::invalid_argument("sign: message length mismatch");
  keypair.spent = true;

  const std::size_t k = p.k;
  const std::size_t ell = p.ell_code;
  BitVec target = code.encode(message);
  DualFunctionals duals = build_dual_functionals(suite.coset(keypair.pk).a, ell);

  std::vector<std::size_t> block_indices(ell);
  for (std::size_t j = 0; j < ell; ++j) block_indices[j] = (k - ell) + j;

  SignTranscript transcript;
  SymbolicCosetState state = keypair.sk;
  for (std::size_t t = 0; t < p.rounds; ++t) {
    auto [measured, after_measure] = state.measure_bits(block_indices, rng);
    state = std::move(after_measure);
    std::size_t mismatches = (measured ^ target).popcount();
    transcript.rounds.push_back(SignRound{measured, mismatches});

    state = state.hadamard_all();
    for (std::size_t j = 0; j < ell; ++j) {
      if (measured.get(j) == target.get(j)) continue;
      assert_support_in_accept(state, duals.accept);
      auto [bit, collapsed] = state.measure_functional({duals.linear[j], false}, rng);
      (void)bit;  // outcome discarded, only the collapse matters
      state = std::move(collapsed);
    }
    state = state.hadamard_all();
  }

  std::vector<std::size_t> all_indices(k);
  for (std::size_t i = 0; i < k; ++i) all_indices[i] = i;
  auto [sigma, finals] = state.measure_bits(all_indices, rng);
  (void)finals;

  transcript.final_sigma = sigma;
  transcript.success = code.within_radius(sigma.slice(k - ell, ell), target);
  return {Signature{sigma, message}, transcript};
}

bool verify(OracleSuite& suite, const BitVec& pk, const BitVec& message, const BitVec& sigma,
            const LinearCode& code) {
  const Params& p = suite.params();
  if (sigma.size() != p.k || pk.size() != p.r || code.code_len != p.ell_code ||
      message.size() != code.msg_len)
    throw std::invalid_argument("verify: length mismatch");
  if (!suite.p_inverse(pk, sigma)) return false;
  return code.within_radius(sigma.slice(p.k - p.ell_code, p.ell_code), code.encode(message));
}

std::optional<std::pair<BitVec, BitVec>> strong_unforgeability_witness(OracleSuite& suite,
                                                                       const BitVec& pk,
                                                                       const Signature& sig0,
                                                                       const Signature& sig1) {
  if (sig0.sigma == sig1.sigma) return std::nullopt;
  auto x0 = suite.p_inverse(pk, sig0.sigma);
  auto x1 = suite.p_inverse(pk, sig1.sigma);
  if (!x0 || !x1)
    throw std::invalid_argument("witness: signatures must verify under the public key");
  return std::make_pair(*x0, *x1);
}

}  // namespace ossig
