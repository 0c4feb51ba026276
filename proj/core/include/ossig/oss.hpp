#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ossig/coset_state.hpp"
#include "ossig/ecc.hpp"
#include "ossig/oracle_suite.hpp"

namespace ossig {

/// Public key y with the single-use signing state: the uniform superposition
/// over the fiber coset ColSpan(A(y)) + b(y), phase zero at generation.
struct KeyPair {
  BitVec pk;                // r bits
  SymbolicCosetState sk;    // over Z2^k
  bool spent = false;
};

struct Signature {
  BitVec sigma;    // k bits
  BitVec message;  // msg_len bits
};

struct SignRound {
  BitVec measured;              // the ell-bit block measured this round
  std::size_t mismatch_count;   // Hamming(measured, target codeword)
};

struct SignTranscript {
  std::vector<SignRound> rounds;
  BitVec final_sigma;
  bool success = false;
};

KeyPair siggen(OracleSuite& suite, DeterministicRng& rng);

/// Measure-and-correct signing. Per iteration: measure the last ell_code
/// coordinates, Hadamard everything, collapse the dual-coordinate functional
/// of every mismatched position (outcomes discarded), Hadamard back. After
/// the configured rounds the whole register is measured; success means the
/// final block decodes to the target codeword within the code radius.
///
/// Consumes the key: a spent KeyPair throws on reuse, and no retry wrapper
/// exists for the same key. Throws std::logic_error if the dual-form support
/// ever leaves the accept set of the coordinate functionals.
std::pair<Signature, SignTranscript> sign(OracleSuite& suite, KeyPair& keypair,
                                          const BitVec& message, const LinearCode& code,
                                          DeterministicRng& rng);

/// Accepts iff p_inverse(pk, sigma) is defined and the last ell_code bits of
/// sigma lie within the code radius of encode(message).
bool verify(OracleSuite& suite, const BitVec& pk, const BitVec& message, const BitVec& sigma,
            const LinearCode& code);

/// Two verifying signatures with distinct sigma vectors under one public key
/// invert to distinct preimages with equal hash. Returns nullopt when
/// sigma0 == sigma1; throws if either signature fails to invert.
std::optional<std::pair<BitVec, BitVec>> strong_unforgeability_witness(OracleSuite& suite,
                                                                       const BitVec& pk,
                                                                       const Signature& sig0,
                                                                       const Signature& sig1);

/// The linear forms of the dual-coordinate functionals for a served matrix:
/// accept is the set of v with v^T A in the bottom-row span, and
/// linear[j] agrees on accept with the j-th coordinate of the dual answer.
struct DualFunctionals {
  Subspace accept;
  std::vector<BitVec> linear;
};
DualFunctionals build_dual_functionals(const BitMatrix& a, std::size_t ell_code);

}  // namespace ossig
