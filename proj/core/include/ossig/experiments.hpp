#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ossig/ecc.hpp"
#include "ossig/oracle_suite.hpp"
#include "ossig/oss.hpp"
#include "ossig/params.hpp"
#include "ossig/rng.hpp"

namespace ossig {

struct ExperimentConfig {
  std::string name;  // birthday_scaling | sign_rounds | reduction_equivalence |
                     // superspace_uniformity | intersection_bound | cpf_exhaustive
  Params params;     // consulted by sign_rounds; others pin their own shapes
  std::size_t trials = 0;
  DeterministicRng::Seed seed{};

  static const std::vector<std::string>& known_names();
  void validate() const;
};

/// Byte-stable experiment record: one JSON line per trial plus a summary and
/// an explicit pass verdict against the declared tolerance. Rendering the
/// same (config, seed) twice gives identical bytes.
struct Report {
  std::string name;
  std::string seed_hex;
  std::size_t trials = 0;
  std::string tolerance;  // the thresholds this experiment is judged against
  std::vector<std::string> trial_lines;
  std::string summary_json;
  bool pass = false;

  std::string to_text() const;
};

Report run_experiment(const ExperimentConfig& cfg);

/// The exhaustive folding-CPF battery at an arbitrary admissible shape
/// (n/(n-r) integral, 2^n enumerable). The cpf_exhaustive experiment is this
/// report at n=12, r=8.
Report cpf_selftest_report(std::size_t n, std::size_t r, const DeterministicRng::Seed& seed);

/// Fixed battery of reduced-size experiments rendered into one report;
/// byte-identical for identical seeds.
std::string selftest_all(const DeterministicRng::Seed& seed);

/// Counted, budget-enforced query access handed to forgery attackers.
/// Exceeding the budget aborts the attack via BudgetExceeded.
class CountedOracle {
 public:
  struct BudgetExceeded {};

  CountedOracle(OracleSuite& suite, std::uint64_t budget) : suite_(&suite), budget_(budget) {}

  PointOutput p_forward(const BitVec& x) {
    charge();
    return suite_->p_forward(x);
  }
  std::optional<BitVec> p_inverse(const BitVec& y, const BitVec& u) {
    charge();
    return suite_->p_inverse(y, u);
  }
  std::optional<BitVec> d_oracle(const BitVec& y, const BitVec& v) {
    charge();
    return suite_->d_oracle(y, v);
  }
  const Params& params() const { return suite_->params(); }
  std::uint64_t queries() const { return used_; }

 private:
  OracleSuite* suite_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;

  void charge() {
    if (used_ >= budget_) throw BudgetExceeded{};
    ++used_;
  }
};

/// An attacker's claimed double signature.
struct ForgeryAttempt {
  BitVec pk;
  BitVec m0, m1;
  BitVec sigma0, sigma1;
};

using Attacker =
    std::function<std::optional<ForgeryAttempt>(CountedOracle&, const LinearCode&,
                                                DeterministicRng&)>;

struct ForgeryOutcome {
  bool win = false;
  bool budget_exceeded = false;
  std::uint64_t queries_used = 0;
  std::optional<std::pair<BitVec, BitVec>> witness;  // extracted hash collision on a win
};

/// The double-signing game: the attacker must output two verifying
/// signatures on distinct messages under one public key within its query
/// budget. On a win the hash collision is extracted and validated.
ForgeryOutcome forgery_game(OracleSuite& suite, const LinearCode& code, const Attacker& attacker,
                            std::uint64_t budget, DeterministicRng& rng);

/// Reference attackers.
Attacker honest_signer_attacker();
/// Exhaustive fiber search; wins deterministically, needs n <= 14.
Attacker bruteforce_attacker();
/// Honest first signature, uniformly guessed second one.
Attacker random_guessing_attacker();

}  // namespace ossig
