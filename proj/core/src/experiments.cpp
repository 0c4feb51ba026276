#include "ossig/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ossig/battery.hpp"
#include "ossig/cpf.hpp"
#include "ossig/stats.hpp"
#include "ossig/subspace_lab.hpp"

namespace ossig {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

constexpr double kRoundBandLo[3] = {0.45, 0.20, 0.08};
constexpr double kRoundBandHi[3] = {0.55, 0.30, 0.17};
constexpr double kSuccessFloor = 0.85;
constexpr double kRatioLo = 1.4, kRatioHi = 2.9;
constexpr double kMedianLo = 0.5, kMedianHi = 4.0;
constexpr double kChiSquareAlpha = 0.001;

Params birthday_params(std::size_t r) {
  Params p;
  p.lambda = 2;
  p.r = r;
  p.n = r + 4;
  p.k = 6;
  p.ell_code = 2;
  p.rounds = 3;
  p.validate();
  return p;
}

Report run_birthday(const ExperimentConfig& cfg) {
  Report rep;
  rep.tolerance = "consecutive median-query ratios in [1.4,2.9]; medians in [0.5,4]*sqrt(2^r)";
  const std::vector<std::size_t> rs = {8, 10, 12};
  std::vector<double> medians;
  bool pass = true;
  for (std::size_t r : rs) {
    std::vector<double> queries;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      auto suite_seed = DeterministicRng::derive_seed(
          cfg.seed, "birthday/r" + std::to_string(r) + "/t" + std::to_string(i));
      OracleSuite suite(birthday_params(r), suite_seed);
      DeterministicRng probe(suite_seed, "probe");
      std::size_t max_q = std::size_t(64) << (r / 2);
      auto result = collision_search_birthday(
          [&suite](const BitVec& x) { return suite.p_forward(x).y; }, suite.params().n, probe,
          max_q);
      queries.push_back(double(result.queries));
      std::ostringstream line;
      line << "{\"r\":" << r << ",\"trial\":" << i << ",\"queries\":" << result.queries
           << ",\"found\":" << (result.collision ? "true" : "false") << "}";
      rep.trial_lines.push_back(line.str());
    }
    double med = stats::median(queries);
    medians.push_back(med);
    double root = std::sqrt(std::pow(2.0, double(r)));
    if (med < kMedianLo * root || med > kMedianHi * root) pass = false;
  }
  std::vector<double> ratios;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    double ratio = medians[i] / medians[i - 1];
    ratios.push_back(ratio);
    if (ratio < kRatioLo || ratio > kRatioHi) pass = false;
  }
  std::ostringstream sum;
  sum << "{\"medians\":[" << fmt(medians[0]) << "," << fmt(medians[1]) << "," << fmt(medians[2])
      << "],\"ratios\":[" << fmt(ratios[0]) << "," << fmt(ratios[1]) << "]}";
  rep.summary_json = sum.str();
  rep.pass = pass;
  return rep;
}

Report run_sign_rounds(const ExperimentConfig& cfg) {
  Report rep;
  rep.tolerance =
      "mean mismatch fractions per round in [0.45,0.55]/[0.20,0.30]/[0.08,0.17]; "
      "verify rate >= 0.85; every sigma inverts";
  const Params& p = cfg.params;
  const std::size_t msg_len = p.ell_code == 12 ? 3 : std::max<std::size_t>(1, p.ell_code / 4);
  DeterministicRng code_rng(cfg.seed, "sign_rounds/code");
  LinearCode code = sample_code(code_rng, msg_len, p.ell_code);

  std::vector<std::vector<double>> fractions(p.rounds);
  std::size_t successes = 0, inverts = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    auto suite_seed = DeterministicRng::derive_seed(cfg.seed, "sign_rounds/t" + std::to_string(i));
    OracleSuite suite(cfg.params, suite_seed);
    DeterministicRng trial_rng(suite_seed, "trial");
    KeyPair key = siggen(suite, trial_rng);
    BitVec message = trial_rng.next_bitvec(msg_len);
    auto [sig, transcript] = sign(suite, key, message, code, trial_rng);
    std::ostringstream line;
    line << "{\"trial\":" << i << ",\"mismatches\":[";
    for (std::size_t t = 0; t < transcript.rounds.size(); ++t) {
      fractions[t].push_back(double(transcript.rounds[t].mismatch_count) / double(p.ell_code));
      line << (t ? "," : "") << transcript.rounds[t].mismatch_count;
    }
    bool inverted = suite.p_inverse(key.pk, sig.sigma).has_value();
    line << "],\"success\":" << (transcript.success ? "true" : "false")
         << ",\"sigma_inverts\":" << (inverted ? "true" : "false") << "}";
    rep.trial_lines.push_back(line.str());
    if (transcript.success) ++successes;
    if (inverted) ++inverts;
  }

  bool pass = inverts == cfg.trials;
  double success_rate = double(successes) / double(cfg.trials);
  if (success_rate < kSuccessFloor) pass = false;
  std::ostringstream sum;
  sum << "{\"round_mean_fractions\":[";
  for (std::size_t t = 0; t < p.rounds; ++t) {
    double m = stats::mean(fractions[t]);
    sum << (t ? "," : "") << fmt(m);
    if (t < 3 && (m < kRoundBandLo[t] || m > kRoundBandHi[t])) pass = false;
  }
  sum << "],\"verify_rate\":" << fmt(success_rate)
      << ",\"all_sigmas_invert\":" << (inverts == cfg.trials ? "true" : "false") << "}";
  rep.summary_json = sum.str();
  rep.pass = pass;
  return rep;
}

Report run_reduction_equivalence(const ExperimentConfig& cfg) {
  Report rep;
  rep.tolerance = "both simulated oracles pass the full invariant battery; "
                  "every constructed collision transports";
  bool pass = true;

  // dual-free simulation at n=12, r=8 (four 2-bit claw instances), k=8
  auto cpf_seed = DeterministicRng::derive_seed(cfg.seed, "redeq/cpf");
  FoldingCpfOracle cpf = make_folding_cpf(12, 8, cpf_seed);
  SimulatedDualFree dual_free(cpf, 8, DeterministicRng::derive_seed(cfg.seed, "redeq/embed"));
  OracleView df_view = dual_free.view();
  BatteryReport df_battery = run_invariant_battery(df_view);
  if (!df_battery.passed()) pass = false;
  rep.trial_lines.push_back("{\"oracle\":\"dual_free\",\"battery_pass\":" +
                            std::string(df_battery.passed() ? "true" : "false") + "}");

  // collision transport through the input permutation
  std::map<std::uint64_t, std::vector<BitVec>> df_fibers;
  for (std::uint64_t xi = 0; xi < (1u << 12); ++xi) {
    BitVec x = BitVec::from_u64(12, xi);
    df_fibers[dual_free.forward(x).y.to_u64()].push_back(x);
  }
  DeterministicRng pick(cfg.seed, "redeq/pick");
  std::vector<std::vector<BitVec>> fiber_list;
  for (auto& [yi, xs] : df_fibers) fiber_list.push_back(xs);
  std::size_t transported = 0;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const auto& fiber = fiber_list[pick.next_below(fiber_list.size())];
    std::size_t a = pick.next_below(fiber.size());
    std::size_t b = pick.next_below(fiber.size());
    if (a == b) b = (b + 1) % fiber.size();
    BitVec w0 = dual_free.transport(fiber[a]);
    BitVec w1 = dual_free.transport(fiber[b]);
    if (w0 != w1 && cpf.q_forward(w0).y == cpf.q_forward(w1).y) ++transported;
  }
  if (transported != cfg.trials) pass = false;
  rep.trial_lines.push_back("{\"oracle\":\"dual_free\",\"collisions_transported\":" +
                            std::to_string(transported) + ",\"of\":" +
                            std::to_string(cfg.trials) + "}");

  // bloated simulation at outer (n=10, r=4, k=8, s=2) from inner (6, 4, 4)
  Params inner_p;
  inner_p.lambda = 2;
  inner_p.r = 4;
  inner_p.n = 6;
  inner_p.k = 4;
  inner_p.ell_code = 2;
  inner_p.validate();
  Params outer_p;
  outer_p.lambda = 2;
  outer_p.r = 4;
  outer_p.n = 10;
  outer_p.k = 8;
  outer_p.ell_code = 2;
  outer_p.bloat_s = 2;
  outer_p.validate();
  OracleSuite inner(inner_p, DeterministicRng::derive_seed(cfg.seed, "redeq/inner"));
  SimulatedBloated bloated(inner, outer_p,
                           DeterministicRng::derive_seed(cfg.seed, "redeq/outer"));
  OracleView bl_view = bloated.view();
  DualView bl_dual = bloated.dual_view();
  BatteryReport bl_battery = run_invariant_battery(bl_view, &bl_dual);
  if (!bl_battery.passed()) pass = false;
  rep.trial_lines.push_back("{\"oracle\":\"bloated\",\"battery_pass\":" +
                            std::string(bl_battery.passed() ? "true" : "false") + "}");

  // strong collisions: same y, u-difference outside ColSpan(A1)
  std::map<std::uint64_t, std::vector<std::pair<BitVec, BitVec>>> bl_fibers;
  for (std::uint64_t xi = 0; xi < (1u << 10); ++xi) {
    BitVec x = BitVec::from_u64(10, xi);
    PointOutput out = bloated.forward(x);
    bl_fibers[out.y.to_u64()].push_back({x, out.u});
  }
  std::size_t strong_found = 0, strong_transported = 0;
  std::vector<std::uint64_t> bl_keys;
  for (auto& [yi, pts] : bl_fibers) bl_keys.push_back(yi);
  while (strong_found < cfg.trials) {
    std::uint64_t yi = bl_keys[pick.next_below(bl_keys.size())];
    const auto& pts = bl_fibers[yi];
    Subspace a1_span = colspan(bloated.a1_of(BitVec::from_u64(outer_p.r, yi)));
    std::size_t a = pick.next_below(pts.size());
    std::size_t b = pick.next_below(pts.size());
    if (a == b) continue;
    if (a1_span.contains(pts[a].second ^ pts[b].second)) continue;  // not a strong collision
    ++strong_found;
    BitVec xbar0 = bloated.transport(pts[a].first);
    BitVec xbar1 = bloated.transport(pts[b].first);
    if (xbar0 != xbar1 && inner.p_forward(xbar0).y == inner.p_forward(xbar1).y)
      ++strong_transported;
  }
  if (strong_transported != cfg.trials) pass = false;
  rep.trial_lines.push_back("{\"oracle\":\"bloated\",\"strong_collisions_transported\":" +
                            std::to_string(strong_transported) + ",\"of\":" +
                            std::to_string(cfg.trials) + "}");

  std::ostringstream sum;
  sum << "{\"dual_free_battery\":" << (df_battery.passed() ? "true" : "false")
      << ",\"bloated_battery\":" << (bl_battery.passed() ? "true" : "false")
      << ",\"transport_ok\":" << (pass ? "true" : "false") << "}";
  rep.summary_json = sum.str();
  rep.pass = pass;
  return rep;
}

Report run_superspace_uniformity(const ExperimentConfig& cfg) {
  Report rep;
  rep.tolerance = "chi-square p-value > 0.001 over the 7 superspaces (k=4, r=1, s=1)";
  DeterministicRng rng(cfg.seed, "superspace");
  Subspace base = random_subspace(rng, 4, 1);
  std::vector<Subspace> all = enumerate_superspaces(base, 1);
  auto key_of = [](const Subspace& s) {
    std::string key;
    for (std::size_t i = 0; i < s.basis().rows(); ++i) key += s.basis().row(i).to_hex() + ",";
    return key;
  };
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[key_of(all[i])] = i;

  std::vector<std::size_t> counts(all.size(), 0);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Subspace t = sample_superspace(base, 1, rng);
    std::size_t idx = index.at(key_of(t));
    ++counts[idx];
    rep.trial_lines.push_back("{\"trial\":" + std::to_string(i) + ",\"superspace\":" +
                              std::to_string(idx) + "}");
  }
  std::vector<double> expected(all.size(), double(cfg.trials) / double(all.size()));
  double statistic = stats::chi_square_statistic(counts, expected);
  double p = stats::chi_square_pvalue(statistic, all.size() - 1);
  rep.pass = p > kChiSquareAlpha;
  std::ostringstream sum;
  sum << "{\"cells\":" << all.size() << ",\"statistic\":" << fmt(statistic)
      << ",\"p_value\":" << fmt(p) << "}";
  rep.summary_json = sum.str();
  return rep;
}

Report run_intersection_bound(const ExperimentConfig& cfg) {
  Report rep;
  rep.tolerance = "estimate >= 1 - t*2^(t-s) - 3*stderr at (k=12, r=2, s=6, t=4)";
  DeterministicRng rng(cfg.seed, "intersection");
  std::vector<bool> per_trial;
  IntersectionEstimate est =
      trivial_intersection_probability(12, 2, 6, 4, cfg.trials, rng, &per_trial);
  for (std::size_t i = 0; i < per_trial.size(); ++i)
    rep.trial_lines.push_back("{\"trial\":" + std::to_string(i) + ",\"trivial\":" +
                              (per_trial[i] ? "true" : "false") + "}");
  double floor = est.reference_bound - 3.0 * est.stderr_value;
  rep.pass = est.estimate >= floor;
  std::ostringstream sum;
  sum << "{\"estimate\":" << fmt(est.estimate) << ",\"stderr\":" << fmt(est.stderr_value)
      << ",\"reference_bound\":" << fmt(est.reference_bound) << ",\"floor\":" << fmt(floor)
      << "}";
  rep.summary_json = sum.str();
  return rep;
}

}  // namespace

Report cpf_selftest_report(std::size_t n, std::size_t r, const DeterministicRng::Seed& seed) {
  Report rep;
  rep.name = "cpf_selftest";
  rep.seed_hex = DeterministicRng::seed_to_hex(seed);
  rep.trials = 1;
  rep.tolerance = "exhaustive: round trips, coset fibers, trapdoor isolation, "
                  "coordinate preservation";
  if (n > 16) throw std::invalid_argument("cpf selftest: n too large for exhaustion");
  FoldingCpfOracle cpf = make_folding_cpf(n, r, DeterministicRng::derive_seed(seed, "cpf"));
  const std::size_t m = cpf.instance_count();

  bool roundtrip = true, missing_agrees = true, trapdoor_isolated = true;
  bool fibers_ok = true, coords_ok = true;
  std::map<std::uint64_t, std::vector<BitVec>> fibers;
  std::vector<FoldingCpfOracle::Output> outputs(std::size_t(1) << n);
  for (std::uint64_t wi = 0; wi < (std::uint64_t(1) << n); ++wi) {
    BitVec w = BitVec::from_u64(n, wi);
    auto out = cpf.q_forward(w);
    outputs[wi] = out;
    fibers[out.y.to_u64()].push_back(w);
    auto back = cpf.q_inverse(out.y, out.folded);
    if (!back || *back != w) roundtrip = false;
  }
  // withheld-trapdoor equivalence, with counters proving isolation
  for (std::size_t i_star = 0; i_star < m; ++i_star) {
    std::uint64_t before = cpf.instance(i_star).trapdoor_queries();
    for (std::uint64_t wi = 0; wi < (std::uint64_t(1) << n); ++wi) {
      auto via_missing = cpf.q_inverse_missing(i_star, outputs[wi].y, outputs[wi].folded);
      if (!via_missing || *via_missing != BitVec::from_u64(n, wi)) missing_agrees = false;
    }
    if (cpf.instance(i_star).trapdoor_queries() != before) trapdoor_isolated = false;
  }
  for (auto& [yi, ws] : fibers) {
    BitVec y = BitVec::from_u64(r, yi);
    if (ws.size() != (std::size_t(1) << m) || !is_coset(ws)) fibers_ok = false;
    auto ext = cpf.preimage_extended(y);
    auto fext = cpf.folded_extended(y);
    for (const BitVec& w : ws) {
      auto coords = solve(ext.a, w ^ ext.b);
      auto out = cpf.q_forward(w);
      auto fcoords = solve(fext.a, out.folded ^ fext.b);
      BitVec first_bits = out.folded.slice(0, m);
      if (!coords || *coords != first_bits || !fcoords || *fcoords != first_bits)
        coords_ok = false;
    }
    rep.trial_lines.push_back("{\"y\":\"" + y.to_hex() + "\",\"fiber_size\":" +
                              std::to_string(ws.size()) + "}");
  }
  rep.pass = roundtrip && missing_agrees && trapdoor_isolated && fibers_ok && coords_ok;
  std::ostringstream sum;
  sum << "{\"roundtrip\":" << (roundtrip ? "true" : "false")
      << ",\"missing_trapdoor_agrees\":" << (missing_agrees ? "true" : "false")
      << ",\"trapdoor_isolated\":" << (trapdoor_isolated ? "true" : "false")
      << ",\"fibers_are_cosets\":" << (fibers_ok ? "true" : "false")
      << ",\"coordinates_preserved\":" << (coords_ok ? "true" : "false") << "}";
  rep.summary_json = sum.str();
  return rep;
}

const std::vector<std::string>& ExperimentConfig::known_names() {
  static const std::vector<std::string> names = {
      "birthday_scaling",       "sign_rounds",        "reduction_equivalence",
      "superspace_uniformity",  "intersection_bound", "cpf_exhaustive"};
  return names;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  params.validate();
  for (const std::string& known : known_names())
    if (name == known) return;
  throw std::invalid_argument("experiment: unknown name '" + name + "'");
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "=== experiment: " << name << " ===\n";
  os << "seed: " << seed_hex << "\n";
  os << "trials: " << trials << "\n";
  os << "tolerance: " << tolerance << "\n";
  for (const std::string& line : trial_lines) os << line << "\n";
  os << "summary: " << summary_json << "\n";
  os << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Report run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  Report rep;
  if (cfg.name == "birthday_scaling")
    rep = run_birthday(cfg);
  else if (cfg.name == "sign_rounds")
    rep = run_sign_rounds(cfg);
  else if (cfg.name == "reduction_equivalence")
    rep = run_reduction_equivalence(cfg);
  else if (cfg.name == "superspace_uniformity")
    rep = run_superspace_uniformity(cfg);
  else if (cfg.name == "intersection_bound")
    rep = run_intersection_bound(cfg);
  else
    rep = cpf_selftest_report(12, 8, cfg.seed);
  rep.name = cfg.name;
  rep.seed_hex = DeterministicRng::seed_to_hex(cfg.seed);
  rep.trials = cfg.trials;
  return rep;
}

ForgeryOutcome forgery_game(OracleSuite& suite, const LinearCode& code, const Attacker& attacker,
                            std::uint64_t budget, DeterministicRng& rng) {
  ForgeryOutcome outcome;
  CountedOracle counted(suite, budget);
  std::optional<ForgeryAttempt> attempt;
  try {
    attempt = attacker(counted, code, rng);
  } catch (const CountedOracle::BudgetExceeded&) {
    outcome.budget_exceeded = true;
  }
  outcome.queries_used = counted.queries();
  if (outcome.budget_exceeded || !attempt) return outcome;

  if (attempt->m0 == attempt->m1) return outcome;
  if (!verify(suite, attempt->pk, attempt->m0, attempt->sigma0, code)) return outcome;
  if (!verify(suite, attempt->pk, attempt->m1, attempt->sigma1, code)) return outcome;
  outcome.win = true;

  auto witness = strong_unforgeability_witness(suite, attempt->pk,
                                               Signature{attempt->sigma0, attempt->m0},
                                               Signature{attempt->sigma1, attempt->m1});
  if (!witness) throw std::logic_error("forgery game: verifying pair with equal sigmas");
  if (witness->first == witness->second ||
      suite.p_forward(witness->first).y != suite.p_forward(witness->second).y)
    throw std::logic_error("forgery game: extracted witness is not a hash collision");
  outcome.witness = witness;
  return outcome;
}

Attacker honest_signer_attacker() {
  return [](CountedOracle& oracle, const LinearCode& code,
            DeterministicRng& rng) -> std::optional<ForgeryAttempt> {
    const Params& p = oracle.params();
    BitVec x = rng.next_bitvec(p.n);
    PointOutput out = oracle.p_forward(x);
    BitVec block = out.u.slice(p.k - p.ell_code, p.ell_code);
    // one honest signature at most: decode the measured block if possible
    for (std::uint64_t mi = 0; mi < (std::uint64_t(1) << code.msg_len); ++mi) {
      BitVec m = BitVec::from_u64(code.msg_len, mi);
      if (code.within_radius(block, code.encode(m)))
        return ForgeryAttempt{out.y, m, m, out.u, out.u};  // same message twice: not a forgery
    }
    return std::nullopt;
  };
}

Attacker bruteforce_attacker() {
  return [](CountedOracle& oracle, const LinearCode& code,
            DeterministicRng& rng) -> std::optional<ForgeryAttempt> {
    const Params& p = oracle.params();
    if (p.n > 14) throw std::invalid_argument("bruteforce attacker: n too large");
    BitVec x0 = rng.next_bitvec(p.n);
    PointOutput target = oracle.p_forward(x0);
    BitVec m0 = BitVec::from_u64(code.msg_len, 0);
    BitVec m1 = BitVec::from_u64(code.msg_len, 1);
    BitVec c0 = code.encode(m0), c1 = code.encode(m1);
    std::optional<BitVec> sigma0, sigma1;
    for (std::uint64_t xi = 0; xi < (std::uint64_t(1) << p.n); ++xi) {
      PointOutput out = oracle.p_forward(BitVec::from_u64(p.n, xi));
      if (out.y != target.y) continue;
      BitVec block = out.u.slice(p.k - p.ell_code, p.ell_code);
      if (!sigma0 && code.within_radius(block, c0)) sigma0 = out.u;
      if (!sigma1 && code.within_radius(block, c1)) sigma1 = out.u;
      if (sigma0 && sigma1) break;
    }
    if (!sigma0 || !sigma1) return std::nullopt;
    return ForgeryAttempt{target.y, m0, m1, *sigma0, *sigma1};
  };
}

Attacker random_guessing_attacker() {
  return [](CountedOracle& oracle, const LinearCode& code,
            DeterministicRng& rng) -> std::optional<ForgeryAttempt> {
    const Params& p = oracle.params();
    BitVec x = rng.next_bitvec(p.n);
    PointOutput out = oracle.p_forward(x);
    BitVec block = out.u.slice(p.k - p.ell_code, p.ell_code);
    std::optional<BitVec> m0;
    for (std::uint64_t mi = 0; mi < (std::uint64_t(1) << code.msg_len); ++mi) {
      BitVec m = BitVec::from_u64(code.msg_len, mi);
      if (code.within_radius(block, code.encode(m))) {
        m0 = m;
        break;
      }
    }
    if (!m0) return std::nullopt;
    BitVec m1 = *m0;
    m1.flip(0);
    BitVec c1 = code.encode(m1);
    // guess the free coordinates, planting the wanted block
    for (;;) {
      BitVec guess = rng.next_bitvec(p.k);
      for (std::size_t j = 0; j < p.ell_code; ++j) guess.set(p.k - p.ell_code + j, c1.get(j));
      if (oracle.p_inverse(out.y, guess))
        return ForgeryAttempt{out.y, *m0, m1, out.u, guess};
    }
  };
}

std::string selftest_all(const DeterministicRng::Seed& seed) {
  std::ostringstream os;
  os << "selftest seed: " << DeterministicRng::seed_to_hex(seed) << "\n\n";

  auto run = [&os, &seed](const std::string& name, std::size_t trials, const Params& params) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.trials = trials;
    cfg.params = params;
    cfg.seed = DeterministicRng::derive_seed(seed, "selftest/" + name);
    Report rep = run_experiment(cfg);
    os << rep.to_text() << "\n";
    return rep.pass;
  };

  bool all = true;
  all &= run("cpf_exhaustive", 1, toy_params());
  all &= run("reduction_equivalence", 100, toy_params());
  all &= run("sign_rounds", 300, toy_params());
  all &= run("birthday_scaling", 200, toy_params());
  all &= run("superspace_uniformity", 2000, toy_params());
  all &= run("intersection_bound", 2000, toy_params());

  // the double-signing game with the reference attackers at tiny parameters
  Params game_p;
  game_p.lambda = 2;
  game_p.r = 4;
  game_p.n = 12;
  game_p.k = 10;
  game_p.ell_code = 4;
  game_p.validate();
  DeterministicRng game_rng(seed, "selftest/forgery");
  LinearCode game_code = sample_code(game_rng, 1, game_p.ell_code);
  OracleSuite honest_suite(game_p, DeterministicRng::derive_seed(seed, "selftest/forgery/honest"));
  auto honest = forgery_game(honest_suite, game_code, honest_signer_attacker(), 64, game_rng);
  OracleSuite brute_suite(game_p, DeterministicRng::derive_seed(seed, "selftest/forgery/brute"));
  auto brute = forgery_game(brute_suite, game_code, bruteforce_attacker(),
                            (std::uint64_t(1) << game_p.n) + 64, game_rng);
  os << "=== forgery games ===\n";
  os << "honest_signer: win=" << (honest.win ? "true" : "false")
     << " queries=" << honest.queries_used << "\n";
  os << "bruteforce: win=" << (brute.win ? "true" : "false") << " queries=" << brute.queries_used
     << " witness=" << (brute.witness ? "extracted" : "none") << "\n";
  bool games_ok = !honest.win && brute.win && brute.witness.has_value();
  os << "result: " << (games_ok ? "PASS" : "FAIL") << "\n\n";
  all &= games_ok;

  os << "selftest overall: " << (all ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace ossig
