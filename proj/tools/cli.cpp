#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ossig/battery.hpp"
#include "ossig/cpf.hpp"
#include "ossig/ecc.hpp"
#include "ossig/experiments.hpp"
#include "ossig/oracle_suite.hpp"
#include "ossig/oss.hpp"
#include "ossig/stats.hpp"
#include "ossig/subspace_lab.hpp"

namespace ossig {

namespace {

constexpr const char* kDefaultSeedHex =
    "0000000000000000000000000000000000000000000000000000000000000000";

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write file: " + path);
  f << text;
}

Params load_params(const std::string& path) {
  return path.empty() ? toy_params() : Params::from_json_string(slurp(path));
}

std::size_t default_msg_len(const Params& p) {
  return p.ell_code == 12 ? 3 : std::max<std::size_t>(1, p.ell_code / 4);
}

LinearCode derived_code(const DeterministicRng::Seed& seed, const Params& p,
                        std::size_t msg_len) {
  DeterministicRng rng(seed, "ecc");
  return sample_code(rng, msg_len, p.ell_code);
}

struct KeyFile {
  Params params;
  DeterministicRng::Seed seed;
  BitVec pk;
  SymbolicCosetState sk;
  bool spent = false;
  std::size_t msg_len = 0;

  std::string to_json_string() const {
    nlohmann::json j;
    j["params"] = nlohmann::json::parse(params.to_json_string());
    j["seed"] = DeterministicRng::seed_to_hex(seed);
    j["pk"] = pk.to_hex();
    j["sk"] = nlohmann::json::parse(sk.to_json_string());
    j["spent"] = spent;
    j["msg_len"] = msg_len;
    return j.dump(2) + "\n";
  }

  static KeyFile from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    KeyFile key;
    key.params = Params::from_json_string(j.at("params").dump());
    key.seed = DeterministicRng::seed_from_hex(j.at("seed").get<std::string>());
    key.pk = BitVec::from_hex(j.at("pk").get<std::string>(), key.params.r);
    key.sk = SymbolicCosetState::from_json_string(j.at("sk").dump());
    key.spent = j.at("spent").get<bool>();
    key.msg_len = j.at("msg_len").get<std::size_t>();
    return key;
  }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    spill(out_path, text);
}

int cmd_oss_keygen(const std::string& params_path, const std::string& seed_hex,
                   std::size_t msg_bits, const std::string& out_path, std::ostream& out) {
  Params p = load_params(params_path);
  auto seed = DeterministicRng::seed_from_hex(seed_hex);
  OracleSuite suite(p, seed);
  DeterministicRng rng(seed, "keygen");
  KeyPair pair = siggen(suite, rng);
  KeyFile key{p, seed, pair.pk, pair.sk, false, msg_bits ? msg_bits : default_msg_len(p)};
  emit(key.to_json_string(), out_path, out);
  return 0;
}

int cmd_oss_sign(const std::string& key_path, const std::string& msg_hex,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
  KeyFile key = KeyFile::from_json_string(slurp(key_path));
  if (key.spent) {
    err << "error: key is spent; one-shot keys sign exactly once\n";
    return 1;
  }
  OracleSuite suite(key.params, key.seed);
  LinearCode code = derived_code(key.seed, key.params, key.msg_len);
  BitVec message = BitVec::from_hex(msg_hex, key.msg_len);
  KeyPair pair{key.pk, key.sk, false};
  DeterministicRng rng(key.seed, "sign");
  auto [sig, transcript] = sign(suite, pair, message, code, rng);

  key.spent = true;
  spill(key_path, key.to_json_string());

  nlohmann::json j;
  j["pk"] = key.pk.to_hex();
  j["msg"] = message.to_hex();
  j["msg_len"] = key.msg_len;
  j["sigma"] = sig.sigma.to_hex();
  j["success"] = transcript.success;
  std::vector<std::size_t> mismatches;
  for (const auto& round : transcript.rounds) mismatches.push_back(round.mismatch_count);
  j["round_mismatches"] = mismatches;
  emit(j.dump(2) + "\n", out_path, out);
  return transcript.success ? 0 : 1;
}

int cmd_oss_verify(const std::string& params_path, const std::string& seed_hex,
                   const std::string& pk_hex, const std::string& msg_hex,
                   const std::string& sig_hex, std::size_t msg_bits, std::ostream& out) {
  Params p = load_params(params_path);
  auto seed = DeterministicRng::seed_from_hex(seed_hex);
  OracleSuite suite(p, seed);
  std::size_t msg_len = msg_bits ? msg_bits : default_msg_len(p);
  LinearCode code = derived_code(seed, p, msg_len);
  bool ok = verify(suite, BitVec::from_hex(pk_hex, p.r), BitVec::from_hex(msg_hex, msg_len),
                   BitVec::from_hex(sig_hex, p.k), code);
  out << (ok ? "valid" : "invalid") << "\n";
  return ok ? 0 : 1;
}

int cmd_oracle_query(const std::string& params_path, const std::string& seed_hex,
                     const std::string& in_path, std::ostream& out, std::ostream& err,
                     std::istream& in) {
  Params p = load_params(params_path);
  OracleSuite suite(p, DeterministicRng::seed_from_hex(seed_hex));
  std::ifstream file;
  std::istream* src = &in;
  if (!in_path.empty()) {
    file.open(in_path);
    if (!file) throw std::runtime_error("cannot open file: " + in_path);
    src = &file;
  }
  std::string line;
  while (std::getline(*src, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string op, a, b;
    ls >> op;
    if (op == "P" && (ls >> a)) {
      PointOutput o = suite.p_forward(BitVec::from_hex(a, p.n));
      out << o.y.to_hex() << " " << o.u.to_hex() << "\n";
    } else if (op == "Pinv" && (ls >> a >> b)) {
      auto x = suite.p_inverse(BitVec::from_hex(a, p.r), BitVec::from_hex(b, p.k));
      out << (x ? x->to_hex() : "bot") << "\n";
    } else if (op == "D" && (ls >> a >> b)) {
      auto c = suite.d_oracle(BitVec::from_hex(a, p.r), BitVec::from_hex(b, p.k));
      out << (c ? c->to_hex() : "bot") << "\n";
    } else {
      err << "error: bad query line: " << line << "\n";
      return 2;
    }
  }
  return 0;
}

int cmd_lab_superspace(std::size_t k, std::size_t r, std::size_t s, std::size_t trials,
                       const std::string& seed_hex, std::ostream& out) {
  DeterministicRng rng(DeterministicRng::seed_from_hex(seed_hex), "lab/superspace");
  Subspace base = random_subspace(rng, k, r);
  for (std::size_t i = 0; i < trials; ++i) {
    Subspace t = sample_superspace(base, s, rng);
    nlohmann::json j;
    j["trial"] = i;
    std::vector<std::string> rows;
    for (std::size_t b = 0; b < t.basis().rows(); ++b) rows.push_back(t.basis().row(b).to_hex());
    j["superspace_basis"] = rows;
    out << j.dump() << "\n";
  }
  return 0;
}

int cmd_lab_intersect(std::size_t k, std::size_t r, std::size_t s, std::size_t t,
                      std::size_t trials, const std::string& seed_hex, std::ostream& out) {
  DeterministicRng rng(DeterministicRng::seed_from_hex(seed_hex), "lab/intersect");
  std::vector<bool> per_trial;
  IntersectionEstimate est = trivial_intersection_probability(k, r, s, t, trials, rng, &per_trial);
  for (std::size_t i = 0; i < per_trial.size(); ++i)
    out << "{\"trial\":" << i << ",\"trivial\":" << (per_trial[i] ? "true" : "false") << "}\n";
  out << "{\"estimate\":" << est.estimate << ",\"stderr\":" << est.stderr_value
      << ",\"reference_bound\":" << est.reference_bound << "}\n";
  return est.estimate >= est.reference_bound - 3.0 * est.stderr_value ? 0 : 1;
}

int cmd_lab_anticoncentration(std::size_t k, std::size_t r, std::size_t s, double eps,
                              const std::string& adversary_name, const std::string& seed_hex,
                              std::ostream& out, std::ostream& err) {
  DeterministicRng rng(DeterministicRng::seed_from_hex(seed_hex), "lab/anticoncentration");
  Adversary adversary;
  if (adversary_name == "zero") {
    adversary = [k](const MembershipOracle&) { return BitVec(k); };
  } else if (adversary_name == "tdual") {
    if (k > 12) {
      err << "error: tdual adversary reconstructs the oracle, needs k <= 12\n";
      return 2;
    }
    auto adversary_seed = DeterministicRng::seed_from_hex(seed_hex);
    adversary = [k, adversary_seed](const MembershipOracle& oracle) {
      std::vector<BitVec> members;
      for (std::uint64_t vi = 0; vi < (std::uint64_t(1) << k); ++vi) {
        BitVec v = BitVec::from_u64(k, vi);
        if (oracle(v)) members.push_back(v);
      }
      Subspace t_dual = Subspace::from_generators(k, members).dual();
      static std::uint64_t counter = 0;
      DeterministicRng pick(adversary_seed, "tdual/" + std::to_string(counter++));
      for (;;) {
        BitVec u = t_dual.element(pick.next_below(std::uint64_t(1) << t_dual.dim()));
        if (!u.is_zero()) return u;
      }
    };
  } else {
    err << "error: unknown adversary '" << adversary_name << "' (zero|tdual)\n";
    return 2;
  }
  AntiConcentrationRun run = anticoncentration_reduction(adversary, k, r, s, eps, rng);
  for (std::size_t i = 0; i < run.trials.size(); ++i) {
    const char* cls = nullptr;
    switch (run.trials[i].cls) {
      case OutputClass::kZero: cls = "zero"; break;
      case OutputClass::kInTDualNonzero: cls = "t_dual_nonzero"; break;
      case OutputClass::kInSDualOnly: cls = "s_dual_only"; break;
      case OutputClass::kOutsideSDual: cls = "outside"; break;
    }
    out << "{\"trial\":" << i << ",\"class\":\"" << cls << "\"}\n";
  }
  std::size_t good_buckets = 0;
  for (bool b : run.bucket_success) good_buckets += b ? 1 : 0;
  out << "{\"executions\":" << run.executions << ",\"span_dimension\":" << run.span_dimension
      << ",\"buckets\":" << run.bucket_success.size() << ",\"buckets_succeeded\":" << good_buckets
      << ",\"max_adversary_queries\":" << run.max_adversary_queries
      << ",\"hiding_reference\":" << run.hiding_reference << "}\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"one-shot signature oracle simulator"};
  app.require_subcommand(1);

  std::string seed_hex = kDefaultSeedHex;
  if (const char* env = std::getenv("OSSIG_SEED")) seed_hex = env;

  // oss keygen | sign | verify
  auto* oss_cmd = app.add_subcommand("oss", "key lifecycle: keygen, sign, verify");
  oss_cmd->require_subcommand(1);

  std::string params_path, out_path, key_path, msg_hex, pk_hex, sig_hex;
  std::size_t msg_bits = 0;

  auto* keygen = oss_cmd->add_subcommand("keygen", "generate a one-shot key pair");
  keygen->add_option("--params", params_path, "params JSON file (default: toy parameters)");
  keygen->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");
  keygen->add_option("--msg-bits", msg_bits, "message length in bits");
  keygen->add_option("--out", out_path, "write the key JSON here instead of stdout");

  auto* sign_cmd = oss_cmd->add_subcommand("sign", "sign once with a key file");
  sign_cmd->add_option("--key", key_path, "key JSON file (rewritten as spent)")->required();
  sign_cmd->add_option("--msg", msg_hex, "message hex")->required();
  sign_cmd->add_option("--out", out_path, "write the signature JSON here instead of stdout");

  auto* verify_cmd = oss_cmd->add_subcommand("verify", "verify a signature");
  verify_cmd->add_option("--params", params_path, "params JSON file (default: toy parameters)");
  verify_cmd->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");
  verify_cmd->add_option("--pk", pk_hex, "public key hex")->required();
  verify_cmd->add_option("--msg", msg_hex, "message hex")->required();
  verify_cmd->add_option("--sig", sig_hex, "signature hex (k bits)")->required();
  verify_cmd->add_option("--msg-bits", msg_bits, "message length in bits");

  // oracle query
  auto* oracle_cmd = app.add_subcommand("oracle", "query a seeded oracle instance");
  auto* query = oracle_cmd->add_subcommand(
      "query", "read 'P <x>' / 'Pinv <y> <u>' / 'D <y> <v>' lines (hex) from stdin or --in");
  std::string in_path;
  query->add_option("--params", params_path, "params JSON file (default: toy parameters)");
  query->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");
  query->add_option("--in", in_path, "read query lines from this file");

  // cpf selftest
  auto* cpf_cmd = app.add_subcommand("cpf", "folding coset-partition-function checks");
  auto* cpf_selftest = cpf_cmd->add_subcommand("selftest", "exhaustive battery, JSON report");
  std::size_t cpf_n = 12, cpf_r = 8;
  cpf_selftest->add_option("--n", cpf_n, "input bits (default 12)");
  cpf_selftest->add_option("--r", cpf_r, "output bits (default 8)");
  cpf_selftest->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");

  // lab
  auto* lab = app.add_subcommand("lab", "subspace-geometry samplers and reductions");
  lab->require_subcommand(1);
  std::size_t lab_k = 12, lab_r = 2, lab_s = 6, lab_t = 4, lab_trials = 1000;
  double lab_eps = 0.5;
  std::string adversary_name = "tdual";

  auto* lab_super = lab->add_subcommand("superspace", "sample random superspaces, JSON lines");
  lab_super->add_option("--k", lab_k)->required();
  lab_super->add_option("--r", lab_r)->required();
  lab_super->add_option("--s", lab_s)->required();
  lab_super->add_option("--trials", lab_trials);
  lab_super->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");

  auto* lab_int = lab->add_subcommand("intersect", "trivial-intersection Monte Carlo");
  lab_int->add_option("--k", lab_k)->required();
  lab_int->add_option("--r", lab_r)->required();
  lab_int->add_option("--s", lab_s)->required();
  lab_int->add_option("--t", lab_t)->required();
  lab_int->add_option("--trials", lab_trials);
  lab_int->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");

  auto* lab_anti = lab->add_subcommand("anticoncentration", "bookkeeping reduction run");
  lab_anti->add_option("--k", lab_k)->required();
  lab_anti->add_option("--r", lab_r)->required();
  lab_anti->add_option("--s", lab_s)->required();
  lab_anti->add_option("--eps", lab_eps);
  lab_anti->add_option("--adversary", adversary_name, "zero|tdual");
  lab_anti->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");

  // experiment run
  auto* experiment = app.add_subcommand("experiment", "seeded statistical experiments");
  auto* exp_run = experiment->add_subcommand("run", "run one named experiment");
  std::string exp_name;
  std::size_t exp_trials = 0;
  exp_run->add_option("--name", exp_name, "experiment name")->required();
  exp_run->add_option("--trials", exp_trials, "trial count (default: per-experiment)");
  exp_run->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");
  exp_run->add_option("--params", params_path, "params JSON file (default: toy parameters)");
  exp_run->add_option("--out", out_path, "write the report here instead of stdout");

  // selftest all
  auto* selftest = app.add_subcommand("selftest", "deterministic self-test battery");
  auto* selftest_all_cmd = selftest->add_subcommand("all", "run everything, print one report");
  selftest_all_cmd->add_option("--seed", seed_hex, "64-hex-char seed")->envname("OSSIG_SEED");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (keygen->parsed())
      return cmd_oss_keygen(params_path, seed_hex, msg_bits, out_path, out);
    if (sign_cmd->parsed()) return cmd_oss_sign(key_path, msg_hex, out_path, out, err);
    if (verify_cmd->parsed())
      return cmd_oss_verify(params_path, seed_hex, pk_hex, msg_hex, sig_hex, msg_bits, out);
    if (query->parsed()) return cmd_oracle_query(params_path, seed_hex, in_path, out, err, in);
    if (cpf_selftest->parsed()) {
      Report rep = cpf_selftest_report(cpf_n, cpf_r, DeterministicRng::seed_from_hex(seed_hex));
      out << rep.to_text();
      return rep.pass ? 0 : 1;
    }
    if (lab_super->parsed())
      return cmd_lab_superspace(lab_k, lab_r, lab_s, lab_trials, seed_hex, out);
    if (lab_int->parsed())
      return cmd_lab_intersect(lab_k, lab_r, lab_s, lab_t, lab_trials, seed_hex, out);
    if (lab_anti->parsed())
      return cmd_lab_anticoncentration(lab_k, lab_r, lab_s, lab_eps, adversary_name, seed_hex,
                                       out, err);
    if (exp_run->parsed()) {
      ExperimentConfig cfg;
      cfg.name = exp_name;
      cfg.params = load_params(params_path);
      cfg.seed = DeterministicRng::seed_from_hex(seed_hex);
      if (exp_run->count("--trials") > 0 && exp_trials == 0) {
        err << "usage error: --trials must be at least 1\n";
        return 2;
      }
      if (exp_trials == 0) {
        if (exp_name == "sign_rounds") exp_trials = 2000;
        else if (exp_name == "birthday_scaling") exp_trials = 200;
        else if (exp_name == "superspace_uniformity") exp_trials = 7000;
        else if (exp_name == "intersection_bound") exp_trials = 10000;
        else if (exp_name == "reduction_equivalence") exp_trials = 500;
        else exp_trials = 1;
      }
      cfg.trials = exp_trials;
      Report rep = run_experiment(cfg);
      emit(rep.to_text(), out_path, out);
      return rep.pass ? 0 : 1;
    }
    if (selftest_all_cmd->parsed()) {
      std::string report = selftest_all(DeterministicRng::seed_from_hex(seed_hex));
      out << report;
      return report.find("selftest overall: PASS") != std::string::npos ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace ossig
