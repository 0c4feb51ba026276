#include "ossig/cpf.hpp"

#include <cmath>
#include <unordered_map>

namespace ossig {

FoldingCpfOracle make_folding_cpf(std::size_t n, std::size_t r,
                                  const DeterministicRng::Seed& seed) {
  if (r == 0 || r >= n || n % (n - r) != 0)
    throw std::invalid_argument("folding cpf: n/(n-r) must be an integer and 0 < r < n");
  const std::size_t m = n - r;
  const std::size_t bits = n / m - 1;
  if (bits == 0) throw std::invalid_argument("folding cpf: instances need at least one bit");
  std::vector<ClawFreePermutation> inst;
  inst.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    inst.emplace_back(bits, seed, "CPF/inst:" + std::to_string(i));
  return FoldingCpfOracle(std::move(inst));
}

SimulatedDualFree::SimulatedDualFree(FoldingCpfOracle& cpf, std::size_t k,
                                     const DeterministicRng::Seed& seed,
                                     std::optional<std::size_t> withhold_trapdoor)
    : cpf_(&cpf),
      k_(k),
      withhold_(withhold_trapdoor),
      gamma_(cpf.in_bits(), DeterministicRng(seed, "GAMMA")),
      embed_(seed, "CY", [k, folded = cpf.folded_bits()](DeterministicRng& rng) {
        return CosetDescription{random_full_rank(rng, k, folded), rng.next_bitvec(k)};
      }) {
  if (k_ < cpf_->folded_bits())
    throw std::invalid_argument("simulated dual-free: k must be at least folded_bits");
  if (withhold_ && *withhold_ >= cpf_->instance_count())
    throw std::out_of_range("simulated dual-free: withheld index out of range");
}

PointOutput SimulatedDualFree::forward(const BitVec& x) {
  if (x.size() != n()) throw std::invalid_argument("simulated forward: length mismatch");
  auto out = cpf_->q_forward(gamma_.forward(x));
  const CosetDescription& e = embed_.query(out.y);
  return PointOutput{out.y, e.a.mat_vec(out.folded) ^ e.b};
}

std::optional<BitVec> SimulatedDualFree::inverse(const BitVec& y, const BitVec& u) {
  if (y.size() != r() || u.size() != k_)
    throw std::invalid_argument("simulated inverse: length mismatch");
  const CosetDescription& e = embed_.query(y);
  auto folded = solve(e.a, u ^ e.b);
  if (!folded) return std::nullopt;
  auto w = withhold_ ? cpf_->q_inverse_missing(*withhold_, y, *folded)
                     : cpf_->q_inverse(y, *folded);
  if (!w) return std::nullopt;
  return gamma_.inverse(*w);
}

BitVec SimulatedDualFree::transport(const BitVec& x) { return gamma_.forward(x); }

OracleView SimulatedDualFree::view() {
  return OracleView{n(), r(), k_,
                    [this](const BitVec& x) { return forward(x); },
                    [this](const BitVec& y, const BitVec& u) { return inverse(y, u); }};
}

SimulatedBloated::SimulatedBloated(OracleSuite& inner, const Params& outer,
                                   const DeterministicRng::Seed& seed)
    : inner_(&inner),
      outer_(outer),
      gamma_(outer.n, DeterministicRng(seed, "OUTER_GAMMA")),
      mixer_(seed, "OUTER_C", [outer](DeterministicRng& rng) {
        const std::size_t tail = outer.n - outer.r - *outer.bloat_s;
        for (std::size_t attempt = 0; attempt < 256; ++attempt) {
          BitMatrix c = random_matrix(rng, outer.k, outer.k);
          if (rank(c) != outer.k) continue;
          BitMatrix a1 = c.cols_slice(outer.k - tail, tail);
          if (rank(a1.rows_slice(outer.k - outer.ell_code, outer.ell_code)) != outer.ell_code)
            continue;
          return Mixer{std::move(c), rng.next_bitvec(tail)};
        }
        throw std::runtime_error("simulated bloated: mixer sampling exhausted");
      }) {
  outer_.validate();
  if (!outer_.bloat_s) throw std::invalid_argument("simulated bloated: outer bloat_s required");
  const std::size_t s = *outer_.bloat_s;
  const Params& ip = inner_->params();
  if (ip.n != outer_.r + s || ip.r != outer_.r ||
      ip.k != outer_.k - (outer_.n - outer_.r - s))
    throw std::invalid_argument(
        "simulated bloated: inner suite must be at (r + s, r, k - (n - r - s))");
}

PointOutput SimulatedBloated::forward(const BitVec& x) {
  if (x.size() != outer_.n) throw std::invalid_argument("bloated forward: length mismatch");
  const std::size_t s = *outer_.bloat_s;
  const std::size_t tail = outer_.n - outer_.r - s;
  BitVec g = gamma_.forward(x);
  BitVec xbar = g.slice(0, outer_.r + s);
  BitVec xtail = g.slice(outer_.r + s, tail);
  PointOutput ip = inner_->p_forward(xbar);
  const Mixer& m = mixer_.query(ip.y);
  return PointOutput{ip.y, m.c.mat_vec(BitVec::concat(ip.u, xtail ^ m.d))};
}

std::optional<BitVec> SimulatedBloated::inverse(const BitVec& y, const BitVec& u) {
  if (y.size() != outer_.r || u.size() != outer_.k)
    throw std::invalid_argument("bloated inverse: length mismatch");
  const std::size_t s = *outer_.bloat_s;
  const std::size_t tail = outer_.n - outer_.r - s;
  const std::size_t inner_k = outer_.k - tail;
  const Mixer& m = mixer_.query(y);
  auto w = solve(m.c, u);  // always solvable, C is invertible
  BitVec ubar = w->slice(0, inner_k);
  BitVec xtail = w->slice(inner_k, tail) ^ m.d;
  auto xbar = inner_->p_inverse(y, ubar);
  if (!xbar) return std::nullopt;
  return gamma_.inverse(BitVec::concat(*xbar, xtail));
}

std::optional<BitVec> SimulatedBloated::d_bloated(const BitVec& y, const BitVec& v) {
  return dual_coordinates(a1_of(y), outer_.ell_code, v);
}

BitMatrix SimulatedBloated::a1_of(const BitVec& y) {
  const std::size_t tail = outer_.n - outer_.r - *outer_.bloat_s;
  return mixer_.query(y).c.cols_slice(outer_.k - tail, tail);
}

BitMatrix SimulatedBloated::effective_matrix(const BitVec& y) {
  const std::size_t s = *outer_.bloat_s;
  const std::size_t tail = outer_.n - outer_.r - s;
  const std::size_t inner_k = outer_.k - tail;
  const BitMatrix& abar = inner_->coset(y).a;  // inner_k x s
  BitMatrix block(outer_.k, outer_.n - outer_.r);
  for (std::size_t i = 0; i < inner_k; ++i)
    for (std::size_t j = 0; j < s; ++j) block.set(i, j, abar.get(i, j));
  for (std::size_t i = 0; i < tail; ++i) block.set(inner_k + i, s + i, true);
  return mat_mul(mixer_.query(y).c, block);
}

BitVec SimulatedBloated::transport(const BitVec& x) {
  return gamma_.forward(x).slice(0, outer_.r + *outer_.bloat_s);
}

OracleView SimulatedBloated::view() {
  return OracleView{outer_.n, outer_.r, outer_.k,
                    [this](const BitVec& x) { return forward(x); },
                    [this](const BitVec& y, const BitVec& u) { return inverse(y, u); }};
}

DualView SimulatedBloated::dual_view() {
  return DualView{outer_.ell_code,
                  [this](const BitVec& y, const BitVec& v) { return d_bloated(y, v); },
                  [this](const BitVec& y) { return a1_of(y); }};
}

BirthdayResult collision_search_birthday(const std::function<BitVec(const BitVec&)>& fn,
                                         std::size_t in_bits, DeterministicRng& rng,
                                         std::size_t max_queries) {
  BirthdayResult result;
  std::unordered_map<BitVec, BitVec, BitVec::Hash> seen;  // output -> input
  std::unordered_map<BitVec, BitVec, BitVec::Hash> asked;  // input -> output
  const bool enumerable = in_bits < 40;
  while (result.queries < max_queries) {
    if (enumerable && asked.size() == (std::size_t(1) << in_bits)) break;  // domain used up
    BitVec x = rng.next_bitvec(in_bits);
    if (asked.contains(x)) continue;
    BitVec y = fn(x);
    ++result.queries;
    asked.emplace(x, y);
    auto [it, fresh] = seen.emplace(y, x);
    if (!fresh) {
      result.collision = std::make_pair(it->second, x);
      return result;
    }
  }
  return result;
}

void LweTcfParams::validate() const {
  if (u == 0 || v == 0) throw std::invalid_argument("lwe params: u, v must be positive");
  if (v < u) throw std::invalid_argument("lwe params: need v >= u");
  auto power_of_two = [](std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; };
  if (!power_of_two(q) || !power_of_two(big_b))
    throw std::invalid_argument("lwe params: q and B must be powers of two");
  if (sigma < 1) throw std::invalid_argument("lwe params: sigma >= 1");
  if (b_bar < sigma) throw std::invalid_argument("lwe params: B_bar >= sigma");
  if (big_b < 2 * b_bar) throw std::invalid_argument("lwe params: B >= 2 * B_bar");
  if (q < 2 * big_b) throw std::invalid_argument("lwe params: q >= 2 * B");
}

std::size_t LweTcfParams::q_bits() const {
  std::size_t b = 0;
  while ((std::int64_t(1) << b) < q) ++b;
  return b;
}

std::size_t LweTcfParams::f_bits() const {
  std::size_t b = 0;
  while ((std::int64_t(1) << b) < 2 * big_b) ++b;
  return b;
}

LweTcf::LweTcf(const LweTcfParams& params, DeterministicRng& rng) : p_(params) {
  p_.validate();
  mat_b_.assign(p_.v, std::vector<std::int64_t>(p_.u));
  for (auto& row : mat_b_)
    for (auto& x : row) x = std::int64_t(rng.next_below(p_.q));
  s_.resize(p_.u);
  for (auto& x : s_) x = std::int64_t(rng.next_below(p_.q));
  // discrete gaussian of width sigma, truncated to (-B_bar, B_bar]
  e_.resize(p_.v);
  for (auto& x : e_) {
    for (;;) {
      std::int64_t cand = std::int64_t(rng.next_below(2 * p_.b_bar)) - (p_.b_bar - 1);
      double w = std::exp(-double(cand) * double(cand) / (2.0 * p_.sigma * p_.sigma));
      if (rng.next_unit_double() < w) {
        x = cand;
        break;
      }
    }
  }
  c_.resize(p_.v);
  for (std::size_t i = 0; i < p_.v; ++i) {
    std::int64_t acc = e_[i];
    for (std::size_t j = 0; j < p_.u; ++j) acc += mat_b_[i][j] * s_[j];
    c_[i] = mod_q(acc);
  }
}

std::int64_t LweTcf::mod_q(std::int64_t x) const { return ((x % p_.q) + p_.q) % p_.q; }

std::vector<std::int64_t> LweTcf::eval(const std::vector<std::int64_t>& t,
                                       const std::vector<std::int64_t>& f, bool b) const {
  if (t.size() != p_.u || f.size() != p_.v) throw std::invalid_argument("lwe eval: size mismatch");
  for (std::int64_t x : t)
    if (x < 0 || x >= p_.q) throw std::invalid_argument("lwe eval: t out of Z_q");
  for (std::int64_t x : f)
    if (x <= -p_.big_b || x > p_.big_b) throw std::invalid_argument("lwe eval: f out of (-B, B]");
  std::vector<std::int64_t> y(p_.v);
  for (std::size_t i = 0; i < p_.v; ++i) {
    std::int64_t acc = f[i] + (b ? c_[i] : 0);
    for (std::size_t j = 0; j < p_.u; ++j) acc += mat_b_[i][j] * t[j];
    y[i] = mod_q(acc);
  }
  return y;
}

std::optional<LweTcf::Claw> LweTcf::claw_bruteforce(const std::vector<std::int64_t>& y) const {
  if (p_.u > 3 || p_.v > 6 || p_.q > 64)
    throw std::invalid_argument("lwe brute force: parameters too large");
  if (y.size() != p_.v) throw std::invalid_argument("lwe brute force: size mismatch");
  // for fixed (b, t) the noise is determined: f = y - B t - b c lifted to
  // (-B, B], valid only if the lift lands in range
  auto preimage = [this, &y](bool b) -> std::optional<std::pair<std::vector<std::int64_t>,
                                                                std::vector<std::int64_t>>> {
    std::vector<std::int64_t> t(p_.u, 0);
    for (;;) {
      std::vector<std::int64_t> f(p_.v);
      bool ok = true;
      for (std::size_t i = 0; i < p_.v && ok; ++i) {
        std::int64_t acc = y[i] - (b ? c_[i] : 0);
        for (std::size_t j = 0; j < p_.u; ++j) acc -= mat_b_[i][j] * t[j];
        std::int64_t raw = mod_q(acc);
        if (raw <= p_.big_b)
          f[i] = raw;
        else if (raw - p_.q > -p_.big_b)
          f[i] = raw - p_.q;
        else
          ok = false;
      }
      if (ok) return std::make_pair(t, f);
      std::size_t j = 0;
      while (j < p_.u && ++t[j] == p_.q) t[j++] = 0;
      if (j == p_.u) return std::nullopt;
    }
  };
  auto p0 = preimage(false);
  auto p1 = preimage(true);
  if (!p0 || !p1) return std::nullopt;
  return Claw{p0->first, p0->second, p1->first, p1->second};
}

namespace {

std::vector<std::int64_t> unpack_field(const BitVec& bits, std::size_t from, std::size_t count,
                                       std::size_t width) {
  std::vector<std::int64_t> out(count, 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (bits.get(from + i * width + j)) out[i] |= std::int64_t(1) << j;
  return out;
}

void pack_field(BitVec& bits, std::size_t from, const std::vector<std::int64_t>& values,
                std::size_t width) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < width; ++j)
      if ((values[i] >> j) & 1) bits.set(from + i * width + j, true);
}

}  // namespace

BitVec LweTcf::eval(const BitVec& input) {
  if (input.size() != in_bits()) throw std::invalid_argument("lwe eval: packed length mismatch");
  bool b = input.get(0);
  auto t = unpack_field(input, 1, p_.u, p_.q_bits());
  auto raw_f = unpack_field(input, 1 + p_.u * p_.q_bits(), p_.v, p_.f_bits());
  std::vector<std::int64_t> f(p_.v);
  for (std::size_t i = 0; i < p_.v; ++i)
    f[i] = raw_f[i] <= p_.big_b ? raw_f[i] : raw_f[i] - 2 * p_.big_b;
  auto y = eval(t, f, b);
  BitVec out(out_bits());
  pack_field(out, 0, y, p_.q_bits());
  return out;
}

std::optional<BitVec> LweTcf::invert(bool b, const BitVec& y) {
  if (y.size() != out_bits()) throw std::invalid_argument("lwe invert: packed length mismatch");
  if (p_.u > 3 || p_.v > 6 || p_.q > 64)
    throw std::invalid_argument("lwe invert: parameters too large for brute force");
  ++trapdoor_queries_;
  std::vector<std::int64_t> t(p_.u, 0);
  for (;;) {
    BitVec eff(eff_bits());
    pack_field(eff, 0, t, p_.q_bits());
    if (auto input = recover_input(b, y, eff)) return input;
    std::size_t j = 0;
    while (j < p_.u && ++t[j] == p_.q) t[j++] = 0;
    if (j == p_.u) return std::nullopt;
  }
}

BitVec LweTcf::eff_of(const BitVec& input) const {
  return input.slice(1, p_.u * p_.q_bits());
}

std::optional<BitVec> LweTcf::recover_input(bool b, const BitVec& y, const BitVec& eff) const {
  if (y.size() != out_bits() || eff.size() != eff_bits())
    throw std::invalid_argument("lwe recover: packed length mismatch");
  auto yv = unpack_field(y, 0, p_.v, p_.q_bits());
  auto t = unpack_field(eff, 0, p_.u, p_.q_bits());
  std::vector<std::int64_t> f(p_.v);
  for (std::size_t i = 0; i < p_.v; ++i) {
    std::int64_t acc = yv[i] - (b ? c_[i] : 0);
    for (std::size_t j = 0; j < p_.u; ++j) acc -= mat_b_[i][j] * t[j];
    std::int64_t raw = mod_q(acc);
    if (raw <= p_.big_b)
      f[i] = raw;
    else if (raw - p_.q > -p_.big_b)
      f[i] = raw - p_.q;
    else
      return std::nullopt;
  }
  BitVec input(in_bits());
  input.set(0, b);
  pack_field(input, 1, t, p_.q_bits());
  std::vector<std::int64_t> raw_f(p_.v);
  for (std::size_t i = 0; i < p_.v; ++i) raw_f[i] = f[i] >= 0 ? f[i] : f[i] + 2 * p_.big_b;
  pack_field(input, 1 + p_.u * p_.q_bits(), raw_f, p_.f_bits());
  return input;
}

}  // namespace ossig
