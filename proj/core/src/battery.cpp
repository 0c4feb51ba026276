#include "ossig/battery.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ossig {

std::string BatteryReport::summary() const {
  std::ostringstream os;
  auto line = [&os](const char* name, bool ok) {
    os << name << ": " << (ok ? "ok" : "FAIL") << "\n";
  };
  line("injective", injective);
  line("inverse_law", inverse_law);
  line("fibers_are_cosets", fibers_are_cosets);
  line("fiber_dimension", fiber_dimension_ok);
  line("rejects_outside", rejects_outside);
  line("dual_sound", dual_sound);
  os << "points_checked: " << points_checked << "\n";
  os << "fibers_checked: " << fibers_checked << "\n";
  os << "dual_inputs_checked: " << dual_inputs_checked << "\n";
  return os.str();
}

bool is_coset(const std::vector<BitVec>& points) {
  if (points.empty()) return false;
  std::unordered_set<BitVec, BitVec::Hash> diffs;
  const BitVec& base = points[0];
  for (const BitVec& p : points) diffs.insert(p ^ base);
  if (diffs.size() != points.size()) return false;
  for (const BitVec& a : diffs)
    for (const BitVec& b : diffs)
      if (!diffs.contains(a ^ b)) return false;
  return true;
}

namespace {

bool dual_matches_enumeration(const DualView& dual, const BitVec& y, std::size_t k,
                              std::size_t& counter) {
  BitMatrix a = dual.matrix_of(y);
  BitMatrix bottom = a.rows_slice(a.rows() - dual.ell, dual.ell);
  BitMatrix at = a.transpose();
  // row span of the bottom block, by enumeration
  std::unordered_set<BitVec, BitVec::Hash> span;
  for (std::uint64_t c = 0; c < (std::uint64_t(1) << dual.ell); ++c) {
    BitVec w(a.cols());
    for (std::size_t j = 0; j < dual.ell; ++j)
      if ((c >> j) & 1) w ^= bottom.row(j);
    span.insert(w);
  }
  for (std::uint64_t vi = 0; vi < (std::uint64_t(1) << k); ++vi) {
    BitVec v = BitVec::from_u64(k, vi);
    BitVec w = at.mat_vec(v);
    auto answer = dual.query(y, v);
    ++counter;
    if (span.contains(w) != answer.has_value()) return false;
    if (answer) {
      // reconstruct v^T A from the returned coordinates
      BitVec rebuilt(a.cols());
      for (std::size_t j = 0; j < dual.ell; ++j)
        if (answer->get(j)) rebuilt ^= bottom.row(j);
      if (rebuilt != w) return false;
    }
  }
  return true;
}

}  // namespace

BatteryReport run_invariant_battery(const OracleView& view, const DualView* dual,
                                    std::size_t dual_ys) {
  if (view.n > 20) throw std::invalid_argument("battery: exhaustive range too large (n > 20)");
  BatteryReport rep;
  rep.injective = true;
  rep.inverse_law = true;
  rep.rejects_outside = true;

  std::unordered_set<BitVec, BitVec::Hash> seen_outputs;  // y || u
  std::map<std::uint64_t, std::vector<BitVec>> fibers;    // keyed by y value
  for (std::uint64_t xi = 0; xi < (std::uint64_t(1) << view.n); ++xi) {
    BitVec x = BitVec::from_u64(view.n, xi);
    PointOutput out = view.forward(x);
    ++rep.points_checked;
    if (!seen_outputs.insert(BitVec::concat(out.y, out.u)).second) rep.injective = false;
    auto back = view.inverse(out.y, out.u);
    if (!back || *back != x) rep.inverse_law = false;
    fibers[out.y.to_u64()].push_back(out.u);
  }

  rep.fibers_are_cosets = true;
  rep.fiber_dimension_ok = true;
  const std::size_t expected = std::size_t(1) << (view.n - view.r);
  for (auto& [yi, us] : fibers) {
    ++rep.fibers_checked;
    if (us.size() != expected) rep.fiber_dimension_ok = false;
    if (!is_coset(us)) rep.fibers_are_cosets = false;
    // one off-fiber probe per fiber: flip a vector out of the coset if any
    // k-bit vector is left outside it
    if (view.k > view.n - view.r) {
      std::unordered_set<BitVec, BitVec::Hash> inside(us.begin(), us.end());
      BitVec y = BitVec::from_u64(view.r, yi);
      bool found = false;
      for (std::uint64_t probe = 0; probe < (std::uint64_t(1) << view.k) && !found; ++probe) {
        BitVec u = BitVec::from_u64(view.k, probe);
        if (inside.contains(u)) continue;
        found = true;
        if (view.inverse(y, u).has_value()) rep.rejects_outside = false;
      }
    }
  }

  if (dual) {
    if (view.k > 12) throw std::invalid_argument("battery: dual enumeration needs k <= 12");
    rep.dual_sound = true;
    std::size_t done = 0;
    for (auto& [yi, us] : fibers) {
      if (done++ >= dual_ys) break;
      BitVec y = BitVec::from_u64(view.r, yi);
      if (!dual_matches_enumeration(*dual, y, view.k, rep.dual_inputs_checked))
        rep.dual_sound = false;
    }
  }
  return rep;
}

OracleView view_of(OracleSuite& suite) {
  const Params& p = suite.params();
  return OracleView{
      p.n, p.r, p.k,
      [&suite](const BitVec& x) { return suite.p_forward(x); },
      [&suite](const BitVec& y, const BitVec& u) { return suite.p_inverse(y, u); }};
}

DualView dual_view_of(OracleSuite& suite) {
  return DualView{
      suite.params().ell_code,
      [&suite](const BitVec& y, const BitVec& v) { return suite.d_oracle(y, v); },
      [&suite](const BitVec& y) { return suite.coset(y).a; }};
}

DualView bloated_dual_view_of(OracleSuite& suite, std::size_t s) {
  const Params& p = suite.params();
  return DualView{
      p.ell_code,
      [&suite, s](const BitVec& y, const BitVec& v) { return suite.d_bloated(y, v, s); },
      [&suite, s, &p](const BitVec& y) {
        const BitMatrix& a = suite.coset(y).a;
        return s == 0 ? a : a.cols_slice(s, p.n - p.r - s);
      }};
}

}  // namespace ossig
