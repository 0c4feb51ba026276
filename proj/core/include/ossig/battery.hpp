#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ossig/oracle_suite.hpp"

namespace ossig {

/// Query-level view of a forward/inverse oracle pair, so the same invariant
/// battery can run against a genuine suite and against reduction-simulated
/// ones.
struct OracleView {
  std::size_t n = 0, r = 0, k = 0;
  std::function<PointOutput(const BitVec&)> forward;
  std::function<std::optional<BitVec>(const BitVec&, const BitVec&)> inverse;
};

/// View of a dual-style coordinate oracle together with the matrix its
/// answers are defined against (A(y), or its rightmost columns when bloated).
struct DualView {
  std::size_t ell = 0;
  std::function<std::optional<BitVec>(const BitVec&, const BitVec&)> query;
  std::function<BitMatrix(const BitVec&)> matrix_of;
};

struct BatteryReport {
  bool injective = false;
  bool inverse_law = false;
  bool fibers_are_cosets = false;
  bool fiber_dimension_ok = false;
  bool rejects_outside = false;
  bool dual_sound = true;  // stays true when no dual view is given
  std::size_t points_checked = 0;
  std::size_t fibers_checked = 0;
  std::size_t dual_inputs_checked = 0;

  bool passed() const {
    return injective && inverse_law && fibers_are_cosets && fiber_dimension_ok &&
           rejects_outside && dual_sound;
  }
  std::string summary() const;
};

/// Exhaustive structural battery over all 2^n inputs (n <= 20): injectivity,
/// both inverse laws, reject answers off the fibers, and the brute-force
/// coset test (closure of pairwise differences) on every fiber. When a dual
/// view is given, its accept set and coordinates are compared against row
/// span enumeration for dual_ys inputs y (requires k <= 12 and ell <= 20).
BatteryReport run_invariant_battery(const OracleView& view, const DualView* dual = nullptr,
                                    std::size_t dual_ys = 4);

/// Brute-force coset test: the set must equal base + D where D is closed
/// under pairwise XOR. Exact, quadratic in the set size.
bool is_coset(const std::vector<BitVec>& points);

OracleView view_of(OracleSuite& suite);
DualView dual_view_of(OracleSuite& suite);
DualView bloated_dual_view_of(OracleSuite& suite, std::size_t s);

}  // namespace ossig
