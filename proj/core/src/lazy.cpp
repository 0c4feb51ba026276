#include "ossig/lazy.hpp"

#include <stdexcept>

namespace ossig {

BitVec LazyPermutation::forward(const BitVec& x) {
  if (x.size() != bits_) throw std::invalid_argument("LazyPermutation: input length mismatch");
  auto it = fwd_.find(x);
  if (it != fwd_.end()) return it->second;
  for (;;) {
    BitVec y = rng_.next_bitvec(bits_);
    if (inv_.contains(y)) continue;
    fwd_.emplace(x, y);
    inv_.emplace(y, x);
    return y;
  }
}

BitVec LazyPermutation::inverse(const BitVec& y) {
  if (y.size() != bits_) throw std::invalid_argument("LazyPermutation: input length mismatch");
  auto it = inv_.find(y);
  if (it != inv_.end()) return it->second;
  for (;;) {
    BitVec x = rng_.next_bitvec(bits_);
    if (fwd_.contains(x)) continue;
    fwd_.emplace(x, y);
    inv_.emplace(y, x);
    return x;
  }
}

}  // namespace ossig
