#ifndef DINV_ENUMERATE_HPP
#define DINV_ENUMERATE_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace dinv {

/// Visits every vector of non-negative counts with sum_k weights[k]*counts[k]
/// == target. Order is lexicographically descending in `counts` (cell 0 takes
/// its largest feasible value first). Weights must be positive.
///
/// The visitor receives a std::span<const unsigned> that is only valid for the
/// duration of the call.
template <class Visitor>
void for_each_weighted_composition(std::span<const unsigned> weights, unsigned target, Visitor&& visit) {
  for (unsigned w : weights) {
    if (w == 0) throw std::invalid_argument("weighted composition: weights must be positive");
  }
  const std::size_t cells = weights.size();
  std::vector<unsigned> counts(cells, 0);
  if (cells == 0) {
    if (target == 0) visit(std::span<const unsigned>(counts));
    return;
  }

  // Bounded counters with the remaining weight carried down the stack.
  const auto recurse = [&](auto&& self, std::size_t cell, unsigned remaining) -> void {
    const unsigned w = weights[cell];
    if (cell + 1 == cells) {
      if (remaining % w != 0) return;
      counts[cell] = remaining / w;
      visit(std::span<const unsigned>(counts));
      counts[cell] = 0;
      return;
    }
    for (unsigned c = remaining / w + 1; c-- > 0;) {
      counts[cell] = c;
      self(self, cell + 1, remaining - c * w);
    }
    counts[cell] = 0;
  };
  recurse(recurse, 0, target);
}

}  // namespace dinv

#endif  // DINV_ENUMERATE_HPP
