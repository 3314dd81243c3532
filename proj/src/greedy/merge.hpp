#pragma once

#include "core/system.hpp"

#include <cstdint>
#include <vector>

namespace kxs {

// Post-processing merge shared by the bounded and dynamic engines: run an
// unweighted greedy over the per-class outputs from the highest class down,
// inside each class in acceptance order. An element that already made it
// into T via a higher class is skipped without an oracle call (membership
// is set-semantic; re-offering it is a guaranteed no-op).
struct MergeResult {
  ElementSet T;
  // trace[j] is the snapshot of T right after class lo + j was processed,
  // so trace.back() is the state after the highest class and trace.front()
  // equals the final T. The snapshot "above the top class" is empty.
  std::vector<ElementSet> trace;
};

// outputs[j] holds C_{lo+j} for class indices lo .. lo + outputs.size() - 1.
MergeResult merge_descending(const std::vector<ElementSet>& outputs,
                             const IndependenceSystem& sys,
                             std::uint64_t* oracle_calls = nullptr);

}  // namespace kxs
