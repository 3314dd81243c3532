#include "greedy/merge.hpp"

#include "greedy/greedy.hpp"

namespace kxs {

MergeResult merge_descending(const std::vector<ElementSet>& outputs,
                             const IndependenceSystem& sys,
                             std::uint64_t* oracle_calls) {
  MergeResult result;
  result.trace.resize(outputs.size());
  GreedyState greedy(sys, oracle_calls);
  for (std::size_t j = outputs.size(); j-- > 0;) {
    for (const Element* e : outputs[j]) {
      if (set_contains(greedy.solution(), e)) continue;
      greedy.feed(*e);
    }
    result.trace[j] = greedy.solution();
  }
  result.T = greedy.solution();
  return result;
}

}  // namespace kxs
