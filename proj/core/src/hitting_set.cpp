#include "dutycast/hitting_set.hpp"

#include <algorithm>
#include <map>

#include "dutycast/errors.hpp"

namespace dutycast {

bool is_hitting_set(const SlotSet& hitting, const std::vector<SlotSet>& collection) {
  return std::all_of(collection.begin(), collection.end(),
                     [&](const SlotSet& s) { return intersects(hitting, s); });
}

SlotSet greedy_hitting_set(const std::vector<SlotSet>& input) {
  std::vector<SlotSet> collection;
  collection.reserve(input.size());
  for (const auto& s : input) collection.push_back(make_slot_set(s));
  for (std::size_t i = 0; i < collection.size(); ++i) {
    if (collection[i].empty()) {
      throw InvalidInput("hitting set collection contains an empty set at index " +
                         std::to_string(i));
    }
  }
  std::vector<char> hit(collection.size(), 0);
  std::size_t remaining = collection.size();
  SlotSet chosen;
  while (remaining > 0) {
    // std::map iterates slots in ascending order, so the first maximum is the
    // smallest slot.
    std::map<Slot, std::size_t> coverage;
    for (std::size_t i = 0; i < collection.size(); ++i) {
      if (hit[i]) continue;
      for (Slot s : collection[i]) ++coverage[s];
    }
    Slot best = 0;
    std::size_t best_count = 0;
    for (const auto& [slot, count] : coverage) {
      if (count > best_count) {
        best = slot;
        best_count = count;
      }
    }
    chosen.push_back(best);
    for (std::size_t i = 0; i < collection.size(); ++i) {
      if (!hit[i] && contains(collection[i], best)) {
        hit[i] = 1;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace dutycast
