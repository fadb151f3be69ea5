#pragma once

#include <vector>

#include "dutycast/network.hpp"

namespace dutycast {

// True if hitting intersects every set in the collection.
bool is_hitting_set(const SlotSet& hitting, const std::vector<SlotSet>& collection);

/// Greedy hitting set: repeatedly take the slot contained in the most
/// not-yet-hit sets, smallest slot on ties. Result is sorted.
/// Throws InvalidInput if any set is empty.
SlotSet greedy_hitting_set(const std::vector<SlotSet>& collection);

}  // namespace dutycast
