#pragma once

#include "fairdiv/algorithms.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/search.hpp"

#include <json.hpp>

namespace fairdiv {

nlohmann::json to_json(const PartitionResult& partition);
nlohmann::json to_json(const Allocation& alloc);
nlohmann::json to_json(const Witness& witness);
nlohmann::json to_json(const FairnessReport& report);
nlohmann::json to_json(const MatchingRound& round);
nlohmann::json to_json(const MatchingResult& result);
nlohmann::json to_json(const SearchOutcome& outcome);

} // namespace fairdiv
