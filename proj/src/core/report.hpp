#pragma once

#include <string>

#include "json.hpp"

#include "core/counting.hpp"
#include "core/harness.hpp"
#include "core/random_walk.hpp"
#include "core/refine.hpp"

namespace sekwl {

inline constexpr int kFormatVersion = 1;

std::string hex64(std::uint64_t v);

nlohmann::json to_json(const EncodingSpec& e);
nlohmann::json to_json(const SubstructureCounts& c);
nlohmann::json to_json(const RefinementResult& r, const AlgorithmSpec& spec);
nlohmann::json to_json(const DiscriminationReport& report);
nlohmann::json to_json(const Theorem1Trial& t);
nlohmann::json to_json(const Theorem1Summary& s);
nlohmann::json to_json(const CountingSeparation& s);

}  // namespace sekwl
