#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

#include "enumeration.hpp"
#include "rootsys.hpp"

namespace alcoved {

/// Runs every identity check for one root system and returns
///   {"type", "rank", "seed", "checks": [{"name", "status", "detail"}], "all_passed"}
/// with status "pass", "fail" or "skipped (...)". Budget errors propagate.
nlohmann::json selfcheck(const RootSystem& rs, std::uint64_t seed, const EnumerationOptions& options = {});

}  // namespace alcoved
