#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "nichols/weyl.hpp"

namespace nichols {

struct AnalyzeOptions {
    EnumerationCaps caps;
    bool recognize = true;
    bool include_timing = false;
};

/// Full pipeline: enumerate -> heights -> Cartan roots -> integral degree ->
/// recognize. Deterministic serialization (fixed key order, canonical root
/// order); timing only on request so reports stay byte-identical.
nlohmann::ordered_json analyze_report(const BraidingMatrix& q, const AnalyzeOptions& opts);

nlohmann::ordered_json roots_report(const GroupoidBundle& b);

}  // namespace nichols
