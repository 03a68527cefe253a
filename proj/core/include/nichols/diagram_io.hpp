#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "nichols/braiding.hpp"

namespace nichols {

struct diagram_io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Diagram file: {"zeta_order": M, "q_order": N|"inf" (optional), "theta": t,
/// "matrix": [[...]]} or {"diagonal": [...], "edges": [{"i","j","label"}]}.
/// The diagram form fills q_ij = qtilde_ij on the upper triangle, q_ji = 1.
BraidingMatrix parse_diagram_json(const nlohmann::json& j);
BraidingMatrix parse_diagram_file(const std::string& path);
BraidingMatrix parse_diagram_text(const std::string& text);

nlohmann::ordered_json diagram_to_json(const BraidingMatrix& q);

}  // namespace nichols
