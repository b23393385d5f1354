#pragma once

#include "wf/montecarlo.hpp"

#include <json.hpp>

#include <string>

namespace wf {

/// Locale-independent shortest round-trip formatting for CSV output.
std::string format_double(double value);

nlohmann::json face_to_json(const Face& face);
Face face_from_json(const nlohmann::json& j, int ambient_n);

nlohmann::json point_to_json(const SimplexPoint& p);

nlohmann::json rational_fn_to_json(const RationalFn& fn);
nlohmann::json piece_to_json(const Face& face, const Piece& piece);
nlohmann::json piecewise_to_json(const PiecewiseSolution& solution);
nlohmann::json global_solution_to_json(const GlobalSolution& solution);

/// Final-condition document: {"strata": [{"face": [labels], "poly": "<text>"}]}.
/// Listed faces are prescribed; everything else is left unprescribed.
StratifiedFinalCondition final_condition_from_json(const nlohmann::json& j, int ambient_n);
nlohmann::json final_condition_to_json(const StratifiedFinalCondition& f);

}  // namespace wf
