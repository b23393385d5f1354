#include "wf/serialization.hpp"

#include <charconv>
#include <stdexcept>

namespace wf {

std::string format_double(double value) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

nlohmann::json face_to_json(const Face& face) { return nlohmann::json(face.indices()); }

Face face_from_json(const nlohmann::json& j, int ambient_n) {
    if (!j.is_array()) throw std::invalid_argument("face must be a JSON array of labels");
    std::vector<int> labels;
    for (const auto& v : j) labels.push_back(v.get<int>());
    return Face(std::move(labels), ambient_n);
}

nlohmann::json point_to_json(const SimplexPoint& p) {
    nlohmann::json j;
    j["face"] = face_to_json(p.face());
    j["coords"] = p.coords();
    return j;
}

nlohmann::json rational_fn_to_json(const RationalFn& fn) {
    nlohmann::json j;
    j["numer"] = fn.numerator().to_string();
    nlohmann::json denom = nlohmann::json::array();
    for (const auto& df : fn.denominator())
        denom.push_back({{"factor", df.factor.to_string()}, {"power", df.power}});
    j["denom"] = denom;
    return j;
}

nlohmann::json piece_to_json(const Face& face, const Piece& piece) {
    nlohmann::json modes = nlohmann::json::array();
    for (const auto& mode : piece)
        modes.push_back({{"kappa", to_string(mode.kappa)},
                         {"coeff", to_string(mode.coeff)},
                         {"shape", rational_fn_to_json(mode.shape)}});
    return {{"face", face_to_json(face)}, {"modes", modes}};
}

nlohmann::json piecewise_to_json(const PiecewiseSolution& solution) {
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& [face, piece] : solution.pieces()) pieces.push_back(piece_to_json(face, piece));
    return pieces;
}

nlohmann::json global_solution_to_json(const GlobalSolution& solution) {
    nlohmann::json layers = nlohmann::json::array();
    for (std::size_t d = 0; d < solution.layers.size(); ++d)
        layers.push_back({{"dimension", d}, {"pieces", piecewise_to_json(solution.layers[d])}});
    return {{"alleles", solution.ambient_n + 1},
            {"layers", layers},
            {"total", piecewise_to_json(solution.total)}};
}

StratifiedFinalCondition final_condition_from_json(const nlohmann::json& j, int ambient_n) {
    StratifiedFinalCondition f(ambient_n);
    if (!j.contains("strata") || !j["strata"].is_array())
        throw std::invalid_argument("final condition document needs a 'strata' array");
    for (const auto& entry : j["strata"]) {
        Face face = face_from_json(entry.at("face"), ambient_n);
        std::string text = entry.at("poly").get<std::string>();
        f.set(face, MultiPoly::parse(Chart(face), text));
    }
    return f;
}

nlohmann::json final_condition_to_json(const StratifiedFinalCondition& f) {
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& [face, poly] : f.components())
        strata.push_back({{"face", face_to_json(face)}, {"poly", poly.to_string()}});
    return {{"strata", strata}};
}

}  // namespace wf
