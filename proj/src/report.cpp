#include "ergopt/report.hpp"

#include <fstream>

namespace ergopt {

Json to_json(const Word& w) {
    Json arr = Json::array();
    for (Symbol s : w) arr.push_back(s);
    return arr;
}

Json to_json(const AlphabetHull& hull) {
    Json j;
    j["cut"] = hull.cut;
    j["base"] = to_json(hull.base);
    Json table = Json::array();
    for (const auto& [pair, word] : hull.table) {
        table.push_back(Json{{"from", pair.first}, {"to", pair.second}, {"word", to_json(word)}});
    }
    j["table"] = table;
    j["extra"] = to_json(hull.extra);
    j["symbols"] = to_json(hull.symbols);
    j["max_connector_len"] = hull.max_connector_len;
    return j;
}

Json to_json(const PeriodicOrbit& orbit) {
    return to_json(orbit.word());
}

Json to_json(const PeriodicMeasure& measure) {
    Json j;
    j["orbit"] = to_json(measure.orbit);
    Json weights = Json::array();
    for (const auto& w : measure.weights()) weights.push_back(w.str());
    j["weights"] = weights;
    return j;
}

Json real_reduction_json(const RealReduction& red) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "real-reduction";
    j["mode"] = "rational";
    j["epsilon"] = red.epsilon.str();
    j["beta_lower"] = red.beta_lb.str();
    j["cut1"] = red.cut1.str();
    j["min_on_box"] = red.min_on_box.str();
    j["variation"] = red.variation.str();
    j["cut2_infimum"] = red.cut2_infimum.str();
    j["margin"] = red.margin.str();
    j["cut2"] = red.cut2.str();
    j["notes"] = red.notes;
    return j;
}

Json grid_result_json(const GridSolveResult& grid) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "grid-solve";
    j["mode"] = "rational";
    j["beta_hat"] = grid.beta_hat.str();
    j["orbit_grid_indices"] = to_json(grid.orbit.word());
    Json points = Json::array();
    for (const auto& g : grid.grid) points.push_back(g.str());
    j["grid"] = points;
    return j;
}

std::string dump_report(const Json& j) {
    return j.dump(2) + "\n";
}

void write_report(const Json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot open report path '" + path + "'");
    out << dump_report(j);
}

} // namespace ergopt
