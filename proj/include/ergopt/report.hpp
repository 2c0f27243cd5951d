#pragma once

#include "ergopt/real_shift.hpp"
#include "ergopt/solver.hpp"
#include "ergopt/surgery.hpp"

#include <json.hpp>

#include <string>

namespace ergopt {

// Reports are ordered JSON with "schema": 1. Rational-mode numbers are
// exact "p/q" strings; float mode emits plain numbers. Serialization is
// insertion-ordered and therefore byte-stable for identical inputs.
using Json = nlohmann::ordered_json;

inline Json scalar_json(const Rational& v) { return v.str(); }
inline Json scalar_json(double v) { return v; }

Json to_json(const Word& w);
Json to_json(const AlphabetHull& hull);
Json to_json(const PeriodicOrbit& orbit);
Json to_json(const PeriodicMeasure& measure);

template <class S>
Json reduction_json(const Reduction<S>& red) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "reduction";
    j["mode"] = mode_name(num<S>::mode);
    j["epsilon"] = scalar_json(red.epsilon);
    j["beta_lower"] = scalar_json(red.beta_lb);
    j["beta_abs_bound"] = scalar_json(red.beta_abs_ub);
    j["cut1"] = red.cut1;
    j["hull1"] = to_json(red.hull1);
    j["min_over_hull1"] = scalar_json(red.min_f_hull1);
    j["c_word"] = scalar_json(red.c_word);
    j["c_direct"] = scalar_json(red.c_direct);
    j["c_min"] = scalar_json(red.c_min);
    j["cut2"] = red.cut2;
    j["hull2"] = to_json(red.hull2);
    j["tail_gap"] = scalar_json(red.tail_gap);
    j["certified"] = red.certified;
    j["refined"] = red.refined;
    j["notes"] = red.notes;
    return j;
}

template <class S>
Json solution_json(const Solution<S>& sol) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "solution";
    j["mode"] = mode_name(sol.mode);
    j["beta"] = scalar_json(sol.beta);
    j["orbit"] = to_json(sol.orbit);
    j["measure"] = to_json(sol.measure);
    Json checks = Json::array();
    for (const auto& c : sol.certificate) {
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
    }
    j["certificate"] = checks;
    j["reduction"] = reduction_json(sol.reduction);
    return j;
}

Json real_reduction_json(const RealReduction& red);
Json grid_result_json(const GridSolveResult& grid);

std::string dump_report(const Json& j);
void write_report(const Json& j, const std::string& path);

} // namespace ergopt
