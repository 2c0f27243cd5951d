// Python bindings for the main operations. Structured values cross the
// boundary as plain dicts/lists mirroring the JSON report schema; exact
// rationals travel as "p/q" strings.

#include "ergopt/oracle.hpp"
#include "ergopt/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ergopt;

namespace {

Json to_json_value(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        Json j = Json::object();
        for (auto item : obj.cast<py::dict>()) {
            j[py::str(item.first).cast<std::string>()] = to_json_value(item.second);
        }
        return j;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json j = Json::array();
        for (auto item : obj.cast<py::sequence>()) j.push_back(to_json_value(item));
        return j;
    }
    throw py::type_error("unsupported value in spec");
}

py::object to_py_value(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null:
        return py::none();
    case Json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
        return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_float:
        return py::float_(j.get<double>());
    case Json::value_t::string:
        return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(to_py_value(item));
        return out;
    }
    case Json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py_value(value);
        return out;
    }
    default:
        throw py::type_error("unsupported report value");
    }
}

Rational rational_arg(const py::handle& v) {
    return rational_field(to_json_value(v), "argument");
}

ReducePolicy policy_arg(const py::object& thresholds, bool refine) {
    ReducePolicy policy;
    policy.refine = refine;
    if (!thresholds.is_none()) {
        py::dict t = thresholds.cast<py::dict>();
        if (t.contains("cut1")) policy.user_cut1 = t["cut1"].cast<Symbol>();
        if (t.contains("cut2")) policy.user_cut2 = t["cut2"].cast<Symbol>();
    }
    return policy;
}

py::object py_solve(const py::dict& shift, const py::dict& potential, const py::object& epsilon,
                    const std::string& mode, const py::object& thresholds, bool refine) {
    TransitionSystem ts = make_shift(to_json_value(shift));
    Potential p = make_potential(to_json_value(potential));
    ReducePolicy policy = policy_arg(thresholds, refine);
    if (mode == "float") {
        return to_py_value(solution_json(solve<double>(p, ts, rational_arg(epsilon), policy)));
    }
    return to_py_value(solution_json(solve<Rational>(p, ts, rational_arg(epsilon), policy)));
}

py::object py_reduce(const py::dict& shift, const py::dict& potential, const py::object& epsilon,
                     const std::string& mode, const py::object& thresholds, bool refine) {
    TransitionSystem ts = make_shift(to_json_value(shift));
    Potential p = make_potential(to_json_value(potential));
    ReducePolicy policy = policy_arg(thresholds, refine);
    if (mode == "float") {
        return to_py_value(reduction_json(reduce<double>(p, ts, rational_arg(epsilon), policy)));
    }
    return to_py_value(reduction_json(reduce<Rational>(p, ts, rational_arg(epsilon), policy)));
}

py::object py_mmc(int vertices, const py::list& edges, const std::string& mode) {
    WeightedGraph g;
    g.memory = 1;
    for (int v = 0; v < vertices; ++v) g.vertex_words.push_back({v});
    g.out.assign(static_cast<std::size_t>(vertices), {});
    for (auto item : edges) {
        py::tuple e = item.cast<py::tuple>();
        int from = e[0].cast<int>();
        int to = e[1].cast<int>();
        if (from < 0 || from >= vertices || to < 0 || to >= vertices) {
            throw py::value_error("edge endpoint out of range");
        }
        g.out[static_cast<std::size_t>(from)].push_back({to, rational_arg(e[2])});
    }
    if (mode == "float") {
        auto r = max_mean_cycle<double>(g);
        if (!r) return py::none();
        return py::make_tuple(py::float_(r->value), to_py_value(to_json(Word(r->cycle.begin(),
                                                                             r->cycle.end()))));
    }
    auto r = max_mean_cycle<Rational>(g);
    if (!r) return py::none();
    return py::make_tuple(py::str(r->value.str()),
                          to_py_value(to_json(Word(r->cycle.begin(), r->cycle.end()))));
}

py::object py_splice(const py::dict& shift, const py::dict& potential, const py::object& epsilon,
                     const std::vector<Symbol>& orbit) {
    TransitionSystem ts = make_shift(to_json_value(shift));
    Potential p = make_potential(to_json_value(potential));
    Solution<Rational> sol = solve<Rational>(p, ts, rational_arg(epsilon));
    PeriodicOrbit x(orbit);
    SpliceResult s = splice(p, ts, x, sol.reduction);
    Json j;
    j["orbit"] = to_json(x);
    j["spliced"] = to_json(s.orbit);
    j["gain"] = s.gain.str();
    j["orbit_average"] = orbit_average<Rational>(p, x).str();
    j["spliced_average"] = orbit_average<Rational>(p, s.orbit).str();
    j["connector"] = to_json(s.connector);
    return to_py_value(j);
}

py::object py_reduce_real(const py::dict& potential, const py::object& epsilon,
                          const py::object& beta_lb) {
    RealPotential p = make_real_potential(to_json_value(potential));
    return to_py_value(
        real_reduction_json(reduce_real(p, rational_arg(epsilon), rational_arg(beta_lb))));
}

py::object py_grid_solve(const py::dict& potential, const py::object& top, int n) {
    RealPotential p = make_real_potential(to_json_value(potential));
    return to_py_value(grid_result_json(grid_solve(p, rational_arg(top), n)));
}

py::object py_verify(const py::dict& shift, const py::dict& potential, const py::object& epsilon,
                     int cases, std::uint64_t seed) {
    TransitionSystem ts = make_shift(to_json_value(shift));
    Potential p = make_potential(to_json_value(potential));
    Budgets budgets;
    budgets.cases = cases;
    VerifyOutcome out = run_verify(p, ts, rational_arg(epsilon), budgets, seed);
    return to_py_value(out.report);
}

} // namespace

PYBIND11_MODULE(ergopt, m) {
    m.doc() = "finite-alphabet reduction and maximizing measures for countable Markov shifts";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<certification_error>(m, "CertificationError", PyExc_RuntimeError);
    py::register_exception<construction_error>(m, "ConstructionError", PyExc_RuntimeError);
    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<not_applicable>(m, "NotApplicable", PyExc_ValueError);

    m.def("solve", &py_solve, py::arg("shift"), py::arg("potential"), py::arg("epsilon"),
          py::arg("mode") = "rational", py::arg("thresholds") = py::none(),
          py::arg("refine") = false,
          "Reduce to a finite alphabet and return the maximizing periodic measure report.");
    m.def("reduce", &py_reduce, py::arg("shift"), py::arg("potential"), py::arg("epsilon"),
          py::arg("mode") = "rational", py::arg("thresholds") = py::none(),
          py::arg("refine") = false, "Run only the alphabet reduction and return its report.");
    m.def("max_mean_cycle", &py_mmc, py::arg("vertices"), py::arg("edges"),
          py::arg("mode") = "rational",
          "Maximum cycle mean of an explicit digraph; None when acyclic.");
    m.def("splice", &py_splice, py::arg("shift"), py::arg("potential"), py::arg("epsilon"),
          py::arg("orbit"), "Splice one periodic orbit into the reduced alphabet.");
    m.def("reduce_real", &py_reduce_real, py::arg("potential"), py::arg("epsilon"),
          py::arg("beta_lb"), "Cutoff thresholds for the full shift over non-negative reals.");
    m.def("grid_solve", &py_grid_solve, py::arg("potential"), py::arg("top"), py::arg("n"),
          "Grid-discretized lower approximation on [0, top].");
    m.def("verify", &py_verify, py::arg("shift"), py::arg("potential"), py::arg("epsilon"),
          py::arg("cases") = 100, py::arg("seed") = 1,
          "Run the surgery property campaign and return its report.");
}
