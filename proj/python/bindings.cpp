// Python surface: scalars cross the boundary as strings in the scalar grammar
// so nothing is ever rounded to a float.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "horadam/error.hpp"
#include "horadam/identities.hpp"
#include "horadam/verify.hpp"

namespace py = pybind11;
using namespace horadam;

namespace {

HoradamParams params_of(const std::string& preset_token) { return parse_preset(preset_token).params(); }

py::object json_to_py(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

py::dict run_check(const std::string& id, const std::string& params, Index m, Index n, Index r, Index k,
                   Index max_index) {
    EvalContext ctx(params_of(params), TermMode::Memoized, max_index);
    const CheckOutcome outcome = check(identity(id), ctx, {m, n, r, k});
    py::dict out;
    if (const auto* pass = std::get_if<Pass>(&outcome)) {
        out["status"] = "pass";
        out["value"] = format_scalar(pass->value);
    } else if (const auto* skip = std::get_if<PreconditionSkip>(&outcome)) {
        out["status"] = "skip";
        out["reason"] = skip->reason;
    } else {
        const auto& bad = std::get<Violated>(outcome);
        out["status"] = "fail";
        out["lhs"] = format_scalar(bad.lhs);
        out["rhs"] = format_scalar(bad.rhs);
    }
    return out;
}

py::list list_identities() {
    py::list out;
    for (IdentityId id : all_identities()) {
        const IdentityDef& def = id.def();
        py::dict entry;
        entry["id"] = def.id;
        entry["anchor"] = def.anchor;
        entry["statement"] = def.statement;
        entry["indices"] = index_set_to_string(def.indices);
        entry["preconditions"] = def.preconditions;
        entry["applies_to"] = def.applies_to;
        entry["quarantined"] = def.quarantined;
        out.append(entry);
    }
    return out;
}

py::object run_verify(const std::optional<std::string>& grid, std::optional<unsigned> jobs) {
    GridSpec spec = grid ? parse_grid_config(*grid) : default_grid();
    if (jobs) spec.jobs = *jobs;
    std::string json;
    {
        py::gil_scoped_release release;
        json = run_grid(spec).to_json();
    }
    return json_to_py(json);
}

py::list run_benchmark(const std::string& id, const std::string& params, const std::vector<Index>& k_values,
                       Index m, Index n, Index r) {
    std::vector<BenchmarkRow> rows;
    {
        py::gil_scoped_release release;
        rows = benchmark(identity(id), params_of(params), k_values, {m, n, r, 0});
    }
    py::list out;
    for (const auto& row : rows) {
        py::dict d;
        d["k"] = row.k;
        d["equal"] = row.equal;
        d["sum_seconds"] = row.sum_seconds;
        d["closed_seconds"] = row.closed_seconds;
        d["speedup"] = row.speedup();
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_horadam, mod) {
    mod.doc() = "Exact Horadam-sequence terms and identity checks";

    // Translators run newest first, so the subclass is registered last.
    auto& base = py::register_exception<Error>(mod, "HoradamError", PyExc_ValueError);
    py::register_exception<PreconditionUnmet>(mod, "PreconditionUnmet", base.ptr());

    mod.def(
        "term",
        [](const std::string& params, Index n, Index max_index) {
            HoradamSequence seq(params_of(params), max_index);
            return format_scalar(seq(n));
        },
        py::arg("params"), py::arg("n"), py::arg("max_index") = kDefaultIndexGuard,
        "w_n for a preset token such as 'pell' or 'custom(1,2,3,-1)', as an exact string.");

    mod.def("check", &run_check, py::arg("id"), py::arg("params"), py::arg("m") = 0, py::arg("n") = 0,
            py::arg("r") = 0, py::arg("k") = 0, py::arg("max_index") = kDefaultIndexGuard);
    mod.def("identities", &list_identities);
    mod.def("verify", &run_verify, py::arg("grid") = py::none(), py::arg("jobs") = py::none(),
            "Sweep a grid (config text, or the default grid) and return the JSON report as a dict.");
    mod.def("benchmark", &run_benchmark, py::arg("id"), py::arg("params"), py::arg("k_values"), py::arg("m") = 0,
            py::arg("n") = 0, py::arg("r") = 0);
}
