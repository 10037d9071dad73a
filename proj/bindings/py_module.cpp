#include "stratkit/pipeline.hpp"
#include "stratkit/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace stratkit;

namespace {

py::object json_to_py(const std::string& dumped) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(dumped);
}

py::dict run_to_dict(const RunResult& res) {
    py::dict d;
    d["exit_code"] = res.exit_code;
    d["report"] = json_to_py(res.doc.dump());
    return d;
}

JobSpec make_job(const std::string& algebra, const std::vector<std::string>& modules,
                 const std::optional<std::vector<int>>& order, const std::vector<std::string>& checks,
                 std::uint64_t seed, long long budget, int workers) {
    JobSpec job;
    job.algebra_src = algebra;
    job.module_srcs = modules;
    if (order) {
        job.order = order;
        job.auto_order = false;
    }
    for (const auto& c : checks) job.checks.insert(c == "pairing-suite" ? "pairing" : c);
    job.seed = seed;
    job.budget = budget;
    job.workers = workers;
    return job;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact toolkit for stratifying systems induced by tau-rigid modules";
    m.attr("__version__") = kToolVersion;

    m.def("algebra_check", [](const std::string& src) { return run_to_dict(cmd_algebra_check(src)); },
          py::arg("algebra"));

    m.def(
        "module_check",
        [](const std::string& algebra, const std::vector<std::string>& modules, std::uint64_t seed) {
            return run_to_dict(cmd_module_check(algebra, modules, seed));
        },
        py::arg("algebra"), py::arg("modules"), py::arg("seed") = 0);

    m.def(
        "tau",
        [](const std::string& algebra, const std::vector<std::string>& modules, std::uint64_t seed,
           long long budget) {
            return run_to_dict(cmd_tau(make_job(algebra, modules, std::nullopt, {}, seed, budget, 1)));
        },
        py::arg("algebra"), py::arg("modules"), py::arg("seed") = 0, py::arg("budget") = 10000);

    m.def(
        "stratify",
        [](const std::string& algebra, const std::vector<std::string>& modules,
           const std::optional<std::vector<int>>& order, const std::vector<std::string>& checks,
           std::uint64_t seed, long long budget, int workers, bool verify_all) {
            return run_to_dict(
                cmd_stratify(make_job(algebra, modules, order, checks, seed, budget, workers), verify_all));
        },
        py::arg("algebra"), py::arg("modules"), py::arg("order") = std::nullopt,
        py::arg("checks") = std::vector<std::string>{}, py::arg("seed") = 0, py::arg("budget") = 10000,
        py::arg("workers") = 1, py::arg("verify_all") = false);

    m.def(
        "selftest",
        [](std::uint64_t seed, int workers, const std::string& inject_fault) {
            SelftestSpec spec;
            spec.seed = seed;
            spec.workers = workers;
            spec.inject_fault = inject_fault;
            return run_to_dict(cmd_selftest(spec));
        },
        py::arg("seed") = 0, py::arg("workers") = 1, py::arg("inject_fault") = std::string());

    m.def(
        "selftest_text",
        [](std::uint64_t seed, int workers) {
            SelftestSpec spec;
            spec.seed = seed;
            spec.workers = workers;
            return render_text(cmd_selftest(spec).doc);
        },
        py::arg("seed") = 0, py::arg("workers") = 1);

    m.def(
        "smith",
        [](const std::vector<std::vector<long long>>& rows) {
            SnfResult s = smith(MatZ::from_rows(rows));
            py::dict d;
            py::list inv;
            for (const auto& x : s.invariant_factors) inv.append(py::int_(py::str(x.str())));
            d["invariant_factors"] = inv;
            auto tolist = [](const MatZ& m) {
                py::list out;
                for (int i = 0; i < m.rows(); ++i) {
                    py::list row;
                    for (int j = 0; j < m.cols(); ++j) row.append(py::int_(py::str(m.at(i, j).str())));
                    out.append(row);
                }
                return out;
            };
            d["U"] = tolist(s.U);
            d["D"] = tolist(s.D);
            d["V"] = tolist(s.V);
            return d;
        },
        py::arg("matrix"));
}
