#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "nodalpart/cli.hpp"
#include "nodalpart/errors.hpp"
#include "nodalpart/explore.hpp"
#include "nodalpart/json_io.hpp"
#include "nodalpart/nodal.hpp"

namespace py = pybind11;
using namespace nodalpart;

namespace {

// Documents cross the boundary as JSON text; the Python side parses them.
std::string dump(const json& j) { return j.dump(); }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

SurfaceKind nodal_surface(const std::string& name) {
    if (name == "moebius") return SurfaceKind::moebius;
    if (name == "rectangle") return SurfaceKind::rectangle;
    throw InvalidInput("nodal surfaces are moebius and rectangle, got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_nodalpart, m) {
    m.doc() = "Nodal and random partitions of grid surfaces";

    static py::exception<Error> base(m, "NodalpartError");
    static py::exception<InvalidInput> invalid(m, "InvalidInput", base.ptr());
    static py::exception<InvariantViolation> violation(m, "InvariantViolation", base.ptr());
    static py::exception<ResolutionError> resolution(m, "ResolutionError", base.ptr());
    static py::exception<InstabilityError> instability(m, "InstabilityError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvalidInput& e) {
            py::set_error(invalid, e.what());
        } catch (const InvariantViolation& e) {
            py::set_error(violation, e.what());
        } catch (const ResolutionError& e) {
            py::set_error(resolution, e.what());
        } catch (const InstabilityError& e) {
            py::set_error(instability, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"nodalpart"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line tool in-process; returns (exit_code, stdout, stderr).");

    m.def(
        "partition_report", [](const std::string& doc) { return dump(partition_report(partition_from_json(parse(doc)))); },
        py::arg("partition"));

    m.def(
        "verify",
        [](const std::string& doc) {
            const auto p = partition_from_json(parse(doc));
            auto j = partition_report(p);
            j["verdict"] = to_json(verify_euler(p));
            return dump(j);
        },
        py::arg("partition"));

    m.def(
        "random_partition",
        [](const std::string& surface, std::uint64_t seed, int k) {
            const auto c = build_complex(surface_from_json(parse(surface)));
            return dump(to_json(random_partition(c, {seed, k})));
        },
        py::arg("surface"), py::arg("seed"), py::arg("k"));

    m.def(
        "stable_invariants",
        [](const std::string& function, const std::string& surface, int resolution, int max_refine) {
            NodalConfig cfg;
            cfg.resolution = resolution;
            cfg.max_refine = max_refine;
            const auto f = eigenfunction_from_json(parse(function));
            StableReport st;
            {
                py::gil_scoped_release release;
                st = stable_invariants(f, nodal_surface(surface), cfg);
            }
            auto j = to_json(st.report);
            j["resolution"] = st.resolution;
            j["resolutions"] = st.resolutions;
            return dump(j);
        },
        py::arg("function"), py::arg("surface") = "moebius", py::arg("resolution") = 64, py::arg("max_refine") = 5);
}
