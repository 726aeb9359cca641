// Copyright 2026 The mqsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mqsym/error.hpp"
#include "mqsym/factorization.hpp"
#include "mqsym/generators.hpp"
#include "mqsym/io.hpp"
#include "mqsym/mixed.hpp"
#include "mqsym/permutation.hpp"
#include "mqsym/report.hpp"
#include "mqsym/verifier.hpp"

namespace py = pybind11;
using namespace mqsym;

namespace {

py::object to_python(const Json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

SubsetMask mask_of(const std::vector<int> &labels) { return SubsetMask::from_labels(labels); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exchange symmetry and product structure of multipartite pure states";
    m.attr("__version__") = tool_version();

    static py::exception<Error> error(m, "Error");
    static py::exception<InvalidArgument> invalid(m, "InvalidArgument", error.ptr());
    static py::exception<ZeroStateError> zero(m, "ZeroStateError", invalid.ptr());
    static py::exception<DimensionOverflow> overflow(m, "DimensionOverflow", error.ptr());
    static py::exception<ParseError> parse(m, "ParseError", error.ptr());
    static py::exception<ToleranceError> tolerance(m, "ToleranceError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ZeroStateError &e) {
            py::set_error(zero, e.what());
        } catch (const ParseError &e) {
            py::set_error(parse, e.what());
        } catch (const InvalidArgument &e) {
            py::set_error(invalid, e.what());
        } catch (const DimensionOverflow &e) {
            py::set_error(overflow, e.what());
        } catch (const ToleranceError &e) {
            py::set_error(tolerance, e.what());
        } catch (const Error &e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<StateVector>(m, "State")
        .def(py::init<int, int, Eigen::VectorXcd>(), py::arg("num_sites"), py::arg("local_dim"),
             py::arg("amplitudes"))
        .def_static(
            "basis", [](int local_dim, const std::vector<int> &digits) { return StateVector::basis(local_dim, digits); },
            py::arg("local_dim"), py::arg("digits"))
        .def_property_readonly("num_sites", &StateVector::num_sites)
        .def_property_readonly("local_dim", &StateVector::local_dim)
        .def_property_readonly("amplitudes", [](const StateVector &s) { return Eigen::VectorXcd(s.amplitudes()); })
        .def("norm", &StateVector::norm)
        .def("__len__", &StateVector::dimension)
        .def("__repr__", [](const StateVector &s) {
            return "<State N=" + std::to_string(s.num_sites()) + " n=" + std::to_string(s.local_dim()) + ">";
        });

    m.def("normalize", [](const StateVector &s) { return normalize(s); });
    m.def("ghz", &ghz, py::arg("num_sites"), py::arg("local_dim") = 2);
    m.def("w_state", &w_state, py::arg("num_sites"));
    m.def("dicke", &dicke, py::arg("num_sites"), py::arg("excitations"));
    m.def("slater", &slater, py::arg("num_sites"), py::arg("local_dim"), py::arg("levels"));
    m.def("random_state", &random_state, py::arg("num_sites"), py::arg("local_dim"), py::arg("seed"));
    m.def("random_product", &random_product, py::arg("num_sites"), py::arg("local_dim"), py::arg("seed"));
    m.def("random_symmetric", &random_symmetric, py::arg("num_sites"), py::arg("local_dim"), py::arg("seed"));
    m.def("random_antisymmetric", &random_antisymmetric, py::arg("num_sites"), py::arg("local_dim"),
          py::arg("seed"));
    m.def("random_local_unitary", &random_local_unitary, py::arg("local_dim"), py::arg("seed"));
    m.def("equipollent_product", &equipollent_product, py::arg("num_sites"), py::arg("unitary"));

    m.def("symmetrize", &symmetrize);
    m.def("antisymmetrize", &antisymmetrize);
    m.def("project_perp", &project_perp);
    m.def(
        "apply_permutation",
        [](const std::vector<int> &images, const StateVector &s) { return apply_permutation(Permutation(images), s); },
        py::arg("images"), py::arg("state"));
    m.def(
        "apply_collective_unitary",
        [](const Eigen::MatrixXcd &u, const StateVector &s) { return apply_collective_unitary(u, s); },
        py::arg("unitary"), py::arg("state"));

    m.def(
        "partial_trace",
        [](const StateVector &s, const std::vector<int> &keep) {
            return Eigen::MatrixXcd(partial_trace(s, mask_of(keep)).entries());
        },
        py::arg("state"), py::arg("keep"));
    m.def(
        "is_factoring_subset",
        [](const StateVector &s, const std::vector<int> &labels, double tol) {
            return is_factoring_subset(s, mask_of(labels), tol);
        },
        py::arg("state"), py::arg("labels"), py::arg("tol") = kPureTol);
    m.def(
        "minimal_factoring_block",
        [](const StateVector &s, int label, double tol) { return minimal_factoring_block(s, label, tol).labels(); },
        py::arg("state"), py::arg("label"), py::arg("tol") = kPureTol);

    m.def(
        "classify", [](const StateVector &s, double tol) { return to_python(to_json(classify_exchange(s, tol))); },
        py::arg("state"), py::arg("tol") = kNormTol);
    m.def(
        "factorize", [](const StateVector &s, double tol) { return to_python(to_json(finest_factorization(s, tol))); },
        py::arg("state"), py::arg("tol") = kPureTol);
    m.def(
        "report",
        [](const StateVector &s, const std::string &digest, double tol) {
            return to_python(build_report(s, digest, tol));
        },
        py::arg("state"), py::arg("digest") = "", py::arg("tol") = kPureTol);
    m.def(
        "equipollent",
        [](const Eigen::VectorXcd &c, const Eigen::VectorXcd &d, double tol) {
            return to_python(to_json(equipollent(c, d, tol)));
        },
        py::arg("c"), py::arg("d"), py::arg("tol") = kEquipollenceTol);

    m.def("suite_ids", &suite_ids);
    m.def(
        "verify",
        [](const std::string &suite, int trials, int num_sites, int local_dim, Seed seed, double tol) {
            CheckOptions o;
            o.trials = trials;
            o.num_sites = num_sites;
            o.local_dim = local_dim;
            o.seed = seed;
            o.tol = tol;
            CheckVerdict v;
            {
                py::gil_scoped_release release;
                v = run_suite(suite, o);
            }
            return to_python(to_json(v));
        },
        py::arg("suite"), py::arg("trials") = 100, py::arg("num_sites") = 4, py::arg("local_dim") = 2,
        py::arg("seed") = 0, py::arg("tol") = kPureTol);

    m.def(
        "dumps_state", [](const StateVector &s) { return state_to_json(s).dump(); }, py::arg("state"));
    m.def(
        "loads_state", [](const std::string &text) { return state_from_json(parse_json(text)); }, py::arg("text"));
}
