#include "ringsum/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ringsum;

namespace {

CommandOptions options(unsigned zeta, const std::vector<std::string>& params, long lambdaCap,
                       long maxOrder, long verifyLo, long verifyHi,
                       const std::vector<std::string>& extra) {
    CommandOptions opt;
    opt.zeta = zeta;
    opt.params = params;
    opt.lambdaCap = lambdaCap;
    opt.maxOrder = maxOrder;
    opt.verifyLo = verifyLo;
    opt.verifyHi = verifyHi;
    opt.extra = extra;
    return opt;
}

// results travel as JSON text; the python wrapper turns them into dicts
std::string finish(const CommandResult& res) {
    Json doc = res.doc;
    doc["exit_code"] = res.exitCode;
    return doc.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "symbolic summation in difference rings with roots of unity";

    py::register_exception<CapExceeded>(m, "CapExceeded");
    py::register_exception<ringsum::SyntaxError>(m, "ParseError");

    m.def(
        "telescope",
        [](const std::string& expr, unsigned zeta, const std::vector<std::string>& params,
           const std::vector<std::string>& extra, long lambdaCap, long lo, long hi) {
            return finish(cmd_telescope(options(zeta, params, lambdaCap, 4, lo, hi, extra), expr));
        },
        py::arg("expr"), py::arg("zeta") = 4, py::arg("params") = std::vector<std::string>{},
        py::arg("extra") = std::vector<std::string>{}, py::arg("lambda_cap") = 4096,
        py::arg("verify_lo") = 1, py::arg("verify_hi") = 40);

    m.def(
        "rewrite_product",
        [](const std::string& expr, unsigned zeta, const std::vector<std::string>& params,
           const std::vector<std::string>& extra, long lambdaCap, long lo, long hi) {
            return finish(
                cmd_rewrite_product(options(zeta, params, lambdaCap, 4, lo, hi, extra), expr));
        },
        py::arg("expr"), py::arg("zeta") = 4, py::arg("params") = std::vector<std::string>{},
        py::arg("extra") = std::vector<std::string>{}, py::arg("lambda_cap") = 4096,
        py::arg("verify_lo") = 1, py::arg("verify_hi") = 40);

    m.def(
        "zeilberger",
        [](const std::string& expr, const std::vector<std::string>& params, unsigned zeta,
           long maxOrder, long lambdaCap) {
            return finish(
                cmd_zeilberger(options(zeta, params, lambdaCap, maxOrder, 1, 40, {}), expr));
        },
        py::arg("expr"), py::arg("params"), py::arg("zeta") = 1, py::arg("max_order") = 4,
        py::arg("lambda_cap") = 4096);

    m.def(
        "order",
        [](const std::string& expr, unsigned zeta, const std::vector<std::string>& extra) {
            return finish(cmd_order(options(zeta, {}, 4096, 4, 1, 40, extra), expr));
        },
        py::arg("expr"), py::arg("zeta") = 4, py::arg("extra") = std::vector<std::string>{});

    m.def(
        "verify",
        [](const std::string& lhs, const std::string& rhs, const std::string& var, unsigned zeta,
           long lo, long hi) {
            return finish(cmd_verify(options(zeta, {}, 4096, 4, lo, hi, {}), lhs, rhs, var));
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("var") = "", py::arg("zeta") = 4,
        py::arg("lo") = 1, py::arg("hi") = 40);

    m.def(
        "describe_tower",
        [](const std::string& expr, unsigned zeta, const std::vector<std::string>& params,
           const std::vector<std::string>& extra) {
            return finish(cmd_describe(options(zeta, params, 4096, 4, 1, 40, extra), expr));
        },
        py::arg("expr"), py::arg("zeta") = 4, py::arg("params") = std::vector<std::string>{},
        py::arg("extra") = std::vector<std::string>{});
}
