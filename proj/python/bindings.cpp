#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torembed/errors.hpp"
#include "torembed/pipeline.hpp"

namespace py = pybind11;
using namespace torembed;

namespace {

// Documents cross the boundary as JSON text; the Python layer decodes them.
Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(e.what());
    }
}

TDivisor ample_for(const Fan& fan, const std::optional<std::string>& ample) {
    if (!ample) return find_ample(fan);
    TDivisor h = divisor_from_json(parse(*ample));
    if (h.size() != fan.num_rays()) throw FormatError("ample divisor needs one entry per ray");
    if (!is_ample(fan, h)) throw NotAmple("the supplied divisor is not ample");
    return h;
}

}  // namespace

PYBIND11_MODULE(_torembed, m) {
    m.doc() = "Exact curve embeddings into smooth projective toric 3-folds";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result([&]() { return py::exception<Error>(m, "TorembedError"); });
    // args = (kind, message)
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type.get_stored(), py::make_tuple(e.kind(), e.what()));
        }
    });

    m.def("presets", &preset_names);
    m.def("preset", [](const std::string& name) { return fan_to_json(preset(name)).dump(); });
    m.def("validate", [](const std::string& fan) { return validation_to_json(validate(fan_from_json(parse(fan)))).dump(); });
    m.def("find_ample", [](const std::string& fan) { return divisor_to_json(find_ample(fan_from_json(parse(fan)))).dump(); });
    m.def(
        "xi",
        [](const std::string& fan, std::optional<std::string> ample, const std::string& method) {
            const Fan f = fan_from_json(parse(fan));
            const XiMethod xm = xi_method_from_string(method);
            const TDivisor h = xm == XiMethod::Kernel && !ample ? TDivisor{} : ample_for(f, ample);
            return xi_to_json(xi_vector(f, h, xm)).dump();
        },
        py::arg("fan"), py::arg("ample") = py::none(), py::arg("method") = "intersection");
    m.def(
        "embed",
        [](const std::string& fan, std::optional<std::string> ample, std::uint64_t seed, const std::string& torus,
           const std::string& method) {
            const Fan f = fan_from_json(parse(fan));
            const TDivisor h = ample_for(f, ample);
            const XiVector xi = xi_vector(f, h, xi_method_from_string(method));
            return embedding_to_json(build_embedding_data(f, h, xi, seed, parse_torus(torus))).dump();
        },
        py::arg("fan"), py::arg("ample") = py::none(), py::arg("seed") = 0, py::arg("torus") = "1,1,1",
        py::arg("method") = "intersection");
    m.def(
        "certify",
        [](const std::string& embedding, long degree_cap) {
            const EmbeddingData data = embedding_from_json(parse(embedding));
            VerifyOptions options;
            options.degree_cap = degree_cap;
            Certificate cert;
            {
                py::gil_scoped_release release;
                cert = certify(data, options);
            }
            return certificate_to_json(cert).dump();
        },
        py::arg("embedding"), py::arg("degree_cap") = 512);
    m.def("run", [](const std::string& config) {
        RunOutcome out;
        {
            const RunConfig c = config_from_json(parse(config));
            py::gil_scoped_release release;
            out = run_pipeline(c);
        }
        return py::make_tuple(out.exit_code, out.report.dump());
    });
}
