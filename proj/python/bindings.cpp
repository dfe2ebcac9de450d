#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ancestor/json_io.hpp"

namespace py = pybind11;
using namespace anc;
using io::Json;

namespace {

FormSpace parseSpace(const std::string& text) { return io::spaceFromJson(Json::parse(text)); }

std::string analyzeSpace(const std::string& text) {
    const FormSpace v = parseSpace(text);
    Json out{{"d", v.dim()}, {"j", v.degree()}, {"tau", tau(v)}};
    if (v.isZero()) return out.dump();
    const GradedIdeal anc = ancestorIdeal(v);
    const OSequence h = hilbertFunction(anc);
    out["H"] = h.toString();
    out["ancestorIdeal"] = io::toJson(anc);
    out["generatorDegrees"] = generatorDegrees(anc);
    out["relationDegrees"] = relationDegrees(anc);
    return out.dump();
}

std::vector<std::string> enumerateSequences(int d, int j) {
    std::vector<std::string> out;
    for (const auto& h : enumerateAcceptable(d, j)) out.push_back(h.toString());
    return out;
}

std::string stratum(const std::string& h, int d, int j) { return io::toJson(dims(OSequence::parse(h), d, j)).dump(); }

std::string hasseJson(int d, int j) { return io::toJson(hasse(d, j)).dump(); }

std::string hasseDot(int d, int j) { return toDot(hasse(d, j)); }

std::string compare(const std::string& a, const std::string& b, int d, int j) {
    return toString(comparePartial(OSequence::parse(a), OSequence::parse(b), d, j));
}

std::string waring(const std::string& text) {
    DualSpace w(parseSpace(text));
    return io::toJson(gad(w), tauDelta(w), mu(w)).dump();
}

std::string related(const std::string& text) {
    Json list = Json::array();
    for (const auto& c : relatedClasses(parseSpace(text))) list.push_back(io::toJson(c));
    return list.dump();
}

std::string randomSpaceJson(int d, int j, const std::string& field, std::uint64_t seed) {
    return io::toJson(randomSpace(d, j, Field::parse(field), seed)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    m.def("analyze", &analyzeSpace, py::arg("space_json"));
    m.def("enumerate", &enumerateSequences, py::arg("d"), py::arg("j"));
    m.def("count_by_tau", &countByTau, py::arg("d"), py::arg("j"), py::arg("tau"), py::arg("c"));
    m.def("dims", &stratum, py::arg("H"), py::arg("d"), py::arg("j"));
    m.def("tau_of", [](const std::string& h, int j) { return tauOf(OSequence::parse(h), j); }, py::arg("H"),
          py::arg("j"));
    m.def("compare", &compare, py::arg("H1"), py::arg("H2"), py::arg("d"), py::arg("j"));
    m.def("hasse", &hasseJson, py::arg("d"), py::arg("j"));
    m.def("hasse_dot", &hasseDot, py::arg("d"), py::arg("j"));
    m.def("waring", &waring, py::arg("space_json"));
    m.def("related", &related, py::arg("space_json"));
    m.def("random_space", &randomSpaceJson, py::arg("d"), py::arg("j"), py::arg("field") = "Fp:101",
          py::arg("seed") = 1);
}
