#include "ancestor/json_io.hpp"

namespace anc::io {

namespace {

Json intList(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x);
    return out;
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing JSON field: ") + key);
    return j.at(key);
}

int intMember(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_number_integer()) throw PreconditionError(std::string("JSON field must be an integer: ") + key);
    return v.get<int>();
}

}  // namespace

Json toJson(const BinaryForm& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.toString());
    return Json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

Json toJson(const FormSpace& v) {
    Json basis = Json::array();
    for (const auto& f : v.forms()) basis.push_back(toJson(f));
    return Json{{"degree", v.degree()}, {"field", v.field().toString()}, {"basis", basis}};
}

Json toJson(const GradedIdeal& ideal) {
    Json comps = Json::object();
    const int hi = ideal.isZero() ? ideal.lo() - 1 : ideal.settledDegree();
    const int lo = std::min(ideal.lo(), hi + 1);
    for (int i = lo; i <= hi; ++i) comps[std::to_string(i)] = toJson(ideal.component(i));
    Json out{{"field", ideal.field().toString()}, {"window", Json::array({lo, hi})}, {"components", comps}};
    out["tailGcd"] = ideal.tailGcd() ? toJson(*ideal.tailGcd()) : Json(nullptr);
    return out;
}

Json toJson(const Partition& p) { return p.toString(); }

Json toJson(const StratumReport& r) {
    auto nt = noseTail(r.h, r.j);
    Json checks = Json::array();
    Json discrepancies = Json::array();
    for (const auto& c : r.checks) {
        Json item{{"locus", c.locus}, {"ambient", c.ambient}, {"formula", c.formula},
                  {"value", c.value},  {"expected", c.expected}, {"agrees", c.agrees()}};
        checks.push_back(item);
        if (!c.agrees()) discrepancies.push_back(item);
    }
    return Json{{"H", r.h.toString()},
                {"d", r.d},
                {"j", r.j},
                {"tau", r.tau},
                {"c", r.c},
                {"mu", r.mu},
                {"N", nt.nose.toString()},
                {"T", nt.tail.toString()},
                {"P", toJson(r.pq.P)},
                {"Q", toJson(r.pq.Q)},
                {"A", toJson(r.betti.A)},
                {"B", toJson(r.betti.B)},
                {"C", toJson(r.betti.C)},
                {"D", toJson(r.betti.D)},
                {"dimGrass", r.dimGrass},
                {"dimGrassTau", r.dimGrassTau},
                {"dimGrassH", r.dimGrassH},
                {"codimGrassH", r.codimGrassH()},
                {"dimLevelLocus", r.dimLevel},
                {"dimTailLocus", r.dimTail},
                {"checks", checks},
                {"discrepancies", discrepancies}};
}

Json toJson(const BuildTrace& trace) {
    Json steps = Json::array();
    for (const auto& s : trace.steps)
        steps.push_back(Json{{"phase", s.phase},
                             {"before", s.before.toString()},
                             {"after", s.after.toString()},
                             {"degrees", intList(s.changedDegrees)}});
    return Json{{"steps", steps}, {"H", hilbertFunction(trace.result).toString()}, {"ideal", toJson(trace.result)}};
}

Json toJson(const Gad& g, int tauDeltaValue, int muValue) {
    Json out{{"tauDelta", tauDeltaValue}, {"mu", muValue}};
    if (g.split()) {
        Json forms = Json::array();
        for (const auto& L : g.forms) forms.push_back(toJson(L.body()));
        out["gad"] = Json{{"forms", forms}, {"weights", intList(g.weights)}};
    } else {
        out["gad"] = Json{{"unsplit", toJson(*g.unsplit)}};
    }
    return out;
}

Json toJson(const RelatedClass& cls) {
    return Json{{"chain", intList(cls.chain)},
                {"tau", tau(cls.representative)},
                {"H", hilbertFunction(cls.ancestor).toString()},
                {"representative", toJson(cls.representative)}};
}

Json toJson(const HasseDiagram& diagram) {
    Json nodes = Json::array();
    for (const auto& h : diagram.nodes) nodes.push_back(h.toString());
    Json edges = Json::array();
    for (const auto& [a, b] : diagram.edges) edges.push_back(Json::array({a, b}));
    return Json{{"d", diagram.d}, {"j", diagram.j}, {"nodes", nodes}, {"edges", edges}};
}

BinaryForm formFromJson(const Json& j, const Field& field) {
    const int degree = intMember(j, "degree");
    const Json& coeffs = member(j, "coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != degree + 1)
        throw PreconditionError("form needs degree + 1 coefficients");
    Vector c;
    for (const auto& item : coeffs) {
        if (item.is_string())
            c.push_back(Scalar::parse(field, item.get<std::string>()));
        else if (item.is_number_integer())
            c.emplace_back(field, item.get<long>());
        else
            throw PreconditionError("coefficients must be strings or integers");
    }
    return BinaryForm(field, std::move(c));
}

FormSpace spaceFromJson(const Json& j) {
    const Field field = Field::parse(member(j, "field").get<std::string>());
    const int degree = intMember(j, "degree");
    std::vector<BinaryForm> forms;
    for (const auto& item : member(j, "basis")) {
        BinaryForm f = formFromJson(item, field);
        if (f.degree() != degree) throw PreconditionError("basis form degree mismatch");
        forms.push_back(f);
    }
    return FormSpace::span(field, degree, forms);
}

GradedIdeal idealFromJson(const Json& j) {
    const Field field = Field::parse(member(j, "field").get<std::string>());
    const Json& window = member(j, "window");
    if (!window.is_array() || window.size() != 2) throw PreconditionError("window must be [lo, hi]");
    const int lo = window[0].get<int>();
    const int hi = window[1].get<int>();
    const Json& comps = member(j, "components");
    std::vector<FormSpace> spaces;
    for (int i = lo; i <= hi; ++i) {
        const auto key = std::to_string(i);
        if (!comps.contains(key)) throw PreconditionError("missing component in degree " + key);
        FormSpace v = spaceFromJson(comps.at(key));
        if (v.degree() != i || v.field() != field) throw PreconditionError("component " + key + " is inconsistent");
        spaces.push_back(v);
    }
    const Json& tail = member(j, "tailGcd");
    std::optional<BinaryForm> t;
    if (!tail.is_null()) t = formFromJson(tail, field);
    GradedIdeal ideal = GradedIdeal::fromComponents(field, lo, std::move(spaces), t);
    ideal.validate();
    return ideal;
}

}  // namespace anc::io
