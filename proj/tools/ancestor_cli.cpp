#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ancestor/acceptance.hpp"
#include "ancestor/json_io.hpp"

using namespace anc;
using io::Json;

namespace {

struct Options {
    std::string field = "Fp:101";
    int d = -1;
    int j = -1;
    int tau = -1;
    int c = -1;
    int mu = -1;
    std::uint64_t seed = 1;
    int maxJ = 8;
    bool dot = false;
    bool json = false;
    std::string input;
    std::string hText;
    std::string targetH;
    std::string fromH;
    std::string fromIdeal;
};

Json readJson(const std::string& path) {
    std::stringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw PreconditionError("cannot read " + path);
        buffer << in.rdbuf();
    }
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void need(bool ok, const std::string& message) {
    if (!ok) throw PreconditionError(message);
}

Json analysis(const FormSpace& v) {
    Json out{{"space", io::toJson(v)}, {"d", v.dim()}, {"j", v.degree()}, {"tau", tau(v)}};
    if (v.isZero()) {
        out["stratum"] = nullptr;
        return out;
    }
    GradedIdeal anc = ancestorIdeal(v);
    out["gcd"] = io::toJson(gcdOfSpace(v));
    out["ancestorIdeal"] = io::toJson(anc);
    Json gens = Json::array(), rels = Json::array();
    for (int g : generatorDegrees(anc)) gens.push_back(g);
    for (int r : relationDegrees(anc)) rels.push_back(r);
    out["generatorDegrees"] = gens;
    out["relationDegrees"] = rels;
    const OSequence h = hilbertFunction(anc);
    out["H"] = h.toString();
    if (v.isFull())
        out["stratum"] = nullptr;
    else
        out["stratum"] = io::toJson(dims(h, v.dim(), v.degree()));
    return out;
}

std::string checkLine(const CodimCheck& c) {
    std::ostringstream s;
    s << c.locus << " in " << c.ambient << ": " << c.formula << " = " << c.value << " (expected " << c.expected << ")"
      << (c.agrees() ? "" : " DISCREPANCY");
    return s.str();
}

int cmdAnalyze(const Options& o) {
    emit(analysis(io::spaceFromJson(readJson(o.input))));
    return 0;
}

int cmdEnumerate(const Options& o) {
    need(o.d >= 1 && o.j >= o.d, "enumerate needs 1 <= d <= j");
    auto list = enumerateAcceptable(o.d, o.j);
    std::vector<OSequence> shown;
    std::map<std::pair<int, int>, std::uint64_t> counted;
    for (const auto& h : list) {
        const int t = tauOf(h, o.j);
        ++counted[{t, h.constant()}];
        if ((o.tau < 0 || o.tau == t) && (o.c < 0 || o.c == h.constant())) shown.push_back(h);
    }
    Json counts = Json::array();
    bool consistent = true;
    for (const auto& [key, n] : counted) {
        if ((o.tau >= 0 && o.tau != key.first) || (o.c >= 0 && o.c != key.second)) continue;
        const std::uint64_t formula = countByTau(o.d, o.j, key.first, key.second);
        consistent = consistent && formula == n;
        counts.push_back(Json{{"tau", key.first}, {"c", key.second}, {"enumerated", n}, {"formula", formula}});
    }
    if (!consistent) throw InternalError("enumeration disagrees with the partition count");
    if (o.json) {
        Json seqs = Json::array();
        for (const auto& h : shown) {
            auto r = dims(h, o.d, o.j);
            seqs.push_back(Json{{"H", h.toString()},
                                {"tau", r.tau},
                                {"c", r.c},
                                {"P", r.pq.P.toString()},
                                {"Q", r.pq.Q.toString()},
                                {"A", r.betti.A.toString()},
                                {"B", r.betti.B.toString()},
                                {"cod", r.codimGrassH()}});
        }
        emit(Json{{"d", o.d}, {"j", o.j}, {"sequences", seqs}, {"counts", counts}});
        return 0;
    }
    for (const auto& h : shown) {
        auto r = dims(h, o.d, o.j);
        std::cout << h.toString() << " tau=" << r.tau << " c=" << r.c << " P=" << r.pq.P.toString()
                  << " Q=" << r.pq.Q.toString() << " A=" << r.betti.A.toString() << " B=" << r.betti.B.toString()
                  << " cod=" << r.codimGrassH() << "\n";
    }
    for (const auto& item : counts)
        std::cout << "count tau=" << item["tau"] << " c=" << item["c"] << ": " << item["enumerated"] << " = "
                  << item["formula"] << "\n";
    return 0;
}

int cmdDims(const Options& o) {
    need(!o.hText.empty(), "dims needs --H");
    const OSequence h = OSequence::parse(o.hText);
    int j = o.j, d = o.d;
    need(j >= 0, "dims needs --j");
    if (d < 0) d = j + 1 - h[j];
    auto r = dims(h, d, j);
    if (o.json) {
        emit(io::toJson(r));
        return 0;
    }
    std::cout << "H=" << h.toString() << " d=" << d << " j=" << j << " tau=" << r.tau << " c=" << r.c << " mu=" << r.mu
              << "\n";
    std::cout << "P=" << r.pq.P.toString() << " Q=" << r.pq.Q.toString() << " A=" << r.betti.A.toString()
              << " B=" << r.betti.B.toString() << " C=" << r.betti.C.toString() << " D=" << r.betti.D.toString() << "\n";
    std::cout << "dim Grass=" << r.dimGrass << " dim Grass_tau=" << r.dimGrassTau << " dim Grass_H=" << r.dimGrassH
              << " cod Grass_H=" << r.codimGrassH() << "\n";
    for (const auto& c : r.checks) std::cout << checkLine(c) << "\n";
    return 0;
}

int cmdHasse(const Options& o) {
    need(o.d >= 1 && o.j >= o.d, "hasse needs 1 <= d <= j");
    auto diagram = hasse(o.d, o.j);
    if (o.dot)
        std::cout << toDot(diagram);
    else if (o.json)
        emit(io::toJson(diagram));
    else
        for (const auto& [a, b] : diagram.edges)
            std::cout << diagram.nodes[a].toString() << " -> " << diagram.nodes[b].toString() << "\n";
    return 0;
}

int cmdBuild(const Options& o) {
    need(!o.targetH.empty(), "build needs --target-H");
    need(o.fromIdeal.empty() != o.fromH.empty(), "build needs exactly one of --from and --from-H");
    need(o.j >= 0, "build needs --j");
    GradedIdeal start = GradedIdeal::zero(Field::standard());
    if (!o.fromIdeal.empty()) {
        start = io::idealFromJson(readJson(o.fromIdeal));
    } else {
        const OSequence hp = OSequence::parse(o.fromH);
        start = realizeStaircase(hp, o.j + 1 - hp[o.j], o.j, Field::parse(o.field)).ideal;
    }
    emit(io::toJson(buildH(start, OSequence::parse(o.targetH), o.j)));
    return 0;
}

int cmdWaring(const Options& o) {
    if (o.input.empty() && o.mu >= 0) {
        need(o.tau >= 1 && o.c >= 0 && o.j >= 0, "the locus codimension needs --mu, --tau, --c and --j");
        auto g = gadLocusCodim(o.mu, o.tau, o.c, o.j);
        emit(Json{{"mu", o.mu},
                  {"tau", o.tau},
                  {"c", o.c},
                  {"j", o.j},
                  {"A", g.A.toString()},
                  {"ellA", g.fromPartition},
                  {"closedForm", g.closedForm},
                  {"agrees", g.agrees()}});
        return 0;
    }
    DualSpace w(io::spaceFromJson(readJson(o.input)));
    Gad g = gad(w);
    if (g.split() && !verifyGadCertificate(w, g)) throw InternalError("decomposition failed its certificate");
    emit(io::toJson(g, tauDelta(w), mu(w)));
    return 0;
}

int cmdRelated(const Options& o) {
    auto classes = relatedClasses(io::spaceFromJson(readJson(o.input)));
    if (o.json) {
        Json list = Json::array();
        for (const auto& c : classes) list.push_back(io::toJson(c));
        emit(Json{{"classes", list}});
        return 0;
    }
    for (const auto& c : classes) {
        std::string chain, gens;
        for (int s : c.chain) chain += (chain.empty() ? "" : ",") + std::to_string(s);
        for (int g : generatorDegrees(c.ancestor)) gens += (gens.empty() ? "" : ",") + std::to_string(g);
        std::cout << "chain=(" << chain << ") generators=(" << gens << ") H=" << hilbertFunction(c.ancestor).toString()
                  << "\n";
    }
    return 0;
}

int cmdRandom(const Options& o) {
    need(o.j >= 0 && o.d >= 0 && o.d <= o.j + 1, "random needs 0 <= d <= j + 1");
    Json out = analysis(randomSpace(o.d, o.j, Field::parse(o.field), o.seed));
    out["seed"] = o.seed;
    emit(out);
    return 0;
}

int cmdVerify(const Options& o) {
    AcceptanceOptions opt;
    opt.maxJ = o.maxJ;
    bool all = true;
    Json report = Json::array();
    for (int id : criterionIds()) {
        auto r = runCriterion(id, opt);
        all = all && r.pass;
        if (o.json) {
            report.push_back(Json{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"notes", r.notes}});
            continue;
        }
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.title << "\n";
        for (const auto& n : r.notes) std::cout << "  " << n << "\n";
    }
    if (o.json) emit(Json{{"maxJ", o.maxJ}, {"criteria", report}, {"allPass", all}});
    return all ? 0 : 3;
}

void errorJson(const char* kind, const std::string& message) {
    std::cout << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ancestor ideals of spaces of binary forms"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "Q or Fp:p")->capture_default_str();
        sub->add_flag("--json", o.json, "emit JSON");
    };

    auto* analyze = app.add_subcommand("analyze", "ancestor ideal and stratum of a space");
    analyze->add_option("input", o.input, "space JSON, - for stdin")->required();
    common(analyze);

    auto* enumerate = app.add_subcommand("enumerate", "acceptable Hilbert functions");
    enumerate->add_option("--d", o.d)->required();
    enumerate->add_option("--j", o.j)->required();
    enumerate->add_option("--tau", o.tau);
    enumerate->add_option("--c", o.c);
    common(enumerate);

    auto* dimsCmd = app.add_subcommand("dims", "dimension and codimension report");
    dimsCmd->add_option("--H", o.hText, "sequence such as 1,2,3,4,3,2(1)")->required();
    dimsCmd->add_option("--d", o.d);
    dimsCmd->add_option("--j", o.j)->required();
    common(dimsCmd);

    auto* hasseCmd = app.add_subcommand("hasse", "cover relations of the partial order");
    hasseCmd->add_option("--d", o.d)->required();
    hasseCmd->add_option("--j", o.j)->required();
    hasseCmd->add_flag("--dot", o.dot, "emit Graphviz DOT");
    common(hasseCmd);

    auto* build = app.add_subcommand("build", "specialize an ideal towards a more general Hilbert function");
    build->add_option("--from", o.fromIdeal, "ideal JSON");
    build->add_option("--from-H", o.fromH, "start from the staircase ideal of this sequence");
    build->add_option("--target-H", o.targetH)->required();
    build->add_option("--j", o.j)->required();
    common(build);

    auto* waring = app.add_subcommand("waring", "order and decomposition of a space of dual forms");
    waring->add_option("input", o.input, "dual space JSON, - for stdin");
    waring->add_option("--mu", o.mu);
    waring->add_option("--tau", o.tau);
    waring->add_option("--c", o.c);
    waring->add_option("--j", o.j);
    common(waring);

    auto* related = app.add_subcommand("related", "classes of related spaces");
    related->add_option("input", o.input, "space JSON, - for stdin")->required();
    common(related);

    auto* random = app.add_subcommand("random", "random space with its analysis");
    random->add_option("--d", o.d)->required();
    random->add_option("--j", o.j)->required();
    random->add_option("--seed", o.seed)->capture_default_str();
    common(random);

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--max-j", o.maxJ)->capture_default_str();
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        errorJson("usage", e.what());
        return 1;
    }

    try {
        Field::parse(o.field);
        if (*analyze) return cmdAnalyze(o);
        if (*enumerate) return cmdEnumerate(o);
        if (*dimsCmd) return cmdDims(o);
        if (*hasseCmd) return cmdHasse(o);
        if (*build) return cmdBuild(o);
        if (*waring) return cmdWaring(o);
        if (*related) return cmdRelated(o);
        if (*random) return cmdRandom(o);
        if (*verify) return cmdVerify(o);
    } catch (const PreconditionError& e) {
        errorJson("precondition", e.what());
        return 1;
    } catch (const Json::exception& e) {
        errorJson("precondition", e.what());
        return 1;
    } catch (const std::exception& e) {
        errorJson("internal", e.what());
        return 2;
    }
    return 2;
}
