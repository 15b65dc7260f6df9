#include "acsp/cli.hpp"
#include "acsp/circuit.hpp"
#include "acsp/classify.hpp"
#include "acsp/cnf2.hpp"
#include "acsp/engine.hpp"
#include "acsp/error.hpp"
#include "acsp/gadgets.hpp"
#include "acsp/hypergraph.hpp"
#include "acsp/json_io.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace acsp {

namespace {

std::string readText(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "3", "-1/2", "1/2,3" (re,im) or "i".
ComplexRat parseParam(const std::string &s) {
    if (s == "i") return ComplexRat::i();
    if (s == "-i") return -ComplexRat::i();
    auto comma = s.find(',');
    if (comma == std::string::npos) return ComplexRat::parse(s);
    return ComplexRat::parse(s.substr(0, comma), s.substr(comma + 1));
}

// A builtin name ("OR2", "Implies", "u0") or an inline function object.
FuncTable parseFunctionSpec(const std::string &s) {
    if (!s.empty() && s[0] == '{') return funcFromJson(json::parse(s));
    for (int k = 1; k <= 2; ++k) {
        try {
            FuncTable f = builtin(s, k);
            if (builtinName(f) == s) return f;
        } catch (const InputError &) {
        }
    }
    size_t p = s.size();
    while (p > 0 && std::isdigit(static_cast<unsigned char>(s[p - 1]))) --p;
    if (p == 0 || p == s.size()) throw InputError("unknown function '" + s + "'");
    return builtin(s.substr(0, p), std::stoi(s.substr(p)));
}

std::vector<std::string> functionNames(const json &j, const std::vector<FuncTable> &F) {
    std::vector<std::string> keys;
    const json &list = j.is_object() ? j["functions"] : j;
    if (list.is_object())
        for (const auto &[k, v] : list.items()) keys.push_back(k);
    std::vector<std::string> names;
    for (size_t i = 0; i < F.size(); ++i) {
        if (i < keys.size()) names.push_back(keys[i]);
        else names.push_back(builtinName(F[i]).value_or("f" + std::to_string(i)));
    }
    return names;
}

json forestJson(const Instance &inst, const JoinForest &jf) {
    json parents = json::array();
    for (int p : jf.parent) parents.push_back(p);
    json scopes = json::array();
    for (const auto &c : inst.constraints()) {
        json s = json::array();
        for (int v : c.vars) s.push_back(inst.varName(v));
        scopes.push_back(s);
    }
    return {{"parent", parents}, {"roots", jf.roots}, {"scopes", scopes}};
}

void emit(std::ostream &out, const json &j) { out << j.dump(2) << '\n'; }

} // namespace

int runCli(int argc, char **argv, std::ostream &out) {
    CLI::App app{"Exact counting for acyclic weighted Boolean CSPs"};
    app.require_subcommand(1);
    bool explain = false;
    app.add_flag("--explain", explain, "Attach traces (GYO steps, join forest, DP sizes)");

    // check-acyclic
    auto *ca = app.add_subcommand("check-acyclic", "GYO reduction on an instance or hypergraph");
    std::string caFile;
    bool edgesFirst = false;
    ca->add_option("file", caFile, "Instance or hypergraph JSON")->required();
    ca->add_flag("--edges-first", edgesFirst, "Prefer edge removals in the reduction");
    ca->add_flag("--explain", explain);

    // count
    auto *co = app.add_subcommand("count", "Weighted count of an instance");
    std::string coFile, method = "auto";
    co->add_option("file", coFile, "Instance JSON")->required();
    co->add_option("--method", method, "auto|brute|jointree|ed");
    co->add_flag("--explain", explain);

    // count-2sat
    auto *c2 = app.add_subcommand("count-2sat", "Model count of an acyclic 2CNF (DIMACS)");
    std::string c2File, c2Method = "auto";
    c2->add_option("file", c2File, "DIMACS file")->required();
    c2->add_option("--method", c2Method, "auto|brute|jointree|ed");
    c2->add_flag("--explain", explain);

    // classify
    auto *cl = app.add_subcommand("classify", "Complexity tier of a function set");
    std::string clFile, clMode = "with-xor";
    cl->add_option("file", clFile, "Function set JSON")->required();
    cl->add_option("--mode", clMode, "with-xor|no-xor");

    // gadget
    auto *ga = app.add_subcommand("gadget", "Gadget catalog");
    ga->require_subcommand(1);
    auto *gl = ga->add_subcommand("list", "List catalog entries");
    auto *gv = ga->add_subcommand("verify", "Verify a catalog gadget or a gadget file");
    std::string gName, gFile;
    std::vector<std::string> gParams;
    gv->add_option("name", gName, "Catalog name");
    gv->add_option("params", gParams, "Parameters (3, -1/2, re,im or i)");
    gv->add_option("--file", gFile, "Gadget JSON instead of a catalog name");
    auto *gs = ga->add_subcommand("show", "Print a catalog gadget as JSON");
    gs->add_option("name", gName)->required();
    gs->add_option("params", gParams);
    auto *gap = ga->add_subcommand("apply", "Rewrite an instance with a gadget");
    std::string target, gadgetName, apFile;
    gap->add_option("--target", target, "Function to replace (default: the gadget's target)");
    gap->add_option("--gadget", gadgetName, "Catalog name")->required();
    gap->add_option("--params", gParams, "Gadget parameters");
    gap->add_option("file", apFile, "Instance JSON")->required();

    // circuit
    auto *ci = app.add_subcommand("circuit", "Semi-unbounded circuits");
    ci->require_subcommand(1);
    auto *cc = ci->add_subcommand("count", "Number of accepting subtrees");
    auto *cm = ci->add_subcommand("compile", "Compile to an acyclic instance");
    std::string ciFile, bits, mode = "direct";
    bool withCount = false;
    for (auto *s : {cc, cm}) {
        s->add_option("file", ciFile, "Circuit JSON")->required();
        s->add_option("--input", bits, "Input bits, e.g. 1011")->required();
    }
    cm->add_option("--mode", mode, "direct|strict");
    cm->add_flag("--count", withCount, "Also count the compiled instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        emit(out, {{"error", "usage"}, {"message", e.what()}});
        return 2;
    }

    try {
        if (*ca) {
            json j = readJsonFile(caFile);
            bool isHypergraph = j.is_object() && j.contains("edges") && !j.contains("constraints");
            Instance inst;
            Hypergraph h;
            if (isHypergraph) {
                h = hypergraphFromJson(j);
            } else {
                inst = instanceFromJson(j);
                h = buildHypergraph(inst);
            }
            GyoPolicy pol;
            pol.edgesFirst = edgesFirst;
            GyoResult r = gyoReduce(h, pol);
            json res{{"acyclic", r.acyclic}};
            if (explain || !r.acyclic) res["trace"] = renderTrace(h, r);
            if (explain && r.acyclic && !isHypergraph) res["join_forest"] = forestJson(inst, joinForest(inst));
            emit(out, res);
        } else if (*co) {
            Instance inst = instanceFromJson(readJsonFile(coFile));
            CountOptions opt;
            opt.explain = explain;
            emit(out, count(inst, methodFromName(method), opt).toJson());
        } else if (*c2) {
            CNF2 phi = parse2CNF(readText(c2File));
            CountOptions opt;
            opt.explain = explain;
            emit(out, count2SAT(phi, methodFromName(c2Method), opt).toJson());
        } else if (*cl) {
            json j = readJsonFile(clFile);
            auto F = functionsFromJson(j);
            emit(out, classify(F, modeFromName(clMode)).toJson(functionNames(j, F)));
        } else if (*gl) {
            json list = json::array();
            for (const auto &e : catalogEntries()) {
                json s = json::array();
                for (const auto &p : e.samples) {
                    json ps = json::array();
                    for (const auto &v : p) ps.push_back(complexToJson(v));
                    s.push_back(ps);
                }
                list.push_back({{"name", e.name}, {"params", e.params}, {"cyclic", e.cyclic},
                                {"summary", e.summary}, {"samples", s}});
            }
            emit(out, {{"gadgets", list}});
        } else if (*gv) {
            GadgetRealization r;
            if (!gFile.empty()) {
                r = realizationFromJson(readJsonFile(gFile));
            } else {
                if (gName.empty()) throw InputError("gadget verify needs a catalog name or --file");
                std::vector<ComplexRat> ps;
                for (const auto &p : gParams) ps.push_back(parseParam(p));
                r = catalog(gName, ps);
            }
            json res = verifyAny(r).toJson();
            res["name"] = r.name;
            res["k"] = r.k;
            res["m"] = r.numAux();
            res["lambda"] = complexToJson(r.lambda);
            emit(out, res);
        } else if (*gs) {
            std::vector<ComplexRat> ps;
            for (const auto &p : gParams) ps.push_back(parseParam(p));
            emit(out, catalog(gName, ps).toJson());
        } else if (*gap) {
            std::vector<ComplexRat> ps;
            for (const auto &p : gParams) ps.push_back(parseParam(p));
            GadgetRealization r = catalog(gadgetName, ps);
            FuncTable f = target.empty() ? r.target : parseFunctionSpec(target);
            Instance inst = instanceFromJson(readJsonFile(apFile));
            Rewrite rw = rewriteInstance(inst, f, r);
            emit(out, {{"instance", instanceToJson(rw.instance)},
                       {"scalar", complexToJson(rw.scalar)},
                       {"occurrences", rw.occurrences}});
        } else if (*cc) {
            Circuit c = circuitFromJson(readJsonFile(ciFile));
            emit(out, {{"subtrees", countSubtrees(c, parseBits(bits, c.inputs)).get_str()}});
        } else if (*cm) {
            Circuit c = circuitFromJson(readJsonFile(ciFile));
            CompiledCircuit r = compileCircuit(c, parseBits(bits, c.inputs), compileModeFromName(mode));
            json res{{"mode", mode}, {"instance", instanceToJson(r.instance)}, {"scalar", complexToJson(r.scalar)}};
            if (withCount) res["count"] = complexToJson(r.scalar * count(r.instance, CountMethod::Auto).value);
            emit(out, res);
        }
        return 0;
    } catch (const NotAcyclic &e) {
        emit(out, {{"error", "not_acyclic"}, {"message", e.what()}, {"trace", e.trace()}});
        return 2;
    } catch (const InputError &e) {
        emit(out, {{"error", "input"}, {"message", e.what()}});
        return 2;
    } catch (const json::exception &e) {
        emit(out, {{"error", "input"}, {"message", std::string("malformed JSON: ") + e.what()}});
        return 2;
    } catch (const InternalError &e) {
        emit(out, {{"error", "internal"}, {"message", e.what()}});
        return 1;
    } catch (const std::exception &e) {
        emit(out, {{"error", "internal"}, {"message", e.what()}});
        return 1;
    }
}

} // namespace acsp
