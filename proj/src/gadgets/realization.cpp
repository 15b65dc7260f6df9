#include "acsp/engine.hpp"
#include "acsp/error.hpp"
#include "acsp/gadgets.hpp"
#include "acsp/hypergraph.hpp"
#include "acsp/json_io.hpp"

#include <set>

namespace acsp {

namespace {

void refuseLinked(const GadgetRealization &r, const VerifyOptions &opt) {
    if (opt.allowLinked) return;
    for (const auto &c : r.base.constraints()) {
        if (c.linked || c.f->linked())
            throw InputError("gadget " + r.name + " uses a linked table; linking does not preserve realizability");
    }
}

void checkShape(const GadgetRealization &r) {
    if (r.k != r.target.arity())
        throw InputError("gadget " + r.name + ": target arity " + std::to_string(r.target.arity()) +
                         " but " + std::to_string(r.k) + " external variables");
    if (r.base.numVars() < r.k) throw InputError("gadget " + r.name + ": base lacks its external variables");
    if (r.lambda.isZero()) throw InputError("gadget " + r.name + ": lambda must be nonzero");
}

// Base hypergraph with a dangling edge on every external variable.
Hypergraph gadgetHypergraph(const GadgetRealization &r) {
    Hypergraph h = buildHypergraph(r.base);
    for (int j = 0; j < r.k; ++j) h.edges.push_back({j});
    return h;
}

void checkAcyclic(const GadgetRealization &r, VerifyReport &rep) {
    Hypergraph h = gadgetHypergraph(r);
    GyoResult g = gyoReduce(h);
    rep.acyclic = g.acyclic;
    if (!g.acyclic) rep.gyoTrace = renderTrace(h, g);
}

std::vector<uint8_t> bitsOf(size_t x, int k) {
    std::vector<uint8_t> b(k);
    for (int j = 0; j < k; ++j) b[j] = uint8_t((x >> (k - 1 - j)) & 1u);
    return b;
}

} // namespace

json GadgetRealization::toJson() const {
    json j = instanceToJson(base);
    std::vector<std::string> ext(base.varNames().begin(), base.varNames().begin() + k);
    j["name"] = name;
    j["external"] = ext;
    j["target"] = funcToJson(target);
    j["lambda"] = complexToJson(lambda);
    return j;
}

GadgetRealization realizationFromJson(const json &j) {
    if (!j.is_object() || !j.contains("target") || !j.contains("external"))
        throw InputError("gadget JSON needs \"target\" and \"external\"");
    GadgetRealization r;
    r.name = j.value("name", std::string("custom"));
    r.target = funcFromJson(j["target"]);
    r.lambda = j.contains("lambda") ? complexFromJson(j["lambda"]) : ComplexRat(1);
    Instance parsed = instanceFromJson(j);
    if (!j["external"].is_array()) throw InputError("\"external\" must be an array of names");
    std::vector<std::string> ext;
    for (const auto &e : j["external"]) {
        if (!e.is_string()) throw InputError("external names must be strings");
        ext.push_back(e.get<std::string>());
    }
    r.k = int(ext.size());
    // Externals first, then everything else in parsed order.
    for (const auto &n : ext) r.base.addVar(n);
    for (const auto &n : parsed.varNames()) {
        if (r.base.findVar(n) < 0) r.base.addVar(n);
    }
    for (const auto &c : parsed.constraints()) {
        std::vector<int> vars;
        for (int v : c.vars) vars.push_back(r.base.findVar(parsed.varName(v)));
        r.base.add(c.f, vars, c.fname, c.linked);
    }
    checkShape(r);
    return r;
}

json VerifyReport::toJson() const {
    json j{{"ok", ok()}, {"identity", identity}, {"acyclic", acyclic}};
    if (counterexample) {
        std::string s;
        for (uint8_t b : *counterexample) s += char('0' + b);
        j["counterexample"] = s;
        j["expected"] = complexToJson(expected);
        j["got"] = complexToJson(got);
    }
    if (!gyoTrace.empty()) j["gyo_trace"] = gyoTrace;
    return j;
}

VerifyReport verifyRealization(const GadgetRealization &r, const VerifyOptions &opt) {
    checkShape(r);
    refuseLinked(r, opt);
    int n = r.base.numVars(), m = r.numAux();
    if (n > opt.limit)
        throw InputError("gadget " + r.name + ": " + std::to_string(n) +
                         " variables exceed the verification limit of " + std::to_string(opt.limit));
    VerifyReport rep;
    checkAcyclic(r, rep);
    std::vector<ComplexRat> sums(size_t(1) << r.k, ComplexRat(0));
    std::vector<uint8_t> bits(n);
    for (size_t a = 0; a < (size_t(1) << n); ++a) {
        for (int j = 0; j < n; ++j) bits[j] = uint8_t((a >> (n - 1 - j)) & 1u);
        ComplexRat prod(1);
        for (const auto &c : r.base.constraints()) {
            size_t idx = 0;
            for (int v : c.vars) idx = (idx << 1) | bits[v];
            prod *= c.f->at(idx);
            if (prod.isZero()) break;
        }
        if (!prod.isZero()) sums[a >> m] += prod;
    }
    rep.identity = true;
    for (size_t x = 0; x < sums.size(); ++x) {
        ComplexRat got = r.lambda * sums[x];
        if (got != r.target.at(x)) {
            rep.identity = false;
            rep.counterexample = bitsOf(x, r.k);
            rep.expected = r.target.at(x);
            rep.got = got;
            break;
        }
    }
    return rep;
}

VerifyReport verifyRealizationByCounting(const GadgetRealization &r, const VerifyOptions &opt) {
    checkShape(r);
    refuseLinked(r, opt);
    VerifyReport rep;
    checkAcyclic(r, rep);
    if (!rep.acyclic) return rep;
    rep.identity = true;
    for (size_t x = 0; x < (size_t(1) << r.k); ++x) {
        Instance pinned = r.base;
        auto bits = bitsOf(x, r.k);
        for (int j = 0; j < r.k; ++j) pinned.add(bits[j] ? fDelta1() : fDelta0(), std::vector<int>{j});
        CountOptions co;
        co.maxDpArity = 20;
        ComplexRat got = r.lambda * countJoinTree(pinned, co).value;
        if (got != r.target.at(x)) {
            rep.identity = false;
            rep.counterexample = bits;
            rep.expected = r.target.at(x);
            rep.got = got;
            break;
        }
    }
    return rep;
}

VerifyReport verifyAny(const GadgetRealization &r, const VerifyOptions &opt) {
    if (r.base.numVars() <= opt.limit) return verifyRealization(r, opt);
    return verifyRealizationByCounting(r, opt);
}

GadgetRealization identityRealization(const FuncTable &f) {
    GadgetRealization r;
    r.name = "identity";
    r.target = f;
    r.k = f.arity();
    std::vector<int> vars;
    for (int j = 0; j < r.k; ++j) vars.push_back(r.base.addVar("x" + std::to_string(j + 1)));
    r.base.add(f, vars);
    return r;
}

namespace {

std::string freshName(const Instance &inst, std::string n) {
    while (inst.findVar(n) >= 0) n += "'";
    return n;
}

// Append r's base to `out`, externals bound to `args`, auxiliaries renamed
// under `prefix`.
void substitute(Instance &out, const std::vector<int> &args, const GadgetRealization &r, const std::string &prefix) {
    std::vector<int> map(r.base.numVars(), -1);
    for (int j = 0; j < r.k; ++j) map[j] = args[j];
    for (int v = r.k; v < r.base.numVars(); ++v) map[v] = out.addVar(freshName(out, prefix + r.base.varName(v)));
    for (const auto &c : r.base.constraints()) {
        std::vector<int> vars;
        for (int v : c.vars) vars.push_back(map[v]);
        out.add(c.f, vars, c.fname, c.linked);
    }
}

bool distinct(const std::vector<int> &v) { return std::set<int>(v.begin(), v.end()).size() == v.size(); }

} // namespace

GadgetRealization transitiveCompose(const GadgetRealization &r1, const GadgetRealization &r2) {
    checkShape(r1);
    checkShape(r2);
    GadgetRealization out;
    out.name = r1.name + "∘" + r2.name;
    out.target = r1.target;
    out.k = r1.k;
    for (const auto &n : r1.base.varNames()) out.base.addVar(n);
    int sites = 0;
    ComplexRat lam = r1.lambda;
    for (const auto &c : r1.base.constraints()) {
        if (*c.f == r2.target && !c.linked) {
            if (!distinct(c.vars)) throw InputError("cannot substitute into a constraint with repeated variables");
            substitute(out.base, c.vars, r2, "s" + std::to_string(sites) + ".");
            lam *= r2.lambda;
            ++sites;
        } else {
            out.base.add(c.f, c.vars, c.fname, c.linked);
        }
    }
    if (sites == 0) throw InputError("composition: " + r1.name + " does not use the target of " + r2.name);
    out.lambda = lam;
    VerifyReport rep = verifyAny(out);
    if (!rep.acyclic) throw NotAcyclic("composition " + out.name + " is not acyclic", rep.gyoTrace);
    if (!rep.identity) throw InternalError("composition " + out.name + " fails its defining identity");
    return out;
}

Rewrite rewriteInstance(const Instance &inst, const FuncTable &f, const GadgetRealization &r, bool verify) {
    if (r.target != f) throw InputError("realization " + r.name + " does not realize the requested function");
    Hypergraph hin = buildHypergraph(inst);
    GyoResult gin = gyoReduce(hin);
    if (!gin.acyclic) throw NotAcyclic("input instance is not acyclic", renderTrace(hin, gin));
    if (verify && !verifyAny(r).ok()) throw InputError("realization " + r.name + " does not verify");

    Rewrite rw;
    for (const auto &n : inst.varNames()) rw.instance.addVar(n);
    for (const auto &c : inst.constraints()) {
        if (*c.f != f) {
            rw.instance.add(c.f, c.vars, c.fname, c.linked);
            continue;
        }
        if (c.linked || !distinct(c.vars))
            throw InputError("cannot rewrite a linked occurrence of the target function");
        substitute(rw.instance, c.vars, r, r.name + "#" + std::to_string(rw.occurrences) + ".");
        rw.scalar *= r.lambda;
        ++rw.occurrences;
    }
    Hypergraph hout = buildHypergraph(rw.instance);
    GyoResult gout = gyoReduce(hout);
    if (!gout.acyclic) {
        std::vector<std::string> trace{"input:"};
        for (auto &s : renderTrace(hin, gin)) trace.push_back("  " + s);
        trace.push_back("output:");
        for (auto &s : renderTrace(hout, gout)) trace.push_back("  " + s);
        throw NotAcyclic("rewritten instance is not acyclic", trace);
    }
    return rw;
}

} // namespace acsp
