#include "acsp/circuit.hpp"
#include "acsp/error.hpp"
#include "acsp/gadgets.hpp"
#include "acsp/hypergraph.hpp"

#include <map>
#include <mutex>

namespace acsp {

namespace {

const char *typeName(GateType t) {
    switch (t) {
    case GateType::And: return "AND";
    case GateType::Or: return "OR";
    case GateType::Input: return "INPUT";
    }
    return "?";
}

std::string idOf(const json &j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    throw InputError("gate ids must be strings or integers");
}

} // namespace

void validateCircuit(const Circuit &c) {
    int n = int(c.gates.size());
    if (n == 0) throw InputError("circuit has no gates");
    if (c.root < 0 || c.root >= n) throw InputError("root is not a gate");
    std::vector<int> parents(n, 0);
    for (const auto &g : c.gates) {
        const std::string who = "gate " + g.id + ": ";
        if (g.level < 0) throw InputError(who + "negative level");
        switch (g.type) {
        case GateType::Input:
            if (!g.children.empty()) throw InputError(who + "input gates have no children");
            if (g.input < 0 || g.input >= c.inputs)
                throw InputError(who + "input index " + std::to_string(g.input) + " outside 0.." +
                                 std::to_string(c.inputs - 1));
            break;
        case GateType::And:
            if (g.children.size() != 2) throw InputError(who + "AND gates need exactly 2 children");
            break;
        case GateType::Or:
            if (g.children.empty()) throw InputError(who + "OR gates need at least one child");
            break;
        }
        if (g.type != GateType::Input && g.negated) throw InputError(who + "negation is only allowed on inputs");
        for (int ch : g.children) {
            if (ch < 0 || ch >= n) throw InputError(who + "unknown child");
            const Gate &k = c.gates[ch];
            ++parents[ch];
            if (k.type == GateType::Input) {
                if (k.level >= g.level) throw InputError(who + "input child " + k.id + " is not below its parent");
            } else {
                if (k.level != g.level - 1)
                    throw InputError(who + "child " + k.id + " is not exactly one level below (not leveled)");
                if (k.type == g.type)
                    throw InputError(who + "child " + k.id + " has the same type (levels must alternate)");
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (i == c.root && parents[i] != 0) throw InputError("the root has a parent");
        if (i != c.root && parents[i] != 1)
            throw InputError("gate " + c.gates[i].id + " has fan-out " + std::to_string(parents[i]) +
                             " (every non-root gate needs fan-out 1)");
    }
    // Fan-out 1 plus a parentless root: reachability from the root makes it a tree.
    std::vector<int> stack{c.root};
    int seen = 0;
    std::vector<bool> vis(n, false);
    while (!stack.empty()) {
        int g = stack.back();
        stack.pop_back();
        if (vis[g]) throw InputError("gate graph has a cycle");
        vis[g] = true;
        ++seen;
        for (int ch : c.gates[g].children) stack.push_back(ch);
    }
    if (seen != n) throw InputError("some gates are not reachable from the root");
}

Circuit circuitFromJson(const json &j) {
    if (!j.is_object() || !j.contains("inputs") || !j.contains("gates") || !j.contains("root"))
        throw InputError("circuit JSON needs \"inputs\", \"gates\" and \"root\"");
    Circuit c;
    if (!j["inputs"].is_number_integer() || j["inputs"].get<long>() < 0)
        throw InputError("\"inputs\" must be a non-negative integer");
    c.inputs = int(j["inputs"].get<long>());
    std::map<std::string, int> index;
    const json &gs = j["gates"];
    if (!gs.is_array()) throw InputError("\"gates\" must be an array");
    for (const auto &gj : gs) {
        if (!gj.is_object() || !gj.contains("id") || !gj.contains("type"))
            throw InputError("each gate needs \"id\" and \"type\"");
        Gate g;
        g.id = idOf(gj["id"]);
        if (index.count(g.id)) throw InputError("duplicate gate id " + g.id);
        index[g.id] = int(c.gates.size());
        std::string t = gj["type"].is_string() ? gj["type"].get<std::string>() : "";
        if (t == "AND") g.type = GateType::And;
        else if (t == "OR") g.type = GateType::Or;
        else if (t == "INPUT") g.type = GateType::Input;
        else throw InputError("gate " + g.id + ": type must be AND, OR or INPUT");
        if (gj.contains("level")) {
            if (!gj["level"].is_number_integer()) throw InputError("gate " + g.id + ": level must be an integer");
            g.level = int(gj["level"].get<long>());
        } else if (g.type != GateType::Input) {
            throw InputError("gate " + g.id + ": missing level");
        }
        if (gj.contains("negated")) {
            if (!gj["negated"].is_boolean()) throw InputError("gate " + g.id + ": negated must be a boolean");
            g.negated = gj["negated"].get<bool>();
        }
        if (g.type == GateType::Input) {
            if (!gj.contains("input") || !gj["input"].is_number_integer())
                throw InputError("gate " + g.id + ": input gates need an integer \"input\"");
            g.input = int(gj["input"].get<long>());
        }
        c.gates.push_back(g);
    }
    for (size_t i = 0; i < gs.size(); ++i) {
        if (!gs[i].contains("children")) continue;
        if (!gs[i]["children"].is_array()) throw InputError("gate " + c.gates[i].id + ": children must be an array");
        for (const auto &ch : gs[i]["children"]) {
            auto it = index.find(idOf(ch));
            if (it == index.end()) throw InputError("gate " + c.gates[i].id + ": unknown child " + idOf(ch));
            c.gates[i].children.push_back(it->second);
        }
    }
    auto r = index.find(idOf(j["root"]));
    if (r == index.end()) throw InputError("root " + idOf(j["root"]) + " is not a gate");
    c.root = r->second;
    validateCircuit(c);
    return c;
}

json circuitToJson(const Circuit &c) {
    json gs = json::array();
    for (const auto &g : c.gates) {
        json gj{{"id", g.id}, {"level", g.level}, {"type", typeName(g.type)}};
        if (g.type == GateType::Input) {
            gj["input"] = g.input;
            if (g.negated) gj["negated"] = true;
        } else {
            json ch = json::array();
            for (int k : g.children) ch.push_back(c.gates[k].id);
            gj["children"] = ch;
        }
        gs.push_back(gj);
    }
    return {{"inputs", c.inputs}, {"gates", gs}, {"root", c.gates[c.root].id}};
}

std::vector<uint8_t> parseBits(const std::string &s, int n) {
    if (int(s.size()) != n)
        throw InputError("input string has " + std::to_string(s.size()) + " bits, circuit has " + std::to_string(n) +
                         " inputs");
    std::vector<uint8_t> x;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw InputError("input string must consist of 0 and 1");
        x.push_back(uint8_t(ch - '0'));
    }
    return x;
}

namespace {

bool literal(const Gate &g, const std::vector<uint8_t> &x) { return bool(x[g.input]) != g.negated; }

mpz_class subtrees(const Circuit &c, int g, const std::vector<uint8_t> &x) {
    const Gate &gate = c.gates[g];
    switch (gate.type) {
    case GateType::Input: return literal(gate, x) ? 1 : 0;
    case GateType::And: return subtrees(c, gate.children[0], x) * subtrees(c, gate.children[1], x);
    case GateType::Or: {
        mpz_class s = 0;
        for (int ch : gate.children) s += subtrees(c, ch, x);
        return s;
    }
    }
    return 0;
}

} // namespace

namespace {

// OR relation of fan-in m >= 2 as a chain of [t = s + c] relations.
GadgetRealization orChain(int m, const FuncTable &target) {
    GadgetRealization r;
    r.name = "OR-chain" + std::to_string(m);
    r.target = target;
    r.k = m + 1;
    r.base.addVar("g");
    for (int i = 1; i <= m; ++i) r.base.addVar("c" + std::to_string(i));
    FuncTable step = catalog("G_ExactOneStep").target;
    int acc = 1;
    for (int i = 2; i <= m; ++i) {
        int out = i == m ? 0 : r.base.addVar("s" + std::to_string(i));
        r.base.add(step, std::vector<int>{acc, i, out});
        acc = out;
    }
    return r;
}

// Strict-mode gadgets are verified once per process.
void ensureVerified(const GadgetRealization &r) {
    static std::mutex mu;
    static std::map<std::string, bool> done;
    std::lock_guard<std::mutex> lock(mu);
    auto it = done.find(r.name);
    if (it == done.end()) it = done.emplace(r.name, verifyAny(r).ok()).first;
    if (!it->second) throw InternalError("strict-mode gadget " + r.name + " fails verification");
}

Rewrite rewriteWith(const Instance &inst, const FuncTable &f, const GadgetRealization &r) {
    ensureVerified(r);
    return rewriteInstance(inst, f, r, false);
}

} // namespace

mpz_class countSubtrees(const Circuit &c, const std::vector<uint8_t> &x) {
    if (int(x.size()) != c.inputs) throw InputError("input length does not match the circuit");
    return subtrees(c, c.root, x);
}

CompileMode compileModeFromName(const std::string &s) {
    if (s == "direct") return CompileMode::Direct;
    if (s == "strict") return CompileMode::Strict;
    throw InputError("unknown compile mode '" + s + "' (direct|strict)");
}

CompiledCircuit compileCircuit(const Circuit &c, const std::vector<uint8_t> &x, CompileMode mode) {
    validateCircuit(c);
    if (int(x.size()) != c.inputs) throw InputError("input length does not match the circuit");
    CompiledCircuit out;
    Instance &inst = out.instance;
    std::vector<int> var(c.gates.size());
    for (size_t g = 0; g < c.gates.size(); ++g) var[g] = inst.addVar("g:" + c.gates[g].id);
    std::map<int, FuncTable> orTables; // fan-in -> relation
    inst.add(fDelta1(), std::vector<int>{var[c.root]});
    for (size_t g = 0; g < c.gates.size(); ++g) {
        const Gate &gate = c.gates[g];
        std::vector<int> scope{var[g]};
        for (int ch : gate.children) scope.push_back(var[ch]);
        switch (gate.type) {
        case GateType::Input:
            if (!literal(gate, x)) inst.add(fDelta0(), scope);
            break;
        case GateType::And: inst.add(fEQ(3), scope); break;
        case GateType::Or: {
            int m = int(gate.children.size());
            if (mode == CompileMode::Direct && m > kDirectMaxFanIn)
                throw InputError("gate " + gate.id + ": OR fan-in " + std::to_string(m) +
                                 " exceeds the direct-mode limit of " + std::to_string(kDirectMaxFanIn));
            if (!orTables.count(m)) orTables.emplace(m, catalog("G_ORGate", {m}).target);
            inst.add(orTables.at(m), scope);
            break;
        }
        }
    }
    try {
        requireAcyclic(inst, "compiled circuit");
        if (mode == CompileMode::Strict) {
            auto apply = [&](const FuncTable &f, const GadgetRealization &r) {
                Rewrite s = rewriteWith(out.instance, f, r);
                out.instance = std::move(s.instance);
                out.scalar *= s.scalar;
            };
            apply(fEQ(3), catalog("G_EQ3FromXOR"));
            for (const auto &[m, table] : orTables) {
                if (m == 1) apply(table, catalog("G_ORGate", {1}));
                else apply(table, orChain(m, table));
            }
            GadgetRealization step = catalog("G_ExactOneStep");
            apply(step.target, step);
            for (const auto &con : out.instance.constraints()) {
                const FuncTable &f = *con.f;
                if (f != fOR(3) && f != fOR(2) && f != fXOR() && f != fU0() && f != fDelta0() && f != fDelta1())
                    throw InternalError("strict compilation left a constraint outside the signature: " + f.str());
            }
            requireAcyclic(out.instance, "strict compiled circuit");
        }
    } catch (const NotAcyclic &e) {
        std::string msg = std::string("circuit compiler produced a cyclic instance: ") + e.what();
        for (const auto &l : e.trace()) msg += "\n" + l;
        throw InternalError(msg);
    }
    return out;
}

} // namespace acsp
