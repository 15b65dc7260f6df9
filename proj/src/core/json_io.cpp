#include "acsp/json_io.hpp"

#include "acsp/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace acsp {

namespace {

std::string partText(const json &j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
    throw InputError("weight parts must be strings or integers, got " + j.dump());
}

const json &field(const json &j, const char *key, const std::string &ctx) {
    if (!j.is_object() || !j.contains(key)) throw InputError(ctx + ": missing \"" + key + "\"");
    return j.at(key);
}

int arityField(const json &j, const std::string &ctx) {
    const json &a = field(j, "arity", ctx);
    if (!a.is_number_integer()) throw InputError(ctx + ": arity must be an integer");
    return a.get<int>();
}

} // namespace

json complexToJson(const ComplexRat &c) { return json::array({c.re().get_str(), c.im().get_str()}); }

ComplexRat complexFromJson(const json &j) {
    if (j.is_array()) {
        if (j.size() != 2) throw InputError("complex weight must be [re, im], got " + j.dump());
        return ComplexRat::parse(partText(j[0]), partText(j[1]));
    }
    return ComplexRat::parse(partText(j));
}

FuncTable funcFromJson(const json &j) {
    const std::string ctx = "function";
    if (!j.is_object()) throw InputError("function must be a JSON object, got " + j.dump());
    if (j.contains("builtin")) {
        if (!j["builtin"].is_string()) throw InputError(ctx + ": builtin must be a string");
        return builtin(j["builtin"].get<std::string>(), arityField(j, ctx));
    }
    int k = arityField(j, ctx);
    if (k < 0 || k > kMaxTableArity) throw InputError(ctx + ": arity out of range");
    if (j.contains("table")) {
        const json &t = j["table"];
        if (!t.is_array()) throw InputError(ctx + ": table must be an array");
        std::vector<ComplexRat> vals;
        for (const auto &v : t) vals.push_back(complexFromJson(v));
        return FuncTable(k, std::move(vals));
    }
    if (j.contains("sym")) {
        const json &s = j["sym"];
        if (!s.is_array()) throw InputError(ctx + ": sym must be an array");
        SymTable st;
        for (const auto &v : s) st.w.push_back(complexFromJson(v));
        if (st.arity() != k)
            throw InputError(ctx + ": sym of arity " + std::to_string(k) + " needs " +
                             std::to_string(k + 1) + " weights, got " + std::to_string(st.w.size()));
        return st.toTable();
    }
    throw InputError(ctx + ": needs one of \"table\", \"sym\", \"builtin\"");
}

json funcToJson(const FuncTable &f) {
    json t = json::array();
    for (const auto &v : f.values()) t.push_back(complexToJson(v));
    return json{{"arity", f.arity()}, {"table", t}};
}

Instance instanceFromJson(const json &j) {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    Instance inst;
    bool declared = j.contains("variables");
    if (declared) {
        if (!j["variables"].is_array()) throw InputError("\"variables\" must be an array");
        for (const auto &v : j["variables"]) {
            if (!v.is_string()) throw InputError("variable names must be strings");
            inst.addVar(v.get<std::string>());
        }
    }
    std::map<std::string, std::shared_ptr<const FuncTable>> named;
    if (j.contains("functions")) {
        if (!j["functions"].is_object()) throw InputError("\"functions\" must be an object");
        for (const auto &[name, fj] : j["functions"].items()) {
            try {
                named[name] = std::make_shared<const FuncTable>(funcFromJson(fj));
            } catch (const InputError &e) {
                throw InputError("function '" + name + "': " + e.what());
            }
        }
    }
    if (!j.contains("constraints") || !j["constraints"].is_array())
        throw InputError("instance needs a \"constraints\" array");
    int idx = 0;
    for (const auto &c : j["constraints"]) {
        std::string ctx = "constraint #" + std::to_string(idx++);
        const json &vj = field(c, "vars", ctx);
        if (!vj.is_array()) throw InputError(ctx + ": vars must be an array");
        std::vector<int> vars;
        for (const auto &v : vj) {
            if (!v.is_string()) throw InputError(ctx + ": variable names must be strings");
            std::string n = v.get<std::string>();
            int id = inst.findVar(n);
            if (id < 0) {
                if (declared) throw InputError(ctx + ": undeclared variable '" + n + "'");
                id = inst.addVar(n);
            }
            vars.push_back(id);
        }
        const json &fj = field(c, "f", ctx);
        std::shared_ptr<const FuncTable> f;
        std::string fname;
        try {
            if (fj.is_string()) {
                fname = fj.get<std::string>();
                auto it = named.find(fname);
                f = it != named.end() ? it->second
                                      : std::make_shared<const FuncTable>(builtin(fname, int(vars.size())));
            } else {
                f = std::make_shared<const FuncTable>(funcFromJson(fj));
            }
        } catch (const InputError &e) {
            throw InputError(ctx + ": " + e.what());
        }
        bool linked = c.contains("linked") && c["linked"].is_boolean() && c["linked"].get<bool>();
        try {
            inst.add(f, vars, fname, linked);
        } catch (const InputError &e) {
            throw InputError(ctx + ": " + e.what());
        }
    }
    return inst;
}

json instanceToJson(const Instance &inst) {
    json out;
    out["variables"] = inst.varNames();
    // Name each distinct table after its builtin when it has one.
    std::vector<std::pair<std::shared_ptr<const FuncTable>, std::string>> names;
    json funcs = json::object();
    json cons = json::array();
    for (const auto &c : inst.constraints()) {
        std::string name;
        for (const auto &[g, n] : names) {
            if (*g == *c.f) name = n;
        }
        if (name.empty()) {
            auto b = builtinName(*c.f);
            name = b ? *b : "f" + std::to_string(names.size());
            while (funcs.contains(name)) name += "_";
            names.emplace_back(c.f, name);
            funcs[name] = funcToJson(*c.f);
        }
        json vars = json::array();
        for (int v : c.vars) vars.push_back(inst.varName(v));
        json cj{{"f", name}, {"vars", vars}};
        if (c.linked) cj["linked"] = true;
        cons.push_back(cj);
    }
    out["functions"] = funcs;
    out["constraints"] = cons;
    return out;
}

std::vector<FuncTable> functionsFromJson(const json &j) {
    std::vector<FuncTable> out;
    const json *list = &j;
    if (j.is_object()) {
        if (!j.contains("functions")) throw InputError("expected a \"functions\" list");
        list = &j["functions"];
    }
    if (list->is_array()) {
        for (const auto &f : *list) out.push_back(funcFromJson(f));
    } else if (list->is_object()) {
        for (const auto &[name, f] : list->items()) {
            try {
                out.push_back(funcFromJson(f));
            } catch (const InputError &e) {
                throw InputError("function '" + name + "': " + e.what());
            }
        }
    } else {
        throw InputError("functions must be an array or an object");
    }
    return out;
}

json readJsonFile(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error &e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace acsp
