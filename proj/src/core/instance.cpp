#include "acsp/instance.hpp"

#include "acsp/error.hpp"

#include <algorithm>
#include <set>

namespace acsp {

std::vector<int> Constraint::scope() const {
    std::vector<int> out;
    for (int v : vars) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

int Instance::addVar(const std::string &name) {
    if (name.empty()) throw InputError("variable name must be non-empty");
    if (index_.count(name)) throw InputError("duplicate variable '" + name + "'");
    int id = int(names_.size());
    names_.push_back(name);
    index_[name] = id;
    return id;
}

int Instance::var(const std::string &name) {
    auto it = index_.find(name);
    return it != index_.end() ? it->second : addVar(name);
}

int Instance::findVar(const std::string &name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

void Instance::add(std::shared_ptr<const FuncTable> f, std::vector<int> vars, std::string fname,
                   bool linked) {
    if (!f) throw InputError("constraint without a function");
    if (int(vars.size()) != f->arity())
        throw InputError("constraint" + (fname.empty() ? "" : " on " + fname) + " lists " +
                         std::to_string(vars.size()) + " variables but the function has arity " +
                         std::to_string(f->arity()));
    for (int v : vars) {
        if (v < 0 || v >= numVars()) throw InputError("constraint refers to an unknown variable");
    }
    std::set<int> distinct(vars.begin(), vars.end());
    if (distinct.size() != vars.size() && !linked)
        throw InputError("constraint" + (fname.empty() ? "" : " on " + fname) +
                         " repeats a variable; mark it linked to allow this");
    cons_.push_back(Constraint{std::move(f), std::move(vars), std::move(fname), linked});
}

void Instance::add(const FuncTable &f, const std::vector<std::string> &vars, std::string fname) {
    std::vector<int> ids;
    for (const auto &n : vars) ids.push_back(var(n));
    add(f, std::move(ids), std::move(fname));
}

std::vector<std::shared_ptr<const FuncTable>> Instance::functionSet() const {
    std::vector<std::shared_ptr<const FuncTable>> out;
    for (const auto &c : cons_) {
        bool seen = std::any_of(out.begin(), out.end(), [&](const auto &g) { return *g == *c.f; });
        if (!seen) out.push_back(c.f);
    }
    return out;
}

} // namespace acsp
