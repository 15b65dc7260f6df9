#pragma once

#include "acsp/func_table.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace acsp {

using Names = std::vector<std::string>;

struct Constraint {
    std::shared_ptr<const FuncTable> f;
    std::vector<int> vars; // indices into Instance::vars, one per argument
    std::string fname;     // name under which f was declared, may be empty
    bool linked = false;   // repeated variables allowed only when set

    // Distinct variables in first-occurrence order.
    std::vector<int> scope() const;
};

// A counting CSP instance: named Boolean variables and weighted constraints.
class Instance {
public:
    int addVar(const std::string &name);
    // Index of a variable, adding it when missing.
    int var(const std::string &name);
    int findVar(const std::string &name) const; // -1 when absent
    int numVars() const { return int(names_.size()); }
    const std::string &varName(int v) const { return names_.at(v); }
    const std::vector<std::string> &varNames() const { return names_; }

    void add(std::shared_ptr<const FuncTable> f, std::vector<int> vars, std::string fname = "",
             bool linked = false);
    void add(const FuncTable &f, std::vector<int> vars, std::string fname = "", bool linked = false) {
        add(std::make_shared<const FuncTable>(f), std::move(vars), std::move(fname), linked);
    }
    void add(const FuncTable &f, const std::vector<std::string> &vars, std::string fname = "");

    const std::vector<Constraint> &constraints() const { return cons_; }
    std::vector<Constraint> &constraints() { return cons_; }
    int numConstraints() const { return int(cons_.size()); }

    // Every distinct function table used, in first-use order.
    std::vector<std::shared_ptr<const FuncTable>> functionSet() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<Constraint> cons_;
};

} // namespace acsp
