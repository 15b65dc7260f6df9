#include "acsp/cnf2.hpp"
#include "acsp/error.hpp"
#include "acsp/gadgets.hpp"
#include "acsp/hypergraph.hpp"

#include <sstream>

namespace acsp {

CNF2 parse2CNF(const std::string &text) {
    CNF2 phi;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    long declared = 0;
    std::vector<int> pending;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c' || tok == "%") continue;
        if (tok == "p") {
            std::string fmt;
            long n = -1, m = -1;
            if (header || !(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
                throw InputError("line " + std::to_string(lineNo) + ": bad problem line");
            phi.numVars = int(n);
            declared = m;
            header = true;
            continue;
        }
        if (!header) throw InputError("line " + std::to_string(lineNo) + ": clause before the problem line");
        ls.clear();
        ls.str(line);
        while (ls >> tok) {
            long lit = 0;
            size_t used = 0;
            try {
                lit = std::stol(tok, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != tok.size()) throw InputError("line " + std::to_string(lineNo) + ": bad literal '" + tok + "'");
            if (lit == 0) {
                if (pending.empty()) throw InputError("line " + std::to_string(lineNo) + ": empty clause");
                if (pending.size() > 2)
                    throw InputError("line " + std::to_string(lineNo) + ": clause with " +
                                     std::to_string(pending.size()) + " literals (only 2CNF is supported)");
                phi.clauses.push_back({pending[0], pending.size() == 2 ? pending[1] : pending[0]});
                pending.clear();
                continue;
            }
            if (std::labs(lit) > phi.numVars)
                throw InputError("line " + std::to_string(lineNo) + ": variable " + std::to_string(std::labs(lit)) +
                                 " exceeds the declared " + std::to_string(phi.numVars));
            pending.push_back(int(lit));
        }
    }
    if (!header) throw InputError("missing problem line");
    if (!pending.empty()) throw InputError("last clause is not terminated by 0");
    if (long(phi.clauses.size()) != declared)
        throw InputError("problem line declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(phi.clauses.size()));
    return phi;
}

std::string writeDimacs(const CNF2 &phi) {
    std::ostringstream out;
    out << "p cnf " << phi.numVars << ' ' << phi.clauses.size() << '\n';
    for (const auto &c : phi.clauses) out << c[0] << ' ' << c[1] << " 0\n";
    return out.str();
}

Instance cnfToInstance(const CNF2 &phi) {
    Instance inst;
    for (int v = 1; v <= phi.numVars; ++v) inst.addVar("x" + std::to_string(v));
    for (const auto &c : phi.clauses) {
        int a = std::abs(c[0]) - 1, b = std::abs(c[1]) - 1;
        bool pa = c[0] > 0, pb = c[1] > 0;
        if (a == b) {
            if (pa && pb) inst.add(fDelta1(), std::vector<int>{a});
            else if (!pa && !pb) inst.add(fDelta0(), std::vector<int>{a});
            else inst.add(FuncTable::unary(1, 1), std::vector<int>{a});
        } else if (pa && pb) {
            inst.add(fOR(2), std::vector<int>{a, b});
        } else if (!pa && pb) {
            inst.add(fImplies(), std::vector<int>{a, b});
        } else if (pa && !pb) {
            inst.add(fImplies(), std::vector<int>{b, a});
        } else {
            inst.add(fNAND(2), std::vector<int>{a, b});
        }
    }
    return inst;
}

CountResult count2SAT(const CNF2 &phi, CountMethod m, const CountOptions &opt) {
    Instance inst = cnfToInstance(phi);
    if (m != CountMethod::Brute) requireAcyclic(inst, "2CNF formula");
    return count(inst, m, opt);
}

Translated translateToImplies(const Instance &inst) {
    for (const auto &c : inst.constraints()) {
        const FuncTable &f = *c.f;
        if (f.arity() == 1) continue;
        if (f != fOR(2) && f != fNAND(2) && f != fImplies())
            throw InputError("translateToImplies accepts only OR2, NAND2, Implies and unaries; found " + f.str());
    }
    Translated t;
    Rewrite a = rewriteInstance(inst, fOR(2), catalog("G_ORkFromImplies", {2}));
    Rewrite b = rewriteInstance(a.instance, fNAND(2), catalog("G_NANDkFromImplies", {2}));
    t.instance = std::move(b.instance);
    t.scalar = a.scalar * b.scalar;
    return t;
}

CNF2 impliesTo2CNF(const Instance &inst) {
    CNF2 phi;
    phi.numVars = inst.numVars();
    for (const auto &c : inst.constraints()) {
        const FuncTable &f = *c.f;
        if (f == fImplies()) {
            int u = c.vars[0] + 1, v = c.vars[1] + 1;
            phi.clauses.push_back({-u, v});
            continue;
        }
        if (f.arity() == 1) {
            int u = c.vars[0] + 1;
            bool z0 = f.at(size_t(0)).isZero(), z1 = f.at(size_t(1)).isZero();
            bool o0 = f.at(size_t(0)).isOne(), o1 = f.at(size_t(1)).isOne();
            if ((z0 || o0) && (z1 || o1)) {
                if (z0 && z1) {
                    phi.clauses.push_back({u, u});
                    phi.clauses.push_back({-u, -u});
                } else if (z0) {
                    phi.clauses.push_back({u, u});
                } else if (z1) {
                    phi.clauses.push_back({-u, -u});
                } else {
                    phi.clauses.push_back({u, -u});
                }
                continue;
            }
        }
        throw InputError("impliesTo2CNF accepts only Implies and 0/1 unaries; found " + f.str());
    }
    return phi;
}

} // namespace acsp
