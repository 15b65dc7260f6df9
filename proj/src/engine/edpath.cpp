#include "acsp/engine.hpp"
#include "acsp/error.hpp"

#include <optional>

namespace acsp {

namespace {

// Reason the parity propagation cannot take a constraint, if any.
std::optional<std::string> whyNot(const Constraint &c) {
    if (c.linked) return "linked constraint";
    int k = c.f->arity();
    if (k <= 1) return std::nullopt;
    if (k > 2) return "arity " + std::to_string(k);
    const auto &t = c.f->values();
    bool diag = t[1].isZero() && t[2].isZero();
    bool anti = t[0].isZero() && t[3].isZero();
    if (!diag && !anti) return "binary table " + c.f->str() + " is neither diagonal nor anti-diagonal";
    return std::nullopt;
}

} // namespace

bool edPathApplicable(const Instance &inst) {
    for (const auto &c : inst.constraints()) {
        if (whyNot(c)) return false;
    }
    return true;
}

CountResult countEDPath(const Instance &inst, const CountOptions &opt) {
    for (int i = 0; i < inst.numConstraints(); ++i) {
        if (auto why = whyNot(inst.constraints()[i]))
            throw InputError("ED path refuses constraint #" + std::to_string(i) + ": " + *why);
    }
    requireAcyclic(inst, "instance");

    int n = inst.numVars();
    std::vector<ComplexRat> w0(n, ComplexRat(1)), w1(n, ComplexRat(1));
    ComplexRat scalar(1);
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbour, parity)
    std::vector<char> used(n, 0);
    for (const auto &c : inst.constraints()) {
        for (int v : c.vars) used[v] = 1;
        const auto &t = c.f->values();
        switch (c.f->arity()) {
        case 0: scalar *= t[0]; break;
        case 1:
            w0[c.vars[0]] *= t[0];
            w1[c.vars[0]] *= t[1];
            break;
        default: {
            int u = c.vars[0], v = c.vars[1];
            bool diag = t[1].isZero() && t[2].isZero();
            int parity = diag ? 0 : 1;
            // Weight of the surviving rows, charged to u's value.
            w0[u] *= diag ? t[0] : t[1];
            w1[u] *= diag ? t[3] : t[2];
            adj[u].push_back({v, parity});
            adj[v].push_back({u, parity});
        }
        }
    }

    CountResult r;
    r.method = CountMethod::EDPath;
    std::vector<int> label(n, -1);
    ComplexRat total = scalar;
    for (int root = 0; root < n; ++root) {
        if (label[root] >= 0) continue;
        ++r.components;
        if (!used[root]) ++r.freeVars;
        std::vector<int> comp{root};
        label[root] = 0;
        bool consistent = true;
        for (size_t h = 0; h < comp.size(); ++h) {
            int u = comp[h];
            for (auto [v, p] : adj[u]) {
                int want = label[u] ^ p;
                if (label[v] < 0) {
                    label[v] = want;
                    comp.push_back(v);
                } else if (label[v] != want) {
                    consistent = false;
                }
            }
        }
        r.nodesVisited += comp.size() * 2;
        ComplexRat sum(0);
        if (consistent) {
            for (int rv = 0; rv <= 1; ++rv) {
                ComplexRat prod(1);
                for (int v : comp) {
                    prod *= (rv ^ label[v]) ? w1[v] : w0[v];
                    if (prod.isZero()) break;
                }
                sum += prod;
            }
        }
        if (opt.explain)
            r.trace.push_back("component rooted at " + inst.varName(root) + ": " + std::to_string(comp.size()) +
                              " variables" + (consistent ? "" : ", inconsistent parities") + ", sum " +
                              sum.str());
        total *= sum;
    }
    r.value = total;
    return r;
}

} // namespace acsp
