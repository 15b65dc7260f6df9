#include "acsp/engine.hpp"
#include "acsp/error.hpp"

#include <algorithm>

namespace acsp {

namespace {

struct NodeInfo {
    std::vector<int> scope;          // distinct vars
    std::vector<int> argPos;         // for each argument, its position in scope
    std::vector<ComplexRat> table;   // DP table over local assignments of scope
    std::vector<int> sepInParent;    // positions in parent scope of the shared vars
    std::vector<int> sepInSelf;      // the same vars, positions in own scope
};

size_t project(size_t local, int width, const std::vector<int> &positions) {
    size_t out = 0;
    for (int p : positions) out = (out << 1) | ((local >> (width - 1 - p)) & 1u);
    return out;
}

ComplexRat evalLocal(const Constraint &c, const NodeInfo &n, size_t local) {
    int w = int(n.scope.size());
    size_t idx = 0;
    for (int p : n.argPos) idx = (idx << 1) | ((local >> (w - 1 - p)) & 1u);
    return c.f->at(idx);
}

std::vector<NodeInfo> prepare(const Instance &inst, const JoinForest &jf, const CountOptions &opt) {
    std::vector<NodeInfo> nodes(inst.numConstraints());
    for (int c = 0; c < inst.numConstraints(); ++c) {
        const auto &con = inst.constraints()[c];
        NodeInfo &n = nodes[c];
        n.scope = con.scope();
        if (int(n.scope.size()) > opt.maxDpArity)
            throw InputError("constraint #" + std::to_string(c) + " has " + std::to_string(n.scope.size()) +
                             " variables, above the DP cap of " + std::to_string(opt.maxDpArity));
        for (int v : con.vars)
            n.argPos.push_back(int(std::find(n.scope.begin(), n.scope.end(), v) - n.scope.begin()));
    }
    for (int c = 0; c < inst.numConstraints(); ++c) {
        int p = jf.parent[c];
        if (p < 0) continue;
        for (int i = 0; i < int(nodes[c].scope.size()); ++i) {
            int v = nodes[c].scope[i];
            auto it = std::find(nodes[p].scope.begin(), nodes[p].scope.end(), v);
            if (it != nodes[p].scope.end()) {
                nodes[c].sepInSelf.push_back(i);
                nodes[c].sepInParent.push_back(int(it - nodes[p].scope.begin()));
            }
        }
    }
    return nodes;
}

int countFree(const Instance &inst) {
    std::vector<char> used(inst.numVars(), 0);
    for (const auto &c : inst.constraints()) {
        for (int v : c.vars) used[v] = 1;
    }
    return int(std::count(used.begin(), used.end(), 0));
}

} // namespace

CountResult countJoinTree(const Instance &inst, const CountOptions &opt) {
    JoinForest jf = joinForest(inst);
    std::vector<NodeInfo> nodes = prepare(inst, jf, opt);
    CountResult r;
    r.method = CountMethod::JoinTree;

    // Post-order: reverse of the parents-first order.
    for (auto it = jf.order.rbegin(); it != jf.order.rend(); ++it) {
        int c = *it;
        NodeInfo &n = nodes[c];
        int w = int(n.scope.size());
        n.table.assign(size_t(1) << w, ComplexRat(0));
        std::vector<std::vector<ComplexRat>> msgs;
        for (int ch : jf.children[c]) {
            NodeInfo &cn = nodes[ch];
            std::vector<ComplexRat> msg(size_t(1) << cn.sepInSelf.size(), ComplexRat(0));
            int cw = int(cn.scope.size());
            for (size_t l = 0; l < cn.table.size(); ++l) {
                if (!cn.table[l].isZero()) msg[project(l, cw, cn.sepInSelf)] += cn.table[l];
            }
            cn.table.clear();
            cn.table.shrink_to_fit();
            msgs.push_back(std::move(msg));
        }
        for (size_t l = 0; l < n.table.size(); ++l) {
            ComplexRat v = evalLocal(inst.constraints()[c], n, l);
            for (size_t k = 0; k < msgs.size() && !v.isZero(); ++k)
                v *= msgs[k][project(l, w, nodes[jf.children[c][k]].sepInParent)];
            n.table[l] = std::move(v);
        }
        r.nodesVisited += n.table.size();
        r.maxTable = std::max<uint64_t>(r.maxTable, n.table.size());
        if (opt.explain) {
            std::string s = "node " + std::to_string(c) + " table " + std::to_string(n.table.size());
            if (jf.parent[c] >= 0) s += " -> parent " + std::to_string(jf.parent[c]);
            r.trace.push_back(s);
        }
    }

    ComplexRat total(1);
    for (int root : jf.roots) {
        ComplexRat t(0);
        for (const auto &v : nodes[root].table) t += v;
        total *= t;
    }
    r.components = int(jf.roots.size());
    r.freeVars = countFree(inst);
    total *= ComplexRat(mpq_class(mpz_class(1) << r.freeVars));
    r.value = total;
    return r;
}

std::optional<Witness> extractWitness(const Instance &inst) {
    JoinForest jf = joinForest(inst);
    CountOptions opt;
    std::vector<NodeInfo> nodes = prepare(inst, jf, opt);
    // Feasibility DP: ok[c][l] iff local assignment l of c is nonzero and
    // every child has an agreeing feasible entry.
    std::vector<std::vector<char>> ok(nodes.size());
    std::vector<std::vector<char>> msgOk(nodes.size());
    for (auto it = jf.order.rbegin(); it != jf.order.rend(); ++it) {
        int c = *it;
        NodeInfo &n = nodes[c];
        int w = int(n.scope.size());
        ok[c].assign(size_t(1) << w, 0);
        for (size_t l = 0; l < ok[c].size(); ++l) {
            if (evalLocal(inst.constraints()[c], n, l).isZero()) continue;
            bool good = true;
            for (int ch : jf.children[c])
                good = good && msgOk[ch][project(l, w, nodes[ch].sepInParent)];
            ok[c][l] = good;
        }
        msgOk[c].assign(size_t(1) << n.sepInSelf.size(), 0);
        for (size_t l = 0; l < ok[c].size(); ++l) {
            if (ok[c][l]) msgOk[c][project(l, w, n.sepInSelf)] = 1;
        }
    }
    Witness wit;
    wit.local.resize(nodes.size());
    std::vector<size_t> chosen(nodes.size(), 0);
    for (int c : jf.order) {
        NodeInfo &n = nodes[c];
        int w = int(n.scope.size());
        int p = jf.parent[c];
        size_t want = p < 0 ? 0 : project(chosen[p], int(nodes[p].scope.size()), n.sepInParent);
        bool found = false;
        for (size_t l = 0; l < ok[c].size() && !found; ++l) {
            if (ok[c][l] && (p < 0 || project(l, w, n.sepInSelf) == want)) {
                chosen[c] = l;
                found = true;
            }
        }
        if (!found) return std::nullopt;
        for (int i = 0; i < w; ++i) wit.local[c].push_back(uint8_t((chosen[c] >> (w - 1 - i)) & 1u));
    }
    wit.forest = std::move(jf);
    return wit;
}

} // namespace acsp
