#include "acsp/error.hpp"
#include "acsp/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace acsp {

std::vector<WeightedEdge> relationalGraph(const Instance &inst) {
    Hypergraph h = buildHypergraph(inst);
    std::vector<WeightedEdge> out;
    for (int a = 0; a < int(h.edges.size()); ++a) {
        for (int b = a + 1; b < int(h.edges.size()); ++b) {
            std::vector<int> common;
            std::set_intersection(h.edges[a].begin(), h.edges[a].end(), h.edges[b].begin(),
                                  h.edges[b].end(), std::back_inserter(common));
            if (!common.empty()) out.push_back({a, b, int(common.size())});
        }
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace

bool hasConnectedness(const Instance &inst, const JoinForest &jf) {
    int n = inst.numConstraints();
    std::vector<std::vector<char>> has(n, std::vector<char>(inst.numVars(), 0));
    for (int c = 0; c < n; ++c) {
        for (int v : inst.constraints()[c].vars) has[c][v] = 1;
    }
    for (int v = 0; v < inst.numVars(); ++v) {
        int tops = 0, members = 0;
        for (int c = 0; c < n; ++c) {
            if (!has[c][v]) continue;
            ++members;
            int p = jf.parent[c];
            if (p < 0 || !has[p][v]) ++tops;
        }
        if (members > 0 && tops != 1) return false;
    }
    return true;
}

JoinForest joinForest(const Instance &inst) {
    requireAcyclic(inst, "instance");
    int n = inst.numConstraints();
    std::vector<WeightedEdge> g = relationalGraph(inst);
    std::stable_sort(g.begin(), g.end(), [](const WeightedEdge &x, const WeightedEdge &y) {
        if (x.w != y.w) return x.w > y.w;
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    UnionFind uf(n);
    std::vector<std::vector<int>> adj(n);
    for (const auto &e : g) {
        if (uf.unite(e.a, e.b)) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
    }
    JoinForest jf;
    jf.parent.assign(n, -1);
    jf.children.assign(n, {});
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        jf.roots.push_back(r);
        seen[r] = 1;
        size_t head = jf.order.size();
        jf.order.push_back(r);
        while (head < jf.order.size()) {
            int u = jf.order[head++];
            std::vector<int> nb = adj[u];
            std::sort(nb.begin(), nb.end());
            for (int w : nb) {
                if (seen[w]) continue;
                seen[w] = 1;
                jf.parent[w] = u;
                jf.children[u].push_back(w);
                jf.order.push_back(w);
            }
        }
    }
    if (!hasConnectedness(inst, jf))
        throw InternalError("join forest violates connectedness on an acyclic instance");
    return jf;
}

} // namespace acsp
