#include "acsp/engine.hpp"
#include "acsp/error.hpp"

#include <algorithm>

namespace acsp {

namespace {

struct Dfs {
    const Instance &inst;
    // Constraints whose highest variable index is d get evaluated at depth d.
    std::vector<std::vector<int>> readyAt;
    std::vector<int> scalars;
    std::vector<uint8_t> x;
    ComplexRat total;
    uint64_t visited = 0;

    void run(int d, const ComplexRat &acc) {
        int n = inst.numVars();
        if (d == n) {
            ++visited;
            total += acc;
            return;
        }
        for (uint8_t b = 0; b <= 1; ++b) {
            x[d] = b;
            ComplexRat w = acc;
            for (int c : readyAt[d]) {
                const auto &con = inst.constraints()[c];
                size_t idx = 0;
                for (int v : con.vars) idx = (idx << 1) | x[v];
                w *= con.f->at(idx);
                if (w.isZero()) break;
            }
            if (w.isZero()) {
                ++visited;
                continue;
            }
            run(d + 1, w);
        }
    }
};

} // namespace

CountResult countBrute(const Instance &inst, const CountOptions &opt) {
    int n = inst.numVars();
    if (n > opt.bruteLimit)
        throw InputError("brute force refused: " + std::to_string(n) + " variables exceed the limit of " +
                         std::to_string(opt.bruteLimit));
    Dfs dfs{inst, std::vector<std::vector<int>>(n), {}, std::vector<uint8_t>(n, 0), ComplexRat(0)};
    ComplexRat start(1);
    for (int c = 0; c < inst.numConstraints(); ++c) {
        const auto &con = inst.constraints()[c];
        if (con.vars.empty()) {
            start *= con.f->at(0);
            continue;
        }
        int hi = 0;
        for (int v : con.vars) hi = std::max(hi, v);
        dfs.readyAt[hi].push_back(c);
    }
    CountResult r;
    r.method = CountMethod::Brute;
    if (!start.isZero()) dfs.run(0, start);
    r.value = dfs.total;
    r.nodesVisited = dfs.visited;
    if (opt.explain)
        r.trace.push_back("enumerated " + std::to_string(n) + " variables, " + std::to_string(dfs.visited) +
                          " leaves or pruned branches");
    return r;
}

} // namespace acsp
