#pragma once
// Random semi-unbounded tree circuits and an exhaustive accepting-subtree
// counter, shared by the unit tests and the acceptance binary.

#include "acsp/circuit.hpp"
#include "oracles.hpp"

#include <functional>

namespace oracle {

inline acsp::Circuit randomCircuit(Rng &rng, int maxGates, int maxDepth, int maxOrFanIn = 4) {
    using acsp::Circuit;
    using acsp::Gate;
    using acsp::GateType;
    for (;;) {
        Circuit c;
        c.inputs = uniform(rng, 1, 4);
        auto leaf = [&](int level) {
            Gate g;
            g.type = GateType::Input;
            g.level = level;
            g.input = uniform(rng, 0, c.inputs - 1);
            g.negated = coin(rng, 0.3);
            g.id = std::to_string(c.gates.size());
            c.gates.push_back(g);
            return int(c.gates.size()) - 1;
        };
        std::function<int(GateType, int)> make = [&](GateType t, int level) -> int {
            int idx = int(c.gates.size());
            Gate g;
            g.type = t;
            g.level = level;
            g.id = std::to_string(idx);
            c.gates.push_back(g);
            int m = t == GateType::And ? 2 : uniform(rng, 1, maxOrFanIn);
            std::vector<int> ch;
            for (int i = 0; i < m; ++i) {
                if (level == 1 || coin(rng, 0.35)) ch.push_back(leaf(uniform(rng, 0, level - 1)));
                else ch.push_back(make(t == GateType::And ? GateType::Or : GateType::And, level - 1));
            }
            c.gates[idx].children = ch;
            return idx;
        };
        int depth = uniform(rng, 1, maxDepth);
        c.root = make(coin(rng) ? GateType::And : GateType::Or, depth);
        if (int(c.gates.size()) <= maxGates) return c;
    }
}

inline std::vector<uint8_t> randomBits(Rng &rng, int n) {
    std::vector<uint8_t> x(n);
    for (auto &b : x) b = uint8_t(coin(rng));
    return x;
}

// Subsets of gates that contain the root, are closed under parents, take
// both children of an AND, exactly one child of an OR, and only true inputs.
inline long enumerateSubtrees(const acsp::Circuit &c, const std::vector<uint8_t> &x) {
    int n = int(c.gates.size());
    std::vector<int> parent(n, -1);
    for (int g = 0; g < n; ++g)
        for (int ch : c.gates[g].children) parent[ch] = g;
    long total = 0;
    for (uint64_t s = 0; s < (uint64_t(1) << n); ++s) {
        auto in = [&](int g) { return bool((s >> g) & 1u); };
        if (!in(c.root)) continue;
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) {
            if (!in(g)) continue;
            const auto &gate = c.gates[g];
            if (g != c.root && !in(parent[g])) ok = false;
            int k = 0;
            for (int ch : gate.children) k += in(ch);
            if (gate.type == acsp::GateType::And && k != 2) ok = false;
            if (gate.type == acsp::GateType::Or && k != 1) ok = false;
            if (gate.type == acsp::GateType::Input && bool(x[gate.input]) == gate.negated) ok = false;
        }
        total += ok;
    }
    return total;
}

} // namespace oracle
