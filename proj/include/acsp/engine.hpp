#pragma once

#include "acsp/hypergraph.hpp"
#include "acsp/instance.hpp"
#include "acsp/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acsp {

enum class CountMethod { Auto, Brute, JoinTree, EDPath };

std::string methodName(CountMethod m);
CountMethod methodFromName(const std::string &s); // auto|brute|jointree|ed

struct CountOptions {
    int bruteLimit = 24;  // max variables for exhaustive enumeration
    int maxDpArity = 16;  // max distinct variables in one constraint for the DP
    bool explain = false; // collect a human-readable trace
};

struct CountResult {
    ComplexRat value;
    CountMethod method = CountMethod::Brute;
    uint64_t nodesVisited = 0; // assignments (brute) or table entries (DP)
    uint64_t maxTable = 0;     // largest DP table
    int components = 0;
    int freeVars = 0;
    std::vector<std::string> trace; // filled when explain is set

    json statsJson() const;
    json toJson() const; // {"count":[re,im],"method":...,"stats":...}
};

// Sum over all 2^n assignments of the product of constraint values.
CountResult countBrute(const Instance &inst, const CountOptions &opt = {});
// Bottom-up dynamic program over the join forest.
CountResult countJoinTree(const Instance &inst, const CountOptions &opt = {});
// Parity propagation for instances made of EQ2/XOR-shaped binaries, unaries
// and scalars. Throws InputError naming the first constraint it cannot take.
CountResult countEDPath(const Instance &inst, const CountOptions &opt = {});
// Whether countEDPath accepts every constraint of inst (acyclicity aside).
bool edPathApplicable(const Instance &inst);
// Auto picks the ED path when applicable and the join tree otherwise.
CountResult count(const Instance &inst, CountMethod m, const CountOptions &opt = {});

// One local assignment per constraint (bits over Constraint::scope()), all
// with nonzero value and agreeing on shared variables. nullopt when no such
// family exists. Requires an acyclic instance.
struct Witness {
    JoinForest forest;
    std::vector<std::vector<uint8_t>> local;
};
std::optional<Witness> extractWitness(const Instance &inst);

} // namespace acsp
