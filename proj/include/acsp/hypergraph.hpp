#pragma once

#include "acsp/instance.hpp"
#include "acsp/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace acsp {

// One edge per constraint, holding the sorted distinct variables of its scope.
struct Hypergraph {
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> edges;
};

Hypergraph buildHypergraph(const Instance &inst);

struct GyoStep {
    enum Kind { RemoveVertex, RemoveEdge } kind;
    int vertex = -1;      // RemoveVertex
    int edge = -1;        // RemoveEdge, or the edge that held the vertex (-1 if none)
    int containedIn = -1; // RemoveEdge: a surviving superset edge, -1 for an empty edge
};

struct GyoResult {
    bool acyclic = false;
    std::vector<GyoStep> trace;
    std::vector<int> residualEdges; // edge ids left when no rule applies
};

// Which applicable rule fires next. The verdict does not depend on it.
struct GyoPolicy {
    bool edgesFirst = false; // prefer edge removals over vertex removals
    uint64_t seed = 0;       // nonzero: pick uniformly among applicable actions
};

GyoResult gyoReduce(const Hypergraph &h, const GyoPolicy &policy = {});
bool isAcyclic(const Hypergraph &h);
bool isAcyclic(const Instance &inst);
std::vector<std::string> renderTrace(const Hypergraph &h, const GyoResult &r);
// Throws NotAcyclic carrying the trace when inst is cyclic.
void requireAcyclic(const Instance &inst, const std::string &what);

struct WeightedEdge {
    int a, b; // constraint indices, a < b
    int w;    // number of shared variables, > 0
};
// Constraints as nodes, an edge whenever two scopes intersect.
std::vector<WeightedEdge> relationalGraph(const Instance &inst);

struct JoinForest {
    std::vector<int> parent; // -1 for roots
    std::vector<std::vector<int>> children;
    std::vector<int> roots;
    std::vector<int> order; // parents before children
};

// Maximum-weight spanning forest of the relational graph, ties broken by
// (a, b). Throws NotAcyclic for a cyclic instance and InternalError if the
// forest fails the connectedness check.
JoinForest joinForest(const Instance &inst);
// For every variable, the constraints containing it form a connected subtree.
bool hasConnectedness(const Instance &inst, const JoinForest &jf);

json hypergraphToJson(const Hypergraph &h);
Hypergraph hypergraphFromJson(const json &j);

} // namespace acsp
