#include "acsp/error.hpp"
#include "acsp/hypergraph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace acsp;

namespace {

Hypergraph hg(std::vector<std::vector<std::string>> edges) {
    json j;
    j["edges"] = edges;
    return hypergraphFromJson(j);
}

// Every reduction order, explored exhaustively with memoization. Returns the
// set of terminal outcomes (true = reduced to nothing).
using State = std::vector<std::vector<int>>; // sorted edges, vertices implicit

std::set<bool> allOrders(State s, std::map<State, std::set<bool>> &memo) {
    std::sort(s.begin(), s.end());
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::set<bool> out;
    std::map<int, int> deg;
    for (const auto &e : s) {
        for (int v : e) ++deg[v];
    }
    bool moved = false;
    for (size_t e = 0; e < s.size(); ++e) {
        for (int v : s[e]) {
            if (deg[v] == 1) {
                State t = s;
                t[e].erase(std::find(t[e].begin(), t[e].end(), v));
                auto r = allOrders(t, memo);
                out.insert(r.begin(), r.end());
                moved = true;
            }
        }
        bool removable = s[e].empty();
        for (size_t f = 0; f < s.size() && !removable; ++f) {
            removable = f != e && std::includes(s[f].begin(), s[f].end(), s[e].begin(), s[e].end());
        }
        if (removable) {
            State t = s;
            t.erase(t.begin() + long(e));
            auto r = allOrders(t, memo);
            out.insert(r.begin(), r.end());
            moved = true;
        }
    }
    if (!moved) out.insert(s.empty());
    memo[s] = out;
    return out;
}

Hypergraph randomHypergraph(oracle::Rng &rng, int maxV, int maxE, int minE = 0, int minSize = 0) {
    Hypergraph h;
    int nv = oracle::uniform(rng, 1, maxV);
    for (int v = 0; v < nv; ++v) h.vertices.push_back("v" + std::to_string(v));
    int ne = oracle::uniform(rng, minE, maxE);
    for (int e = 0; e < ne; ++e) {
        std::vector<int> all(nv);
        for (int v = 0; v < nv; ++v) all[v] = v;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> edge(all.begin(), all.begin() + std::min(nv, oracle::uniform(rng, minSize, 3)));
        std::sort(edge.begin(), edge.end());
        h.edges.push_back(edge);
    }
    return h;
}

} // namespace

TEST_CASE("hypergraph of an instance") {
    Instance inst;
    inst.add(fOR(2), std::vector<std::string>{"x", "y"});
    inst.add(fImplies(), std::vector<std::string>{"y", "z"});
    Hypergraph h = buildHypergraph(inst);
    CHECK(h.edges == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    Instance dup;
    int x = dup.var("x"), y = dup.var("y");
    dup.add(fEQ(3), std::vector<int>{x, x, y}, "EQ", true);
    CHECK(buildHypergraph(dup).edges == std::vector<std::vector<int>>{{0, 1}});
    CHECK(buildHypergraph(Instance()).edges.empty());
}

TEST_CASE("GYO examples") {
    CHECK_FALSE(isAcyclic(hg({{"x", "z"}, {"y", "z"}, {"x", "y"}, {"z"}})));
    CHECK(isAcyclic(hg({{"x", "y"}, {"y", "z"}})));
    CHECK(isAcyclic(Hypergraph{}));
    CHECK(isAcyclic(hg({{"a", "b", "c"}, {"a", "b"}, {"b", "c"}, {"a", "c"}})));
    CHECK_FALSE(isAcyclic(hg({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})));
    CHECK(isAcyclic(hg({{}, {}})));
}

TEST_CASE("trace names the stuck edges") {
    Hypergraph h = hg({{"x", "y"}, {"y", "z"}, {"z", "x"}});
    GyoResult r = gyoReduce(h);
    CHECK_FALSE(r.acyclic);
    CHECK(r.residualEdges.size() == 3);
    auto lines = renderTrace(h, r);
    REQUIRE(!lines.empty());
    CHECK(lines.back().find("stuck") != std::string::npos);
}

TEST_CASE("GYO verdict does not depend on the policy") {
    oracle::Rng rng(77);
    for (int t = 0; t < 400; ++t) {
        Hypergraph h = randomHypergraph(rng, 10, 8);
        bool a = gyoReduce(h).acyclic;
        CHECK(gyoReduce(h, GyoPolicy{true, 0}).acyclic == a);
        CHECK(gyoReduce(h, GyoPolicy{false, 1000u + t}).acyclic == a);
    }
}

TEST_CASE("GYO agrees with exhaustive reduction orders") {
    oracle::Rng rng(78);
    int cyclic = 0;
    for (int t = 0; t < 300; ++t) {
        Hypergraph h = randomHypergraph(rng, 6, 6, 3, t % 2 ? 2 : 0);
        std::map<State, std::set<bool>> memo;
        State s;
        for (auto e : h.edges) s.push_back(e);
        auto outcomes = allOrders(s, memo);
        REQUIRE(outcomes.size() == 1); // order independence in the oracle itself
        CHECK(isAcyclic(h) == *outcomes.begin());
        cyclic += !*outcomes.begin();
    }
    CHECK(cyclic > 30);
}

TEST_CASE("relational graph weights") {
    Instance inst;
    inst.add(fEQ(3), std::vector<std::string>{"x", "y", "z"});
    inst.add(fOR(2), std::vector<std::string>{"y", "z"});
    inst.add(fDelta0(), std::vector<std::string>{"w"});
    auto g = relationalGraph(inst);
    REQUIRE(g.size() == 1);
    CHECK(g[0].w == 2);
}

TEST_CASE("join forest examples") {
    Instance chain;
    chain.add(fOR(2), std::vector<std::string>{"x", "y"});
    chain.add(fOR(2), std::vector<std::string>{"y", "z"});
    chain.add(fOR(2), std::vector<std::string>{"z", "w"});
    JoinForest jf = joinForest(chain);
    CHECK(jf.roots == std::vector<int>{0});
    CHECK(jf.parent == std::vector<int>{-1, 0, 1});

    Instance two;
    two.add(fOR(2), std::vector<std::string>{"a", "b"});
    two.add(fOR(2), std::vector<std::string>{"c", "d"});
    CHECK(joinForest(two).roots.size() == 2);

    Instance tri;
    tri.add(fEQ(3), std::vector<std::string>{"x", "y", "z"});
    tri.add(fOR(2), std::vector<std::string>{"x", "y"});
    tri.add(fXOR(), std::vector<std::string>{"y", "z"});
    JoinForest t = joinForest(tri);
    int weight = 0;
    auto g = relationalGraph(tri);
    for (int c = 0; c < 3; ++c) {
        if (t.parent[c] < 0) continue;
        for (const auto &e : g) {
            if (e.a == std::min(c, t.parent[c]) && e.b == std::max(c, t.parent[c])) weight += e.w;
        }
    }
    CHECK(weight == 4);
    CHECK(hasConnectedness(tri, t));

    Instance cyc;
    cyc.add(fOR(2), std::vector<std::string>{"x", "y"});
    cyc.add(fOR(2), std::vector<std::string>{"y", "z"});
    cyc.add(fOR(2), std::vector<std::string>{"z", "x"});
    CHECK_THROWS_AS(joinForest(cyc), NotAcyclic);
    try {
        joinForest(cyc);
    } catch (const NotAcyclic &e) {
        CHECK(!e.trace().empty());
    }
}

TEST_CASE("join forests of random acyclic instances are connected") {
    oracle::Rng rng(79);
    auto pool = oracle::smallPool();
    for (int t = 0; t < 300; ++t) {
        Instance inst = oracle::randomAcyclic(rng, 12, 10, 4, pool);
        REQUIRE(isAcyclic(inst));
        JoinForest jf = joinForest(inst);
        CHECK(hasConnectedness(inst, jf));
        // a spanning forest: one root per connected component of the relational graph
        int edges = 0;
        for (int p : jf.parent) edges += p >= 0;
        CHECK(edges + int(jf.roots.size()) == inst.numConstraints());
    }
}

TEST_CASE("hypergraph JSON") {
    Hypergraph h = hg({{"x", "y"}, {"y", "z"}});
    json j = hypergraphToJson(h);
    CHECK(j["edges"] == json::parse(R"([["x","y"],["y","z"]])"));
    CHECK_THROWS_AS(hypergraphFromJson(json::parse(R"({"vertices":["x"],"edges":[["x","q"]]})")), InputError);
    CHECK_THROWS_AS(hypergraphFromJson(json::parse(R"({"edges":"x"})")), InputError);
}
