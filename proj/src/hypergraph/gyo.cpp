#include "acsp/hypergraph.hpp"

#include "acsp/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace acsp {

Hypergraph buildHypergraph(const Instance &inst) {
    Hypergraph h;
    h.vertices = inst.varNames();
    for (const auto &c : inst.constraints()) {
        std::vector<int> e = c.scope();
        std::sort(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    return h;
}

namespace {

bool subset(const std::vector<int> &a, const std::vector<int> &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

GyoResult gyoReduce(const Hypergraph &h, const GyoPolicy &policy) {
    int nv = int(h.vertices.size());
    std::vector<std::vector<int>> edges = h.edges;
    std::vector<char> alive(edges.size(), 1);
    std::vector<char> vAlive(nv, 1);
    for (const auto &e : edges) {
        for (int v : e) {
            if (v < 0 || v >= nv) throw InputError("hypergraph edge refers to an unknown vertex");
        }
    }
    std::mt19937_64 rng(policy.seed);
    GyoResult res;

    while (true) {
        std::vector<GyoStep> vertexActs, edgeActs;
        // Vertex rule: a live vertex lying in at most one live edge.
        std::vector<int> deg(nv, 0), holder(nv, -1);
        for (size_t e = 0; e < edges.size(); ++e) {
            if (!alive[e]) continue;
            for (int v : edges[e]) {
                ++deg[v];
                holder[v] = int(e);
            }
        }
        for (int v = 0; v < nv; ++v) {
            if (vAlive[v] && deg[v] <= 1) vertexActs.push_back({GyoStep::RemoveVertex, v, holder[v], -1});
        }
        bool wantEdges = policy.seed != 0 || policy.edgesFirst || vertexActs.empty();
        if (wantEdges) {
            for (size_t e = 0; e < edges.size(); ++e) {
                if (!alive[e]) continue;
                if (edges[e].empty()) {
                    edgeActs.push_back({GyoStep::RemoveEdge, -1, int(e), -1});
                    continue;
                }
                for (size_t f = 0; f < edges.size(); ++f) {
                    if (f == e || !alive[f]) continue;
                    if (subset(edges[e], edges[f])) {
                        edgeActs.push_back({GyoStep::RemoveEdge, -1, int(e), int(f)});
                        break;
                    }
                }
                if (!policy.seed && !edgeActs.empty()) break;
            }
        }
        if (vertexActs.empty() && edgeActs.empty()) break;

        GyoStep pick;
        if (policy.seed) {
            size_t n = vertexActs.size() + edgeActs.size();
            size_t r = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
            pick = r < vertexActs.size() ? vertexActs[r] : edgeActs[r - vertexActs.size()];
        } else if (policy.edgesFirst && !edgeActs.empty()) {
            pick = edgeActs.front();
        } else if (!vertexActs.empty()) {
            pick = vertexActs.front();
        } else {
            pick = edgeActs.front();
        }

        if (pick.kind == GyoStep::RemoveVertex) {
            vAlive[pick.vertex] = 0;
            if (pick.edge >= 0) {
                auto &e = edges[pick.edge];
                e.erase(std::remove(e.begin(), e.end(), pick.vertex), e.end());
            }
        } else {
            alive[pick.edge] = 0;
        }
        res.trace.push_back(pick);
    }

    for (size_t e = 0; e < edges.size(); ++e) {
        if (alive[e]) res.residualEdges.push_back(int(e));
    }
    res.acyclic = res.residualEdges.empty();
    return res;
}

bool isAcyclic(const Hypergraph &h) { return gyoReduce(h).acyclic; }

bool isAcyclic(const Instance &inst) { return isAcyclic(buildHypergraph(inst)); }

std::vector<std::string> renderTrace(const Hypergraph &h, const GyoResult &r) {
    std::vector<std::string> out;
    auto edgeText = [&](int e) {
        std::string s = "e" + std::to_string(e) + "{";
        for (size_t i = 0; i < h.edges[e].size(); ++i) {
            if (i) s += ",";
            s += h.vertices[h.edges[e][i]];
        }
        return s + "}";
    };
    for (const auto &st : r.trace) {
        if (st.kind == GyoStep::RemoveVertex) {
            out.push_back("remove vertex " + h.vertices[st.vertex] +
                          (st.edge >= 0 ? " (only in " + edgeText(st.edge) + ")" : " (isolated)"));
        } else if (st.containedIn >= 0) {
            out.push_back("remove edge " + edgeText(st.edge) + " (inside " + edgeText(st.containedIn) + ")");
        } else {
            out.push_back("remove empty edge e" + std::to_string(st.edge));
        }
    }
    if (!r.acyclic) {
        std::string s = "stuck with " + std::to_string(r.residualEdges.size()) + " edges:";
        for (int e : r.residualEdges) s += " " + edgeText(e);
        out.push_back(s);
    }
    return out;
}

void requireAcyclic(const Instance &inst, const std::string &what) {
    Hypergraph h = buildHypergraph(inst);
    GyoResult r = gyoReduce(h);
    if (!r.acyclic) throw NotAcyclic(what + " is not acyclic", renderTrace(h, r));
}

json hypergraphToJson(const Hypergraph &h) {
    json edges = json::array();
    for (const auto &e : h.edges) {
        json ej = json::array();
        for (int v : e) ej.push_back(h.vertices[v]);
        edges.push_back(ej);
    }
    return json{{"vertices", h.vertices}, {"edges", edges}};
}

Hypergraph hypergraphFromJson(const json &j) {
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        throw InputError("hypergraph needs an \"edges\" array");
    Hypergraph h;
    std::map<std::string, int> idx;
    auto vertex = [&](const std::string &n, bool create) {
        auto it = idx.find(n);
        if (it != idx.end()) return it->second;
        if (!create) throw InputError("edge uses undeclared vertex '" + n + "'");
        idx[n] = int(h.vertices.size());
        h.vertices.push_back(n);
        return int(h.vertices.size()) - 1;
    };
    bool declared = j.contains("vertices");
    if (declared) {
        if (!j["vertices"].is_array()) throw InputError("\"vertices\" must be an array");
        for (const auto &v : j["vertices"]) {
            if (!v.is_string()) throw InputError("vertex names must be strings");
            if (idx.count(v.get<std::string>())) throw InputError("duplicate vertex " + v.dump());
            vertex(v.get<std::string>(), true);
        }
    }
    for (const auto &e : j["edges"]) {
        if (!e.is_array()) throw InputError("each edge must be an array of vertex names");
        std::set<int> s;
        for (const auto &v : e) {
            if (!v.is_string()) throw InputError("vertex names must be strings");
            s.insert(vertex(v.get<std::string>(), !declared));
        }
        h.edges.emplace_back(s.begin(), s.end());
    }
    return h;
}

} // namespace acsp
