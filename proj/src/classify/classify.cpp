#include "acsp/classify.hpp"

#include "acsp/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace acsp {

std::vector<size_t> support(const FuncTable &f) {
    std::vector<size_t> s;
    for (size_t i = 0; i < f.size(); ++i) {
        if (!f.at(i).isZero()) s.push_back(i);
    }
    return s;
}

bool isNZ(const FuncTable &f) { return support(f).size() == f.size(); }

bool isDG(const FuncTable &f) {
    int k = f.arity();
    // For each variable j, all 2x2 minors pairing x_j=0/1 rows across two
    // column positions must vanish.
    for (int j = 0; j < k; ++j) {
        size_t bit = size_t(1) << (k - 1 - j);
        std::vector<size_t> cols;
        for (size_t idx = 0; idx < f.size(); ++idx) {
            if (!(idx & bit)) cols.push_back(idx);
        }
        for (size_t a = 0; a < cols.size(); ++a) {
            for (size_t b = a + 1; b < cols.size(); ++b) {
                const auto &p = f.at(cols[a]), &q = f.at(cols[b] | bit);
                const auto &r = f.at(cols[b]), &s = f.at(cols[a] | bit);
                if (p * q != r * s) return false;
            }
        }
    }
    return true;
}

std::optional<DGFactors> factorDG(const FuncTable &f) {
    int k = f.arity();
    DGFactors out;
    auto s = support(f);
    if (s.empty()) {
        out.scalar = ComplexRat(0);
        for (int j = 0; j < k; ++j) out.unaries.push_back(FuncTable::unary(1, 1));
        return out;
    }
    size_t t = s.front();
    ComplexRat ft = f.at(t), inv = ft.inverse();
    out.scalar = ft;
    for (int j = 0; j < k; ++j) {
        size_t bit = size_t(1) << (k - 1 - j);
        out.unaries.push_back(FuncTable::unary(f.at(t & ~bit) * inv, f.at(t | bit) * inv));
    }
    for (size_t idx = 0; idx < f.size(); ++idx) {
        ComplexRat v = out.scalar;
        for (int j = 0; j < k && !v.isZero(); ++j) v *= out.unaries[j].at(f.bit(idx, j));
        if (v != f.at(idx)) return std::nullopt;
    }
    return out;
}

namespace {

// Union-find with parity relative to the parent.
struct SignedUF {
    std::vector<int> p, par;
    explicit SignedUF(int n) : p(n), par(n, 0) { std::iota(p.begin(), p.end(), 0); }
    std::pair<int, int> find(int x) {
        int acc = 0;
        while (p[x] != x) {
            acc ^= par[x];
            x = p[x];
        }
        return {x, acc};
    }
    void unite(int a, int b, int parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return;
        if (rb < ra) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        p[rb] = ra;
        par[rb] = pa ^ pb ^ parity;
    }
};

} // namespace

bool isED(const FuncTable &f) {
    int k = f.arity();
    auto S = support(f);
    if (S.empty()) return true;
    SignedUF uf(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool eq = true, neq = true;
            for (size_t x : S) {
                bool same = f.bit(x, i) == f.bit(x, j);
                eq = eq && same;
                neq = neq && !same;
            }
            if (eq) uf.unite(i, j, 0);
            else if (neq) uf.unite(i, j, 1);
        }
    }
    std::vector<int> reps, repOf(k), parity(k);
    for (int i = 0; i < k; ++i) {
        auto [r, pr] = uf.find(i);
        repOf[i] = r;
        parity[i] = pr;
        if (r == i) reps.push_back(i);
    }
    int m = int(reps.size());
    // Per-representative projections of S and the support product check.
    std::vector<std::array<bool, 2>> proj(m, {false, false});
    for (size_t x : S) {
        for (int r = 0; r < m; ++r) proj[r][f.bit(x, reps[r])] = true;
    }
    size_t product = 1;
    for (const auto &pr : proj) product *= size_t(pr[0]) + size_t(pr[1]);
    if (product != S.size()) return false;
    // Collapsed tensor over the representatives.
    std::vector<ComplexRat> g(size_t(1) << m);
    for (size_t y = 0; y < g.size(); ++y) {
        size_t x = 0;
        for (int i = 0; i < k; ++i) {
            int r = int(std::find(reps.begin(), reps.end(), repOf[i]) - reps.begin());
            int b = int((y >> (m - 1 - r)) & 1u) ^ parity[i];
            x = (x << 1) | size_t(b);
        }
        g[y] = f.at(x);
    }
    return isDG(FuncTable(m, std::move(g)));
}

bool hasImpSupport(const FuncTable &f) {
    auto S = support(f);
    std::vector<char> in(f.size(), 0);
    for (size_t x : S) in[x] = 1;
    for (size_t a : S) {
        for (size_t b : S) {
            if (!in[a & b] || !in[a | b]) return false;
        }
    }
    return true;
}

bool isIM(const FuncTable &f) {
    if (!hasImpSupport(f)) return false;
    auto S = support(f);
    for (size_t a : S) {
        for (size_t b : S) {
            if (f.at(a) * f.at(b) != f.at(a & b) * f.at(a | b)) return false;
        }
    }
    return true;
}

std::string tierName(Tier t) {
    switch (t) {
    case Tier::Tractable_FLC: return "Tractable_FLC";
    case Tier::Acyc2SAT_Hard: return "Acyc2SAT_Hard";
    case Tier::SharpLOGCFL_Hard: return "SharpLOGCFL_Hard";
    }
    return "?";
}

std::string modeName(ClassifyMode m) { return m == ClassifyMode::WithXOR ? "with-xor" : "no-xor"; }

ClassifyMode modeFromName(const std::string &s) {
    if (s == "with-xor") return ClassifyMode::WithXOR;
    if (s == "no-xor") return ClassifyMode::NoXOR;
    throw InputError("unknown classify mode '" + s + "'");
}

Membership membership(const FuncTable &f) {
    return Membership{isNZ(f), isDG(f), isED(f), hasImpSupport(f), isIM(f)};
}

Verdict classify(const std::vector<FuncTable> &F, ClassifyMode mode) {
    Verdict v;
    v.mode = mode;
    for (size_t i = 0; i < F.size(); ++i) {
        v.members.push_back(membership(F[i]));
        if (!v.members.back().ed && !v.notED) v.notED = i;
    }
    if (!v.notED) {
        v.tier = Tier::Tractable_FLC;
        return v;
    }
    if (mode == ClassifyMode::WithXOR) {
        v.tier = Tier::SharpLOGCFL_Hard;
        return v;
    }
    for (size_t i = 0; i < F.size() && !v.notIM; ++i) {
        if (!v.members[i].im) v.notIM = i;
    }
    v.tier = v.notIM ? Tier::SharpLOGCFL_Hard : Tier::Acyc2SAT_Hard;
    return v;
}

json Verdict::toJson(const std::vector<std::string> &names) const {
    auto name = [&](size_t i) { return i < names.size() ? names[i] : "#" + std::to_string(i); };
    json table = json::array();
    for (size_t i = 0; i < members.size(); ++i) {
        const auto &m = members[i];
        table.push_back(json{{"function", name(i)},
                             {"NZ", m.nz},
                             {"DG", m.dg},
                             {"ED", m.ed},
                             {"imp_support", m.impSupport},
                             {"IM", m.im}});
    }
    json j{{"tier", tierName(tier)}, {"mode", modeName(mode)}, {"membership", table}};
    if (notED) j["outside_ED"] = name(*notED);
    if (notIM) j["outside_IM"] = name(*notIM);
    return j;
}

} // namespace acsp
