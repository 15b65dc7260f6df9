#pragma once
// Generative membership oracles for DG, ED, IM and IMP at arity <= 3 over the
// weight pool W = {0, 1, -1, 2, i}. Each class is enumerated from its
// generators (scalars, unaries, EQ2/XOR links, Implies edges) and the
// W-valued tables are collected into a set; membership is set lookup.
//
// Completeness: a W-valued product of generators can be rewritten with the
// scalar in W and every unary normalized to [1,r] or [r,1] where r is a
// ratio of two nonzero W values or 0, i.e. r in {0} U {i^u 2^e : e in -1..1}.

#include "acsp/func_table.hpp"
#include "oracles.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// i^u * 2^e, or zero.
struct Mono {
    bool zero = false;
    int u = 0, e = 0;
    Mono operator*(const Mono &o) const {
        if (zero || o.zero) return Mono{true, 0, 0};
        return Mono{false, (u + o.u) & 3, e + o.e};
    }
    uint8_t code() const { return zero ? 255 : uint8_t(u * 16 + (e + 8)); }
};

inline const std::vector<Mono> &poolW() {
    static const std::vector<Mono> w{{true, 0, 0}, {false, 0, 0}, {false, 2, 0}, {false, 0, 1}, {false, 1, 0}};
    return w;
}

inline acsp::ComplexRat monoValue(const Mono &m) {
    if (m.zero) return acsp::ComplexRat(0);
    acsp::ComplexRat unit = acsp::ComplexRat::i().pow(m.u);
    return unit * acsp::ComplexRat(2).pow(m.e);
}

inline acsp::FuncTable tableOf(const std::vector<Mono> &t) {
    std::vector<acsp::ComplexRat> v;
    for (const auto &m : t) v.push_back(monoValue(m));
    int k = 0;
    while ((size_t(1) << k) < v.size()) ++k;
    return acsp::FuncTable(k, v);
}

// Code string of a W-valued table; empty when an entry is outside W.
inline std::string codeOf(const acsp::FuncTable &f) {
    std::string s;
    for (const auto &v : f.values()) {
        bool found = false;
        for (const auto &m : poolW()) {
            if (monoValue(m) == v) {
                s.push_back(char(m.code()));
                found = true;
                break;
            }
        }
        if (!found) return "";
    }
    return s;
}

inline bool inW(const Mono &m) {
    for (const auto &w : poolW()) {
        if (w.code() == m.code()) return true;
    }
    return false;
}

inline std::vector<Mono> ratios() {
    std::vector<Mono> r{{true, 0, 0}};
    for (int u = 0; u < 4; ++u) {
        for (int e = -1; e <= 1; ++e) r.push_back({false, u, e});
    }
    return r;
}

using Unary = std::array<Mono, 2>;

inline std::vector<Unary> unariesBoth() {
    std::vector<Unary> out;
    Mono one{false, 0, 0};
    for (const auto &r : ratios()) {
        out.push_back({one, r});
        if (r.code() != one.code()) out.push_back({r, one});
    }
    return out;
}

inline std::vector<Unary> unariesLow() {
    std::vector<Unary> out;
    Mono one{false, 0, 0};
    for (const auto &r : ratios()) out.push_back({one, r});
    out.push_back({Mono{true, 0, 0}, one});
    return out;
}

inline int bitOf(size_t x, int k, int j) { return int((x >> (k - 1 - j)) & 1u); }

// For each coordinate: -1 when it is a representative, otherwise
// 2*rep + parity.
inline std::vector<std::vector<int>> linkStructures(int k) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto &s : out) {
            auto a = s;
            a.push_back(-1);
            next.push_back(a);
            for (int j = 0; j < i; ++j) {
                if (s[j] != -1) continue;
                for (int p = 0; p < 2; ++p) {
                    auto b = s;
                    b.push_back(2 * j + p);
                    next.push_back(b);
                }
            }
        }
        out = next;
    }
    return out;
}

struct ClassSets {
    std::set<std::string> dg, ed, im;
};

inline void addIfW(std::set<std::string> &set, const std::vector<Mono> &t) {
    std::string s;
    for (const auto &m : t) {
        if (!inW(m)) return;
        s.push_back(char(m.code()));
    }
    set.insert(s);
}

inline ClassSets buildClassSets(int k) {
    ClassSets cs;
    size_t n = size_t(1) << k;
    std::vector<Mono> lambdas;
    for (const auto &w : poolW()) {
        if (!w.zero) lambdas.push_back(w);
    }
    std::vector<Mono> zero(n, Mono{true, 0, 0});
    addIfW(cs.dg, zero);
    addIfW(cs.ed, zero);
    addIfW(cs.im, zero);

    // Products of per-coordinate unaries drawn from `us` over the coordinates
    // listed in `coords`, times lambda, times a 0/1 mask.
    auto sweep = [&](const std::vector<Unary> &us, const std::vector<int> &coords, auto mask,
                     std::set<std::string> &into) {
        std::vector<size_t> pick(coords.size(), 0);
        while (true) {
            for (const auto &lam : lambdas) {
                std::vector<Mono> t(n);
                for (size_t x = 0; x < n; ++x) {
                    Mono v = mask(x) ? lam : Mono{true, 0, 0};
                    for (size_t c = 0; c < coords.size(); ++c) v = v * us[pick[c]][bitOf(x, k, coords[c])];
                    t[x] = v;
                }
                addIfW(into, t);
            }
            size_t c = 0;
            while (c < pick.size() && ++pick[c] == us.size()) pick[c++] = 0;
            if (c == pick.size()) break;
        }
    };

    std::vector<int> all;
    for (int j = 0; j < k; ++j) all.push_back(j);
    sweep(unariesBoth(), all, [](size_t) { return true; }, cs.dg);

    for (const auto &st : linkStructures(k)) {
        std::vector<int> reps;
        for (int j = 0; j < k; ++j) {
            if (st[j] == -1) reps.push_back(j);
        }
        auto mask = [&](size_t x) {
            for (int j = 0; j < k; ++j) {
                if (st[j] == -1) continue;
                if (bitOf(x, k, j) != (bitOf(x, k, st[j] / 2) ^ (st[j] % 2))) return false;
            }
            return true;
        };
        sweep(unariesBoth(), reps, mask, cs.ed);
    }

    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if (a != b) arcs.push_back({a, b});
        }
    }
    for (size_t sub = 0; sub < (size_t(1) << arcs.size()); ++sub) {
        auto mask = [&](size_t x) {
            for (size_t e = 0; e < arcs.size(); ++e) {
                if ((sub >> e) & 1u) {
                    if (bitOf(x, k, arcs[e].first) && !bitOf(x, k, arcs[e].second)) return false;
                }
            }
            return true;
        };
        sweep(unariesLow(), all, mask, cs.im);
    }
    return cs;
}

inline const ClassSets &classSets(int k) {
    static std::map<int, ClassSets> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, buildClassSets(k)).first;
    return it->second;
}

// Relations (as 2^k-bit masks) definable by conjunctions of Implies, Delta0
// and Delta1 over k variables.
inline std::set<uint32_t> impRelations(int k) {
    size_t n = size_t(1) << k;
    std::vector<uint32_t> atoms;
    auto rel = [&](auto pred) {
        uint32_t m = 0;
        for (size_t x = 0; x < n; ++x) {
            if (pred(x)) m |= uint32_t(1) << x;
        }
        return m;
    };
    for (int a = 0; a < k; ++a) {
        atoms.push_back(rel([&](size_t x) { return bitOf(x, k, a) == 0; }));
        atoms.push_back(rel([&](size_t x) { return bitOf(x, k, a) == 1; }));
        for (int b = 0; b < k; ++b) {
            if (a != b) atoms.push_back(rel([&](size_t x) { return !bitOf(x, k, a) || bitOf(x, k, b); }));
        }
    }
    std::set<uint32_t> out;
    uint32_t full = n == 32 ? ~0u : ((uint32_t(1) << n) - 1);
    for (size_t sub = 0; sub < (size_t(1) << atoms.size()); ++sub) {
        uint32_t m = full;
        for (size_t a = 0; a < atoms.size(); ++a) {
            if ((sub >> a) & 1u) m &= atoms[a];
        }
        out.insert(m);
    }
    return out;
}

// A W-valued table: uniform, or a random member of one of the classes.
inline acsp::FuncTable sampleClassTable(Rng &rng, int k) {
    const auto &cs = classSets(k);
    int which = uniform(rng, 0, 3);
    const std::set<std::string> *set = which == 1 ? &cs.dg : which == 2 ? &cs.ed : which == 3 ? &cs.im : nullptr;
    std::vector<Mono> t;
    if (!set) {
        for (size_t x = 0; x < (size_t(1) << k); ++x)
            t.push_back(poolW()[uniform(rng, 0, 4)]);
        return tableOf(t);
    }
    auto it = set->begin();
    std::advance(it, uniform(rng, 0, int(set->size()) - 1));
    for (char c : *it) {
        uint8_t b = uint8_t(c);
        t.push_back(b == 255 ? Mono{true, 0, 0} : Mono{false, b / 16, b % 16 - 8});
    }
    return tableOf(t);
}


} // namespace oracle
