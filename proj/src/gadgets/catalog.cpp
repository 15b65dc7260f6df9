#include "acsp/error.hpp"
#include "acsp/gadgets.hpp"

#include <functional>
#include <map>

namespace acsp {

namespace {

using Params = std::vector<ComplexRat>;

FuncTable tab(std::initializer_list<ComplexRat> v) {
    std::vector<ComplexRat> vals(v);
    int k = 0;
    while ((size_t(1) << k) < vals.size()) ++k;
    return FuncTable(k, vals);
}

FuncTable unary(const ComplexRat &a, const ComplexRat &b) { return FuncTable(1, {a, b}); }

// Small helper for assembling a realization by variable name.
struct Builder {
    GadgetRealization r;
    Builder(std::string name, FuncTable target, const Names &ext) {
        r.name = std::move(name);
        r.target = std::move(target);
        r.k = int(ext.size());
        for (const auto &n : ext) r.base.addVar(n);
    }
    void c(const FuncTable &f, const Names &vars) {
        std::vector<int> ids;
        for (const auto &n : vars) ids.push_back(r.base.var(n));
        r.base.add(f, ids);
    }
    void scale(const ComplexRat &s) { r.lambda *= s; }
};

// NAND2(x,y) = -sum_v u0(v) OR3(x,y,v) OR2(v,x) OR2(v,y). The OR3 edge covers
// {x,y}, which keeps the pair's hyperedge present after substitution.
void nand2Cover(Builder &b, const std::string &x, const std::string &y, const std::string &tag) {
    std::string v = tag + "v";
    b.c(fU0(), {v});
    b.c(fOR(3), {x, y, v});
    b.c(fOR(2), {v, x});
    b.c(fOR(2), {v, y});
    b.scale(-1);
}

// [z = x OR y] = sum_w OR3(x,y,w) NAND2(z,w) u1(z) u0(w), with NAND2 by
// cover and u1 = -u0.
void forStrict(Builder &b, const std::string &x, const std::string &y, const std::string &z, const std::string &tag) {
    std::string w = tag + "w";
    b.c(fOR(3), {x, y, w});
    nand2Cover(b, z, w, tag + "n");
    b.c(fU0(), {z});
    b.scale(-1);
    b.c(fU0(), {w});
}

// [t = s + c] (so s and c are not both 1).
void exactOneStep(Builder &b, const std::string &s, const std::string &c, const std::string &t, const std::string &tag) {
    forStrict(b, s, c, t, tag + "f");
    nand2Cover(b, s, c, tag + "m");
}

// (g = 0 and all children 0) or (g = 1 and exactly one child 1).
void orGate(Builder &b, const std::string &g, const Names &cs, const std::string &tag) {
    if (cs.size() == 1) {
        std::string z = tag + "z";
        b.c(fXOR(), {g, z});
        b.c(fXOR(), {z, cs[0]});
        return;
    }
    std::string acc = cs[0];
    for (size_t i = 1; i < cs.size(); ++i) {
        std::string out = i + 1 == cs.size() ? g : tag + "s" + std::to_string(i + 1);
        exactOneStep(b, acc, cs[i], out, tag + std::to_string(i) + ".");
        acc = out;
    }
}

FuncTable orGateTable(int m) {
    std::vector<ComplexRat> vals(size_t(1) << (m + 1), ComplexRat(0));
    vals[0] = 1;
    for (int i = 0; i < m; ++i) vals[(size_t(1) << m) | (size_t(1) << (m - 1 - i))] = 1;
    return FuncTable(m + 1, vals);
}

FuncTable exactOneStepTable() {
    // (s,c,t): t = s + c
    return tab({1, 0, 0, 1, 0, 1, 0, 0});
}

FuncTable forTable() { return tab({1, 0, 0, 1, 0, 1, 0, 1}); }
FuncTable fandTable() { return tab({1, 0, 1, 0, 1, 0, 0, 1}); }

Names xs(int k, const std::string &p = "x") {
    Names n;
    for (int i = 1; i <= k; ++i) n.push_back(p + std::to_string(i));
    return n;
}

int intParam(const Params &p, size_t i, const std::string &gadget, int lo, int hi) {
    if (p.size() <= i) throw InputError(gadget + ": missing parameter " + std::to_string(i + 1));
    const ComplexRat &v = p[i];
    if (!v.isReal() || v.re().get_den() != 1 || v.re() < lo || v.re() > hi)
        throw InputError(gadget + ": parameter must be an integer in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return int(v.re().get_num().get_si());
}

void wantParams(const Params &p, size_t n, const std::string &gadget) {
    if (p.size() != n)
        throw InputError(gadget + " takes " + std::to_string(n) + " parameter(s), got " + std::to_string(p.size()));
}

void require(bool ok, const std::string &gadget, const std::string &inequality) {
    if (!ok) throw InputError(gadget + ": parameter constraint violated: " + inequality);
}

GadgetRealization build(const std::string &name, const Params &p);

// Binary gadgets built from a single two-argument table.

GadgetRealization or2FromF(const ComplexRat &a, const ComplexRat &b) {
    require(!(a * b).isZero(), "G_OR2FromF", "ab != 0");
    FuncTable f = tab({1, a, 0, b});
    Builder g("G_OR2FromF", fOR(2), {"x", "y"});
    g.c(f, {"x", "z"});
    g.c(f, {"y", "z"});
    g.c(unary(b / a, 1), {"x"});
    g.c(unary(b / a, 1), {"y"});
    g.c(unary(-(a * a), 1), {"z"});
    g.r.lambda = ComplexRat(1) / (b * b);
    return g.r;
}

GadgetRealization nand2FromF(const ComplexRat &a, const ComplexRat &b) {
    require(!(a * b).isZero(), "G_NAND2FromF", "ab != 0");
    FuncTable f = tab({0, a, b, 1});
    Builder g("G_NAND2FromF", fNAND(2), {"x", "y"});
    g.c(f, {"x", "z"});
    g.c(f, {"y", "z"});
    g.c(unary(1, a), {"x"});
    g.c(unary(1, a), {"y"});
    g.c(unary(ComplexRat(-1) / (b * b), 1), {"z"});
    g.r.lambda = ComplexRat(1) / (a * a);
    return g.r;
}

void nzPre(const ComplexRat &a, const ComplexRat &b, const ComplexRat &c, const std::string &who) {
    require(!(a * b * c).isZero(), who, "abc != 0");
    require(a * b != c, who, "ab != c");
    require(a * b != -c, who, "ab != -c");
}

// (0,x,x,1) with x = a/(ab+c) from f = (1,a,b,c):
// sum_z f(x,z) f(y,z) v(z) = (ab-c) (0,a,a,ab+c) for v = [a^2,-1].
GadgetRealization hFromNZ(const ComplexRat &a, const ComplexRat &b, const ComplexRat &c) {
    nzPre(a, b, c, "G_HFromNZ");
    FuncTable f = tab({1, a, b, c});
    ComplexRat x = a / (a * b + c);
    Builder g("G_HFromNZ", tab({0, x, x, 1}), {"x", "y"});
    g.c(f, {"x", "z"});
    g.c(f, {"y", "z"});
    g.c(unary(a * a, -1), {"z"});
    g.r.lambda = ComplexRat(1) / (a * a * b * b - c * c);
    return g.r;
}

GadgetRealization nand2FromNZ(const ComplexRat &a, const ComplexRat &b, const ComplexRat &c) {
    nzPre(a, b, c, "G_NAND2FromNZ");
    ComplexRat x = a / (a * b + c);
    GadgetRealization r = transitiveCompose(nand2FromF(x, x), hFromNZ(a, b, c));
    r.name = "G_NAND2FromNZ";
    return r;
}

// f = (1,a,b,-ab) is degenerate in the wrong way for the product trick, so
// first symmetrize: (1/3) sum_z f(x,z) f(y,z) v(z) with v = [1, 2/a^2]
// gives (1,-b/3,-b/3,b^2), which is NZ with a'b' = b^2/9 != +-b^2.
GadgetRealization symFromAntiDG(const ComplexRat &a, const ComplexRat &b) {
    require(!(a * b).isZero(), "G_SymFromAntiDG", "ab != 0");
    FuncTable f = tab({1, a, b, -(a * b)});
    ComplexRat t = -b / ComplexRat(3);
    Builder g("G_SymFromAntiDG", tab({1, t, t, b * b}), {"x", "y"});
    g.c(f, {"x", "z"});
    g.c(f, {"y", "z"});
    g.c(unary(1, ComplexRat(2) / (a * a)), {"z"});
    g.r.lambda = ComplexRat(mpq_class(1, 3));
    return g.r;
}

GadgetRealization nand2FromAntiDG(const ComplexRat &a, const ComplexRat &b) {
    require(!(a * b).isZero(), "G_NAND2FromAntiDG", "ab != 0");
    ComplexRat t = -b / ComplexRat(3);
    GadgetRealization r = transitiveCompose(nand2FromNZ(t, t, b * b), symFromAntiDG(a, b));
    r.name = "G_NAND2FromAntiDG";
    return r;
}

struct Def {
    CatalogEntry entry;
    std::function<GadgetRealization(const Params &)> make;
};

Params ps(std::initializer_list<ComplexRat> v) { return Params(v); }

std::vector<Def> makeDefs() {
    std::vector<Def> d;
    auto add = [&](std::string name, std::string params, std::vector<Params> samples, std::string summary,
                   std::function<GadgetRealization(const Params &)> make, bool cyclic = false) {
        d.push_back({CatalogEntry{name, params, std::move(samples), cyclic, std::move(summary)}, std::move(make)});
    };
    std::vector<Params> ks{ps({1}), ps({2}), ps({3}), ps({4}), ps({5})};
    std::vector<Params> none{Params{}};
    std::vector<Params> ab{ps({1, 2}), ps({2, 3}), ps({-1, ComplexRat(mpq_class(1, 2))}), ps({ComplexRat(0, 1), 2}),
                           ps({ComplexRat(1, 1), ComplexRat(mpq_class(-3, 2))})};

    add("G_EQ3FromEQ2", "", none, "EQ3(x,y,z) = EQ2(x,y) EQ2(y,z)", [](const Params &p) {
        wantParams(p, 0, "G_EQ3FromEQ2");
        Builder g("G_EQ3FromEQ2", fEQ(3), {"x", "y", "z"});
        g.c(fEQ(2), {"x", "y"});
        g.c(fEQ(2), {"y", "z"});
        return g.r;
    });
    add("G_ImpliesFromORXOR", "", none, "Implies(x,y) = sum_z OR2(z,y) XOR(x,z)", [](const Params &p) {
        wantParams(p, 0, "G_ImpliesFromORXOR");
        Builder g("G_ImpliesFromORXOR", fImplies(), {"x", "y"});
        g.c(fOR(2), {"z", "y"});
        g.c(fXOR(), {"x", "z"});
        return g.r;
    });
    add("G_EQ2FromImplies", "", none, "EQ2(x,y) = Implies(x,y) Implies(y,x)", [](const Params &p) {
        wantParams(p, 0, "G_EQ2FromImplies");
        Builder g("G_EQ2FromImplies", fEQ(2), {"x", "y"});
        g.c(fImplies(), {"x", "y"});
        g.c(fImplies(), {"y", "x"});
        return g.r;
    });
    add("G_ANDkFromEQk", "k", ks, "AND_k = EQ_k Delta1(x1)", [](const Params &p) {
        wantParams(p, 1, "G_ANDkFromEQk");
        int k = intParam(p, 0, "G_ANDkFromEQk", 1, kMaxTableArity);
        Builder g("G_ANDkFromEQk", fAND(k), xs(k));
        g.c(fEQ(k), xs(k));
        g.c(fDelta1(), {"x1"});
        return g.r;
    });
    add("G_OR2FromNAND2", "", none, "OR2(x,y) = sum_z NAND2(x,z) NAND2(y,z) u0(z)", [](const Params &p) {
        wantParams(p, 0, "G_OR2FromNAND2");
        Builder g("G_OR2FromNAND2", fOR(2), {"x", "y"});
        g.c(fNAND(2), {"x", "z"});
        g.c(fNAND(2), {"y", "z"});
        g.c(fU0(), {"z"});
        return g.r;
    });
    add("G_NAND2FromOR2", "", none, "NAND2(x,y) = -sum_z OR2(x,z) OR2(y,z) u0(z)", [](const Params &p) {
        wantParams(p, 0, "G_NAND2FromOR2");
        Builder g("G_NAND2FromOR2", fNAND(2), {"x", "y"});
        g.c(fOR(2), {"x", "z"});
        g.c(fOR(2), {"y", "z"});
        g.c(fU0(), {"z"});
        g.r.lambda = -1;
        return g.r;
    });
    add("G_ORkFromImplies", "k", ks, "OR_k = -sum_w u0(w) prod_i Implies(x_i,w)", [](const Params &p) {
        wantParams(p, 1, "G_ORkFromImplies");
        int k = intParam(p, 0, "G_ORkFromImplies", 1, kMaxTableArity);
        Builder g("G_ORkFromImplies", fOR(k), xs(k));
        g.c(fU0(), {"w"});
        for (const auto &x : xs(k)) g.c(fImplies(), {x, "w"});
        g.r.lambda = -1;
        return g.r;
    });
    add("G_NANDkFromImplies", "k", ks, "NAND_k = sum_z u0(z) prod_i Implies(z,x_i)", [](const Params &p) {
        wantParams(p, 1, "G_NANDkFromImplies");
        int k = intParam(p, 0, "G_NANDkFromImplies", 1, kMaxTableArity);
        Builder g("G_NANDkFromImplies", fNAND(k), xs(k));
        g.c(fU0(), {"z"});
        for (const auto &x : xs(k)) g.c(fImplies(), {"z", x});
        return g.r;
    });
    add("G_ORkViaOR2XOR", "k", ks, "OR_k over {OR2, XOR, u0}", [](const Params &p) {
        GadgetRealization r = transitiveCompose(build("G_ORkFromImplies", p), build("G_ImpliesFromORXOR", {}));
        r.name = "G_ORkViaOR2XOR";
        return r;
    });
    add("G_NANDkViaOR2XOR", "k", ks, "NAND_k over {OR2, XOR, u0}", [](const Params &p) {
        GadgetRealization r = transitiveCompose(build("G_NANDkFromImplies", p), build("G_ImpliesFromORXOR", {}));
        r.name = "G_NANDkViaOR2XOR";
        return r;
    });
    add("G_OR2FromF", "a b", ab, "OR2 from f=(1,a,0,b), lambda = 1/b^2", [](const Params &p) {
        wantParams(p, 2, "G_OR2FromF");
        return or2FromF(p[0], p[1]);
    });
    add("G_NAND2FromF", "a b", ab, "NAND2 from f=(0,a,b,1), lambda = 1/a^2", [](const Params &p) {
        wantParams(p, 2, "G_NAND2FromF");
        return nand2FromF(p[0], p[1]);
    });
    std::vector<Params> abc{ps({1, 1, 2}), ps({2, 3, 1}), ps({1, -1, 3}), ps({ComplexRat(0, 1), 1, 1}),
                            ps({ComplexRat(mpq_class(1, 2)), 2, -3})};
    add("G_HFromNZ", "a b c", abc, "(0,x,x,1), x = a/(ab+c), from f=(1,a,b,c)", [](const Params &p) {
        wantParams(p, 3, "G_HFromNZ");
        return hFromNZ(p[0], p[1], p[2]);
    });
    add("G_NAND2FromNZ", "a b c", abc, "NAND2 from f=(1,a,b,c), abc != 0, ab != +-c", [](const Params &p) {
        wantParams(p, 3, "G_NAND2FromNZ");
        return nand2FromNZ(p[0], p[1], p[2]);
    });
    add("G_SymFromAntiDG", "a b", ab, "(1,-b/3,-b/3,b^2) from f=(1,a,b,-ab)", [](const Params &p) {
        wantParams(p, 2, "G_SymFromAntiDG");
        return symFromAntiDG(p[0], p[1]);
    });
    add("G_NAND2FromAntiDG", "a b", ab, "NAND2 from f=(1,a,b,-ab)", [](const Params &p) {
        wantParams(p, 2, "G_NAND2FromAntiDG");
        return nand2FromAntiDG(p[0], p[1]);
    });
    add("G_NAND2ByCover", "", none, "NAND2(x,y) = -sum_v u0(v) OR3(x,y,v) OR2(v,x) OR2(v,y)", [](const Params &p) {
        wantParams(p, 0, "G_NAND2ByCover");
        Builder g("G_NAND2ByCover", fNAND(2), {"x", "y"});
        nand2Cover(g, "x", "y", "");
        return g.r;
    });
    add("G_U1FromU0", "", none, "u1 = -u0", [](const Params &p) {
        wantParams(p, 0, "G_U1FromU0");
        Builder g("G_U1FromU0", fU1(), {"x"});
        g.c(fU0(), {"x"});
        g.r.lambda = -1;
        return g.r;
    });
    add("G_FOR", "", none, "[z = x or y] = sum_w OR3(x,y,w) NAND2(z,w) u1(z) u0(w)", [](const Params &p) {
        wantParams(p, 0, "G_FOR");
        Builder g("G_FOR", forTable(), {"x", "y", "z"});
        g.c(fOR(3), {"x", "y", "w"});
        g.c(fNAND(2), {"z", "w"});
        g.c(fU1(), {"z"});
        g.c(fU0(), {"w"});
        return g.r;
    });
    add("G_FAND", "", none, "[z = x and y] = -sum_w NAND3(x,y,w) OR2(z,w) u0(w) u0(z)", [](const Params &p) {
        wantParams(p, 0, "G_FAND");
        Builder g("G_FAND", fandTable(), {"x", "y", "z"});
        g.c(fNAND(3), {"x", "y", "w"});
        g.c(fOR(2), {"z", "w"});
        g.c(fU0(), {"w"});
        g.c(fU0(), {"z"});
        g.r.lambda = -1;
        return g.r;
    });
    add("G_FNOT", "", none, "[y = not x] = XOR(x,y)", [](const Params &p) {
        wantParams(p, 0, "G_FNOT");
        Builder g("G_FNOT", fXOR(), {"x", "y"});
        g.c(fXOR(), {"x", "y"});
        return g.r;
    });
    add("G_FORStrict", "", none, "[z = x or y] over {OR3, OR2, u0}", [](const Params &p) {
        wantParams(p, 0, "G_FORStrict");
        Builder g("G_FORStrict", forTable(), {"x", "y", "z"});
        forStrict(g, "x", "y", "z", "");
        return g.r;
    });
    add("G_ExactOneStep", "", none, "[t = s + c] over {OR3, OR2, u0}", [](const Params &p) {
        wantParams(p, 0, "G_ExactOneStep");
        Builder g("G_ExactOneStep", exactOneStepTable(), {"s", "c", "t"});
        exactOneStep(g, "s", "c", "t", "");
        return g.r;
    });
    add("G_EQ2FromXOR", "", none, "EQ2(x,y) = sum_z XOR(x,z) XOR(z,y)", [](const Params &p) {
        wantParams(p, 0, "G_EQ2FromXOR");
        Builder g("G_EQ2FromXOR", fEQ(2), {"x", "y"});
        g.c(fXOR(), {"x", "z"});
        g.c(fXOR(), {"z", "y"});
        return g.r;
    });
    add("G_EQ3FromXOR", "", none, "EQ3(x,y,z) = sum_w XOR(w,x) XOR(w,y) XOR(w,z)", [](const Params &p) {
        wantParams(p, 0, "G_EQ3FromXOR");
        Builder g("G_EQ3FromXOR", fEQ(3), {"x", "y", "z"});
        g.c(fXOR(), {"w", "x"});
        g.c(fXOR(), {"w", "y"});
        g.c(fXOR(), {"w", "z"});
        return g.r;
    });
    std::vector<Params> ms{ps({1}), ps({2}), ps({3}), ps({4})};
    add("G_ORGate", "m", ms, "OR gate relation on (g, c1..cm) over {OR3, OR2, XOR, u0}", [](const Params &p) {
        wantParams(p, 1, "G_ORGate");
        int m = intParam(p, 0, "G_ORGate", 1, kMaxTableArity - 1);
        Names ext{"g"};
        for (const auto &c : xs(m, "c")) ext.push_back(c);
        Builder g("G_ORGate", orGateTable(m), ext);
        orGate(g, "g", xs(m, "c"), "");
        return g.r;
    });
    add("G_ONE", "k", ks, "ONE_k as an exactly-one chain pinned by Delta1", [](const Params &p) {
        wantParams(p, 1, "G_ONE");
        int k = intParam(p, 0, "G_ONE", 1, kMaxTableArity);
        Builder g("G_ONE", fONE(k), xs(k));
        if (k == 1) {
            g.c(fDelta1(), {"x1"});
        } else {
            orGate(g, "g", xs(k), "");
            g.c(fDelta1(), {"g"});
        }
        return g.r;
    });
    add("G_XORTriangle", "", none, "XOR = sum_z OR2(x,z) OR2(y,z) OR2(x,y) u1(z), cyclic",
        [](const Params &p) {
            wantParams(p, 0, "G_XORTriangle");
            Builder g("G_XORTriangle", fXOR(), {"x", "y"});
            g.c(fOR(2), {"x", "z"});
            g.c(fOR(2), {"y", "z"});
            g.c(fOR(2), {"x", "y"});
            g.c(fU1(), {"z"});
            return g.r;
        },
        true);
    add("G_EQ2Cyclic", "", none, "EQ2 = sum_{w,z} OR2(w,x) OR2(z,y) XOR(y,w) XOR(x,z), cyclic",
        [](const Params &p) {
            wantParams(p, 0, "G_EQ2Cyclic");
            Builder g("G_EQ2Cyclic", fEQ(2), {"x", "y"});
            g.c(fOR(2), {"w", "x"});
            g.c(fOR(2), {"z", "y"});
            g.c(fXOR(), {"y", "w"});
            g.c(fXOR(), {"x", "z"});
            return g.r;
        },
        true);
    return d;
}

const std::vector<Def> &defs() {
    static const std::vector<Def> d = makeDefs();
    return d;
}

GadgetRealization build(const std::string &name, const Params &p) {
    for (const auto &d : defs()) {
        if (d.entry.name == name) return d.make(p);
    }
    throw InputError("unknown gadget: " + name);
}

} // namespace

const std::vector<CatalogEntry> &catalogEntries() {
    static const std::vector<CatalogEntry> e = [] {
        std::vector<CatalogEntry> out;
        for (const auto &d : defs()) out.push_back(d.entry);
        return out;
    }();
    return e;
}

GadgetRealization catalog(const std::string &name, const std::vector<ComplexRat> &params) {
    return build(name, params);
}

} // namespace acsp
