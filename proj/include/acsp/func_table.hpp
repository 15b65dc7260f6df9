#pragma once

#include "acsp/complex_rat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acsp {

// Largest arity a table may have; 2^20 entries is already ~100MB of mpq.
constexpr int kMaxTableArity = 20;

// f : {0,1}^k -> Gaussian rationals, stored as 2^k values. Index bit
// (k-1-j) holds x_j, so x_0 is the most significant bit and the table is in
// lexicographic order of (x_0, ..., x_{k-1}).
class FuncTable {
public:
    FuncTable() : arity_(0), vals_(1, ComplexRat(0)) {}
    FuncTable(int arity, std::vector<ComplexRat> vals);

    static FuncTable constant(const ComplexRat &c) { return FuncTable(0, {c}); }
    static FuncTable unary(const ComplexRat &a, const ComplexRat &b) { return FuncTable(1, {a, b}); }
    static FuncTable binary(const ComplexRat &a, const ComplexRat &b, const ComplexRat &c,
                            const ComplexRat &d) {
        return FuncTable(2, {a, b, c, d});
    }

    int arity() const { return arity_; }
    size_t size() const { return vals_.size(); }
    const std::vector<ComplexRat> &values() const { return vals_; }
    const ComplexRat &at(size_t idx) const { return vals_[idx]; }
    const ComplexRat &at(const std::vector<uint8_t> &bits) const;
    static size_t indexOf(const std::vector<uint8_t> &bits);
    // Bit of variable j inside table index idx.
    int bit(size_t idx, int j) const { return int((idx >> (arity_ - 1 - j)) & 1u); }

    bool isZero() const;
    bool isSymmetric() const;

    // Produced by identifying two arguments; the gadget layer refuses these.
    bool linked() const { return linked_; }
    void setLinked(bool v) { linked_ = v; }

    friend bool operator==(const FuncTable &a, const FuncTable &b) {
        return a.arity_ == b.arity_ && a.vals_ == b.vals_;
    }
    friend bool operator!=(const FuncTable &a, const FuncTable &b) { return !(a == b); }
    friend bool operator<(const FuncTable &a, const FuncTable &b) {
        if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
        return a.vals_ < b.vals_;
    }

    std::string str() const;

private:
    int arity_;
    std::vector<ComplexRat> vals_;
    bool linked_ = false;
};

// Symmetric function given by its weight vector [w_0, ..., w_k]:
// f(x) = w_{|x|}.
struct SymTable {
    std::vector<ComplexRat> w;
    int arity() const { return int(w.size()) - 1; }
    FuncTable toTable() const;
    static std::optional<SymTable> fromTable(const FuncTable &f);
};

// Named Boolean functions. Names: EQ, NEQ (not all equal), OR, AND, NAND,
// XOR (binary only), ONE (exactly one), Implies, RImplies, Delta0, Delta1,
// plus the unary weights u0 = [1,-1] and u1 = [-1,1].
// Throws InputError on an unknown name or an arity the name does not admit.
FuncTable builtin(const std::string &name, int arity);
// Shorthands used all over the place.
inline FuncTable fEQ(int k = 2) { return builtin("EQ", k); }
inline FuncTable fOR(int k = 2) { return builtin("OR", k); }
inline FuncTable fAND(int k = 2) { return builtin("AND", k); }
inline FuncTable fNAND(int k = 2) { return builtin("NAND", k); }
inline FuncTable fXOR() { return builtin("XOR", 2); }
inline FuncTable fONE(int k) { return builtin("ONE", k); }
inline FuncTable fImplies() { return builtin("Implies", 2); }
inline FuncTable fDelta0() { return builtin("Delta0", 1); }
inline FuncTable fDelta1() { return builtin("Delta1", 1); }
inline FuncTable fU0() { return builtin("u0", 1); }
inline FuncTable fU1() { return builtin("u1", 1); }
// Reverse lookup: "OR3", "Implies", "u0", ... or nullopt.
std::optional<std::string> builtinName(const FuncTable &f);

// Operations. Positions are 0-based.
// Fix x_pos = b; arity drops by one.
FuncTable pin(const FuncTable &f, int pos, int b);
// Sum out x_pos.
FuncTable project(const FuncTable &f, int pos);
// lambda * f; throws on lambda == 0.
FuncTable normalize(const FuncTable &f, const ComplexRat &lambda);
// f = c * g with g(t) = 1 at the first nonzero t; returns (g, c). Throws on f == 0.
std::pair<FuncTable, ComplexRat> normalizeLeading(const FuncTable &f);
// Insert a dummy variable at position pos (0..k).
FuncTable expand(const FuncTable &f, int pos);
// Identify x_j with x_i (i != j): the result has arity k-1, x_j removed,
// and is flagged linked.
FuncTable link(const FuncTable &f, int i, int j);
// Pointwise product of two tables of the same arity.
FuncTable multiply(const FuncTable &a, const FuncTable &b);
FuncTable scale(const FuncTable &f, const ComplexRat &c);
// g(y) = f(y_perm[0], ..., y_perm[k-1]); perm is a permutation of 0..k-1.
FuncTable permute(const FuncTable &f, const std::vector<int> &perm);

} // namespace acsp
