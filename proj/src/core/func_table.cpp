#include "acsp/func_table.hpp"

#include "acsp/error.hpp"

#include <algorithm>
#include <bit>

namespace acsp {

FuncTable::FuncTable(int arity, std::vector<ComplexRat> vals) : arity_(arity), vals_(std::move(vals)) {
    if (arity < 0 || arity > kMaxTableArity)
        throw InputError("table arity " + std::to_string(arity) + " out of range 0.." +
                         std::to_string(kMaxTableArity));
    if (vals_.size() != (size_t(1) << arity))
        throw InputError("table of arity " + std::to_string(arity) + " needs " +
                         std::to_string(size_t(1) << arity) + " values, got " +
                         std::to_string(vals_.size()));
}

size_t FuncTable::indexOf(const std::vector<uint8_t> &bits) {
    size_t idx = 0;
    for (uint8_t b : bits) idx = (idx << 1) | (b & 1u);
    return idx;
}

const ComplexRat &FuncTable::at(const std::vector<uint8_t> &bits) const {
    if (int(bits.size()) != arity_) throw InputError("assignment length does not match arity");
    return vals_[indexOf(bits)];
}

bool FuncTable::isZero() const {
    return std::all_of(vals_.begin(), vals_.end(), [](const ComplexRat &v) { return v.isZero(); });
}

bool FuncTable::isSymmetric() const {
    std::vector<const ComplexRat *> byWeight(arity_ + 1, nullptr);
    for (size_t idx = 0; idx < vals_.size(); ++idx) {
        int w = std::popcount(idx);
        if (!byWeight[w]) byWeight[w] = &vals_[idx];
        else if (*byWeight[w] != vals_[idx]) return false;
    }
    return true;
}

std::string FuncTable::str() const {
    std::string s = "(";
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (i) s += ",";
        s += vals_[i].str();
    }
    return s + ")";
}

FuncTable SymTable::toTable() const {
    int k = arity();
    if (k < 0) throw InputError("symmetric weight vector must be non-empty");
    if (k > kMaxTableArity) throw InputError("symmetric arity too large");
    std::vector<ComplexRat> vals(size_t(1) << k);
    for (size_t idx = 0; idx < vals.size(); ++idx) vals[idx] = w[std::popcount(idx)];
    return FuncTable(k, std::move(vals));
}

std::optional<SymTable> SymTable::fromTable(const FuncTable &f) {
    if (!f.isSymmetric()) return std::nullopt;
    SymTable s;
    s.w.resize(f.arity() + 1);
    for (int j = 0; j <= f.arity(); ++j) s.w[j] = f.at((size_t(1) << j) - 1);
    return s;
}

namespace {

FuncTable symBool(int k, auto pred) {
    SymTable s;
    for (int w = 0; w <= k; ++w) s.w.push_back(ComplexRat(pred(w) ? 1 : 0));
    return s.toTable();
}

void needArity(const std::string &name, int arity, int lo, int hi) {
    if (arity < lo || arity > hi) {
        throw InputError("builtin " + name + " does not admit arity " + std::to_string(arity));
    }
}

} // namespace

FuncTable builtin(const std::string &name, int k) {
    if (name == "EQ") {
        needArity(name, k, 1, kMaxTableArity);
        return symBool(k, [k](int w) { return w == 0 || w == k; });
    }
    if (name == "NEQ") {
        needArity(name, k, 2, kMaxTableArity);
        return symBool(k, [k](int w) { return w != 0 && w != k; });
    }
    if (name == "OR") {
        needArity(name, k, 1, kMaxTableArity);
        return symBool(k, [](int w) { return w >= 1; });
    }
    if (name == "AND") {
        needArity(name, k, 1, kMaxTableArity);
        return symBool(k, [k](int w) { return w == k; });
    }
    if (name == "NAND") {
        needArity(name, k, 1, kMaxTableArity);
        return symBool(k, [k](int w) { return w < k; });
    }
    if (name == "XOR") {
        needArity(name, k, 2, 2);
        return symBool(k, [](int w) { return w % 2 == 1; });
    }
    if (name == "ONE") {
        needArity(name, k, 1, kMaxTableArity);
        return symBool(k, [](int w) { return w == 1; });
    }
    if (name == "Implies") {
        needArity(name, k, 2, 2);
        return FuncTable::binary(1, 1, 0, 1);
    }
    if (name == "RImplies") {
        needArity(name, k, 2, 2);
        return FuncTable::binary(1, 0, 1, 1);
    }
    if (name == "Delta0") {
        needArity(name, k, 1, 1);
        return FuncTable::unary(1, 0);
    }
    if (name == "Delta1") {
        needArity(name, k, 1, 1);
        return FuncTable::unary(0, 1);
    }
    if (name == "u0") {
        needArity(name, k, 1, 1);
        return FuncTable::unary(1, -1);
    }
    if (name == "u1") {
        needArity(name, k, 1, 1);
        return FuncTable::unary(-1, 1);
    }
    throw InputError("unknown builtin function '" + name + "'");
}

std::optional<std::string> builtinName(const FuncTable &f) {
    int k = f.arity();
    if (k == 0) return std::nullopt;
    static const char *fixed[] = {"Implies", "RImplies", "Delta0", "Delta1", "u0", "u1"};
    for (const char *n : fixed) {
        int a = (std::string(n) == "Implies" || std::string(n) == "RImplies") ? 2 : 1;
        if (a == k && builtin(n, k) == f) return std::string(n);
    }
    static const char *sym[] = {"EQ", "NEQ", "OR", "AND", "NAND", "XOR", "ONE"};
    for (const char *n : sym) {
        if ((std::string(n) == "NEQ" && k < 2) || (std::string(n) == "XOR" && k != 2)) continue;
        if (builtin(n, k) == f) return std::string(n) + std::to_string(k);
    }
    return std::nullopt;
}

FuncTable pin(const FuncTable &f, int pos, int b) {
    int k = f.arity();
    if (pos < 0 || pos >= k) throw InputError("pin position out of range");
    if (b != 0 && b != 1) throw InputError("pin value must be 0 or 1");
    std::vector<ComplexRat> out(size_t(1) << (k - 1));
    int low = k - 1 - pos; // bit index of x_pos
    for (size_t r = 0; r < out.size(); ++r) {
        size_t hi = (r >> low) << (low + 1);
        size_t lo = r & ((size_t(1) << low) - 1);
        out[r] = f.at(hi | (size_t(b) << low) | lo);
    }
    return FuncTable(k - 1, std::move(out));
}

FuncTable project(const FuncTable &f, int pos) {
    FuncTable a = pin(f, pos, 0), b = pin(f, pos, 1);
    std::vector<ComplexRat> out(a.size());
    for (size_t r = 0; r < out.size(); ++r) out[r] = a.at(r) + b.at(r);
    return FuncTable(f.arity() - 1, std::move(out));
}

FuncTable normalize(const FuncTable &f, const ComplexRat &lambda) {
    if (lambda.isZero()) throw InputError("normalization factor must be nonzero");
    return scale(f, lambda);
}

std::pair<FuncTable, ComplexRat> normalizeLeading(const FuncTable &f) {
    for (const auto &v : f.values()) {
        if (!v.isZero()) {
            ComplexRat inv = v.inverse();
            return {scale(f, inv), v};
        }
    }
    throw InputError("cannot normalize the zero function");
}

FuncTable expand(const FuncTable &f, int pos) {
    int k = f.arity();
    if (pos < 0 || pos > k) throw InputError("expand position out of range");
    if (k + 1 > kMaxTableArity) throw InputError("expanded arity too large");
    std::vector<ComplexRat> out(size_t(1) << (k + 1));
    int low = k - pos; // bit index of the new variable in the result
    for (size_t r = 0; r < out.size(); ++r) {
        size_t hi = (r >> (low + 1)) << low;
        size_t lo = r & ((size_t(1) << low) - 1);
        out[r] = f.at(hi | lo);
    }
    return FuncTable(k + 1, std::move(out));
}

FuncTable link(const FuncTable &f, int i, int j) {
    int k = f.arity();
    if (i < 0 || j < 0 || i >= k || j >= k || i == j) throw InputError("bad link positions");
    std::vector<ComplexRat> out(size_t(1) << (k - 1));
    for (size_t r = 0; r < out.size(); ++r) {
        // Reconstruct the full assignment: positions other than j in order.
        std::vector<uint8_t> full(k);
        int src = 0;
        for (int p = 0; p < k; ++p) {
            if (p == j) continue;
            full[p] = uint8_t((r >> (k - 2 - src)) & 1u);
            ++src;
        }
        full[j] = full[i];
        out[r] = f.at(FuncTable::indexOf(full));
    }
    FuncTable g(k - 1, std::move(out));
    g.setLinked(true);
    return g;
}

FuncTable multiply(const FuncTable &a, const FuncTable &b) {
    if (a.arity() != b.arity()) throw InputError("multiply: arity mismatch");
    std::vector<ComplexRat> out(a.size());
    for (size_t r = 0; r < out.size(); ++r) out[r] = a.at(r) * b.at(r);
    return FuncTable(a.arity(), std::move(out));
}

FuncTable scale(const FuncTable &f, const ComplexRat &c) {
    std::vector<ComplexRat> out(f.size());
    for (size_t r = 0; r < out.size(); ++r) out[r] = f.at(r) * c;
    return FuncTable(f.arity(), std::move(out));
}

FuncTable permute(const FuncTable &f, const std::vector<int> &perm) {
    int k = f.arity();
    if (int(perm.size()) != k) throw InputError("permutation length mismatch");
    std::vector<int> seen(k, 0);
    for (int p : perm) {
        if (p < 0 || p >= k || seen[p]++) throw InputError("not a permutation");
    }
    std::vector<ComplexRat> out(f.size());
    std::vector<uint8_t> y(k), x(k);
    for (size_t r = 0; r < out.size(); ++r) {
        for (int j = 0; j < k; ++j) y[j] = uint8_t((r >> (k - 1 - j)) & 1u);
        for (int j = 0; j < k; ++j) x[j] = y[perm[j]];
        out[r] = f.at(FuncTable::indexOf(x));
    }
    return FuncTable(k, std::move(out));
}

} // namespace acsp
