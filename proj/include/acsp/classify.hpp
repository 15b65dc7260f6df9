#pragma once

#include "acsp/func_table.hpp"
#include "acsp/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace acsp {

// Nonzero positions of f as table indices, ascending.
std::vector<size_t> support(const FuncTable &f);

bool isNZ(const FuncTable &f);
// Every mode flattening has rank <= 1, i.e. f is a product of unaries.
bool isDG(const FuncTable &f);

struct DGFactors {
    ComplexRat scalar;            // f = scalar * prod unaries[i](x_i)
    std::vector<FuncTable> unaries;
};
// Unary factors reproducing f exactly, or nullopt when f is not degenerate.
std::optional<DGFactors> factorDG(const FuncTable &f);

// Product of unaries, EQ2 and XOR.
bool isED(const FuncTable &f);
// Support closed under coordinatewise AND and OR.
bool hasImpSupport(const FuncTable &f);
// Product of unaries and Implies.
bool isIM(const FuncTable &f);

enum class ClassifyMode { WithXOR, NoXOR };
enum class Tier { Tractable_FLC, Acyc2SAT_Hard, SharpLOGCFL_Hard };

std::string tierName(Tier t);
std::string modeName(ClassifyMode m);
ClassifyMode modeFromName(const std::string &s); // with-xor | no-xor

struct Membership {
    bool nz, dg, ed, impSupport, im;
};

struct Verdict {
    Tier tier = Tier::Tractable_FLC;
    ClassifyMode mode = ClassifyMode::WithXOR;
    std::vector<Membership> members;
    std::optional<size_t> notED; // first function outside ED
    std::optional<size_t> notIM; // first function outside IM, when it decided the tier
    json toJson(const std::vector<std::string> &names = {}) const;
};

Membership membership(const FuncTable &f);
Verdict classify(const std::vector<FuncTable> &F, ClassifyMode mode);

} // namespace acsp
