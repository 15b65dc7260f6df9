#pragma once

#include "acsp/instance.hpp"
#include "acsp/json_io.hpp"

#include <gmpxx.h>
#include <string>
#include <vector>

namespace acsp {

enum class GateType { And, Or, Input };

struct Gate {
    std::string id;
    int level = 0;
    GateType type = GateType::Input;
    std::vector<int> children; // gate indices
    int input = -1;            // 0-based input index, INPUT gates only
    bool negated = false;
};

// Semi-unbounded, leveled, alternating, fan-out 1 (so a tree), negations on
// inputs only, AND fan-in exactly 2.
struct Circuit {
    int inputs = 0;
    std::vector<Gate> gates;
    int root = 0;
};

// {"inputs": n, "gates": [{"id","level","type","children"|"input","negated"}], "root": id}
// Validates every structural rule and throws InputError naming the first
// one broken.
Circuit circuitFromJson(const json &j);
json circuitToJson(const Circuit &c);
void validateCircuit(const Circuit &c);

std::vector<uint8_t> parseBits(const std::string &s, int n);

// Number of accepting subtrees on input x.
mpz_class countSubtrees(const Circuit &c, const std::vector<uint8_t> &x);

enum class CompileMode { Direct, Strict };
CompileMode compileModeFromName(const std::string &s); // direct|strict

struct CompiledCircuit {
    Instance instance;
    ComplexRat scalar{1}; // countSubtrees = scalar * count(instance)
};

// One variable per gate ("g:<id>") meaning "the gate is in the accepting
// subtree". Direct mode uses EQ3 and exactly-one relation tables (OR fan-in
// up to 11); strict mode rewrites them over {OR3, OR2, XOR, u0, Delta0,
// Delta1}.
CompiledCircuit compileCircuit(const Circuit &c, const std::vector<uint8_t> &x, CompileMode mode);

inline constexpr int kDirectMaxFanIn = 11;

} // namespace acsp
