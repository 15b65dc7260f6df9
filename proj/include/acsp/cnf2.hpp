#pragma once

#include "acsp/engine.hpp"
#include "acsp/instance.hpp"

#include <array>
#include <string>
#include <vector>

namespace acsp {

// Literals use DIMACS numbering: +v / -v for variable v in 1..numVars.
// Unit clauses are stored padded as (l, l).
struct CNF2 {
    int numVars = 0;
    std::vector<std::array<int, 2>> clauses;
};

CNF2 parse2CNF(const std::string &text);
std::string writeDimacs(const CNF2 &phi);

// One constraint per clause over variables x1..xn: OR2, Implies (either
// direction), NAND2, or a unary when both literals share a variable.
Instance cnfToInstance(const CNF2 &phi);
CountResult count2SAT(const CNF2 &phi, CountMethod m = CountMethod::Auto, const CountOptions &opt = {});

struct Translated {
    Instance instance;
    ComplexRat scalar{1}; // count(input) = scalar * count(instance)
};
// OR2 and NAND2 occurrences rewritten over {Implies, u0}. Unary constraints
// pass through unchanged.
Translated translateToImplies(const Instance &inst);

// Implies(u,v) -> (-u v); [0,1] -> (u u); [1,0] -> (-u -u); [0,0] -> both;
// [1,1] -> (u -u).
CNF2 impliesTo2CNF(const Instance &inst);

} // namespace acsp
