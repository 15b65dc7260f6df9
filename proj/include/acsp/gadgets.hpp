#pragma once

#include "acsp/instance.hpp"
#include "acsp/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace acsp {

// target(x) = lambda * sum over auxiliaries y of prod(base constraints).
// Variables 0..k-1 of `base` are the external x's, the rest are auxiliaries.
struct GadgetRealization {
    std::string name;
    FuncTable target;
    int k = 0;
    Instance base;
    ComplexRat lambda{1};

    int numAux() const { return base.numVars() - k; }
    json toJson() const;
};

GadgetRealization realizationFromJson(const json &j);

struct VerifyReport {
    bool identity = false;
    bool acyclic = false;
    std::optional<std::vector<uint8_t>> counterexample; // external assignment
    ComplexRat expected, got;                           // at the counterexample
    std::vector<std::string> gyoTrace;                  // when cyclic
    bool ok() const { return identity && acyclic; }
    json toJson() const;
};

struct VerifyOptions {
    int limit = 20;          // max k + m for exhaustive enumeration
    bool allowLinked = false; // accept linked tables in the base
};

// Full enumeration of all 2^(k+m) assignments plus GYO on the base
// hypergraph with one dangling edge per external variable.
VerifyReport verifyRealization(const GadgetRealization &r, const VerifyOptions &opt = {});
// Same identity, checked per external assignment with the join-tree counter
// (for gadgets too large to enumerate). Requires an acyclic base.
VerifyReport verifyRealizationByCounting(const GadgetRealization &r, const VerifyOptions &opt = {});
// Exhaustive when k + m fits the limit, by counting otherwise.
VerifyReport verifyAny(const GadgetRealization &r, const VerifyOptions &opt = {});

// Catalog. Parameters are Gaussian rationals; arities (k) are passed as
// integer-valued parameters.
struct CatalogEntry {
    std::string name;
    std::string params;                              // e.g. "k", "a b"
    std::vector<std::vector<ComplexRat>> samples;    // parameter sets for sweeps
    bool cyclic = false;                             // known-cyclic example
    std::string summary;
};
const std::vector<CatalogEntry> &catalogEntries();
GadgetRealization catalog(const std::string &name, const std::vector<ComplexRat> &params = {});
// m = 0 realization of f by itself.
GadgetRealization identityRealization(const FuncTable &f);

// Substitute R2 (a realization of g) into every occurrence of g in R1's base.
GadgetRealization transitiveCompose(const GadgetRealization &r1, const GadgetRealization &r2);

struct Rewrite {
    Instance instance;
    ComplexRat scalar{1}; // count(I) = scalar * count(instance)
    int occurrences = 0;
};
// Replace every constraint whose table equals f by R's base. R is verified
// first unless the caller vouches for it.
Rewrite rewriteInstance(const Instance &inst, const FuncTable &f, const GadgetRealization &r,
                        bool verify = true);

// A pinning of all but two coordinates, an order of the remaining two, and
// the normalized binary h = lambda * f^pins of the form (1,x,y,z) with
// xyz != 0 and xy != z.
struct PinResult {
    std::vector<std::pair<int, int>> pins; // (coordinate, bit)
    int first = 0, second = 1;             // free coordinates, in h's order
    ComplexRat lambda;
    FuncTable h;
    json toJson() const;
};
bool isNonDegenerateBinaryForm(const FuncTable &h);
std::optional<PinResult> pinSearchBinary(const FuncTable &f);

} // namespace acsp
