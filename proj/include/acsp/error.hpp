#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace acsp {

// Rejected input: malformed files, violated preconditions, bad parameters.
// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

// An instance (or a rewritten instance, or a gadget) whose constraint
// hypergraph failed the GYO reduction. Carries the reduction traces that
// led to the verdict, already rendered as text lines.
class NotAcyclic : public InputError {
public:
    NotAcyclic(const std::string &what, std::vector<std::string> trace)
        : InputError(what), trace_(std::move(trace)) {}
    const std::vector<std::string> &trace() const { return trace_; }

private:
    std::vector<std::string> trace_;
};

// A broken internal invariant (join forest connectivity, a composed gadget
// that no longer verifies, a compiler producing a cyclic instance).
// The CLI maps these to exit code 1.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string &what) : std::logic_error(what) {}
};

} // namespace acsp
