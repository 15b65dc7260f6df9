#include "acsp/engine.hpp"
#include "acsp/error.hpp"

namespace acsp {

std::string methodName(CountMethod m) {
    switch (m) {
    case CountMethod::Auto: return "auto";
    case CountMethod::Brute: return "brute";
    case CountMethod::JoinTree: return "jointree";
    case CountMethod::EDPath: return "ed";
    }
    return "?";
}

CountMethod methodFromName(const std::string &s) {
    if (s == "auto") return CountMethod::Auto;
    if (s == "brute") return CountMethod::Brute;
    if (s == "jointree") return CountMethod::JoinTree;
    if (s == "ed") return CountMethod::EDPath;
    throw InputError("unknown count method '" + s + "'");
}

json CountResult::statsJson() const {
    return json{{"nodes_visited", nodesVisited},
                {"max_table", maxTable},
                {"components", components},
                {"free_vars", freeVars}};
}

json CountResult::toJson() const {
    json j{{"count", complexToJson(value)}, {"method", methodName(method)}, {"stats", statsJson()}};
    if (!trace.empty()) j["trace"] = trace;
    return j;
}

CountResult count(const Instance &inst, CountMethod m, const CountOptions &opt) {
    switch (m) {
    case CountMethod::Brute: return countBrute(inst, opt);
    case CountMethod::JoinTree: return countJoinTree(inst, opt);
    case CountMethod::EDPath: return countEDPath(inst, opt);
    case CountMethod::Auto:
        if (edPathApplicable(inst)) return countEDPath(inst, opt);
        return countJoinTree(inst, opt);
    }
    throw InternalError("unhandled count method");
}

} // namespace acsp
