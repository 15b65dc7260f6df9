#pragma once

#include "acsp/instance.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace acsp {

using json = nlohmann::json;

// ["re","im"] with decimal or p/q strings. Also accepted on input: a bare
// string or integer for a real value, and integers inside the pair.
json complexToJson(const ComplexRat &c);
ComplexRat complexFromJson(const json &j);

// {"arity":k,"table":[...2^k values...]}, {"arity":k,"sym":[...k+1...]},
// or {"builtin":"OR","arity":3}.
FuncTable funcFromJson(const json &j);
json funcToJson(const FuncTable &f);

// {"variables":[...], "functions":{name: function},
//  "constraints":[{"f": name-or-inline-function, "vars":[...], "linked": bool}]}
// A string "f" not found under "functions" is read as a builtin name whose
// arity is the number of listed variables. When "variables" is omitted
// they are collected from the constraints in order of appearance.
Instance instanceFromJson(const json &j);
json instanceToJson(const Instance &inst);

// A list of functions: a JSON array, or {"functions": array-or-object}.
std::vector<FuncTable> functionsFromJson(const json &j);

// Reads and parses a JSON file; InputError on I/O or syntax failure.
json readJsonFile(const std::string &path);

} // namespace acsp
