#include "acsp/classify.hpp"
#include "acsp/error.hpp"
#include "acsp/gadgets.hpp"

namespace acsp {

json PinResult::toJson() const {
    json p = json::array();
    for (auto [c, b] : pins) p.push_back({c, b});
    return {{"pins", p}, {"free", {first, second}}, {"lambda", complexToJson(lambda)}, {"h", funcToJson(h)}};
}

// (1,x,y,z) with xyz != 0 and xy != z.
bool isNonDegenerateBinaryForm(const FuncTable &h) {
    if (h.arity() != 2 || !h.at(size_t(0)).isOne()) return false;
    const ComplexRat &x = h.at(size_t(1)), &y = h.at(size_t(2)), &z = h.at(size_t(3));
    return !(x * y * z).isZero() && x * y != z;
}

std::optional<PinResult> pinSearchBinary(const FuncTable &f) {
    int k = f.arity();
    if (k < 2) throw InputError("pin search needs arity >= 2");
    if (!isNZ(f)) throw InputError("pin search needs a table with no zero entries");
    if (isDG(f)) throw InputError("pin search needs a table that is not a product of unaries");
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            std::vector<int> rest;
            for (int t = 0; t < k; ++t)
                if (t != i && t != j) rest.push_back(t);
            for (size_t a = 0; a < (size_t(1) << rest.size()); ++a) {
                std::vector<uint8_t> bits(k, 0);
                PinResult pr;
                for (size_t r = 0; r < rest.size(); ++r) {
                    int b = int((a >> (rest.size() - 1 - r)) & 1u);
                    bits[rest[r]] = uint8_t(b);
                    pr.pins.push_back({rest[r], b});
                }
                std::vector<ComplexRat> vals;
                for (int bi = 0; bi < 2; ++bi) {
                    for (int bj = 0; bj < 2; ++bj) {
                        bits[i] = uint8_t(bi);
                        bits[j] = uint8_t(bj);
                        vals.push_back(f.at(bits));
                    }
                }
                pr.first = i;
                pr.second = j;
                pr.lambda = vals[0].inverse();
                for (auto &v : vals) v *= pr.lambda;
                pr.h = FuncTable(2, vals);
                if (isNonDegenerateBinaryForm(pr.h)) return pr;
            }
        }
    }
    return std::nullopt;
}

} // namespace acsp
