#include "acsp/complex_rat.hpp"

#include "acsp/error.hpp"

namespace acsp {

namespace {

mpq_class parsePart(const std::string &s) {
    if (s.empty()) throw InputError("empty rational literal");
    std::string t = s;
    if (t[0] == '+') t = t.substr(1);
    size_t start = (!t.empty() && t[0] == '-') ? 1 : 0;
    bool seenSlash = false, digitBefore = false, digitAfter = false;
    for (size_t k = start; k < t.size(); ++k) {
        char ch = t[k];
        if (ch == '/') {
            if (seenSlash) throw InputError("bad rational literal '" + s + "'");
            seenSlash = true;
        } else if (ch >= '0' && ch <= '9') {
            (seenSlash ? digitAfter : digitBefore) = true;
        } else {
            throw InputError("bad rational literal '" + s + "'");
        }
    }
    if (!digitBefore || (seenSlash && !digitAfter))
        throw InputError("bad rational literal '" + s + "'");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw InputError("bad rational literal '" + s + "'");
    if (seenSlash && sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

ComplexRat ComplexRat::parse(const std::string &re, const std::string &im) {
    return ComplexRat(parsePart(re), parsePart(im));
}

ComplexRat ComplexRat::inverse() const {
    if (isZero()) throw InputError("division by zero");
    if (isReal()) return ComplexRat(mpq_class(1) / re_);
    mpq_class n = re_ * re_ + im_ * im_;
    return ComplexRat(re_ / n, -im_ / n);
}

ComplexRat &ComplexRat::operator+=(const ComplexRat &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexRat &ComplexRat::operator-=(const ComplexRat &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexRat &ComplexRat::operator*=(const ComplexRat &o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

ComplexRat ComplexRat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ComplexRat base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string ComplexRat::str() const {
    if (isReal()) return re_.get_str();
    std::string s = sgn(re_) == 0 ? "" : re_.get_str();
    mpq_class a = abs(im_);
    std::string mag = a == 1 ? "" : a.get_str() + "*";
    if (s.empty()) return (sgn(im_) < 0 ? "-" : "") + mag + "i";
    return s + (sgn(im_) < 0 ? "-" : "+") + mag + "i";
}

} // namespace acsp
