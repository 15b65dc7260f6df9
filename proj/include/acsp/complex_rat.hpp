#pragma once

#include <gmpxx.h>

#include <string>

namespace acsp {

// Exact Gaussian rational re + i*im, both parts arbitrary-precision.
class ComplexRat {
public:
    ComplexRat() = default;
    ComplexRat(long v) : re_(v), im_(0) {}
    ComplexRat(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    ComplexRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static ComplexRat i() { return ComplexRat(mpq_class(0), mpq_class(1)); }
    // "p/q" or integer text for each part. Throws InputError on bad text.
    static ComplexRat parse(const std::string &re, const std::string &im = "0");

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool isOne() const { return re_ == 1 && sgn(im_) == 0; }
    bool isReal() const { return sgn(im_) == 0; }

    ComplexRat conj() const { return ComplexRat(re_, -im_); }
    // Throws InputError on zero.
    ComplexRat inverse() const;

    ComplexRat &operator+=(const ComplexRat &o);
    ComplexRat &operator-=(const ComplexRat &o);
    ComplexRat &operator*=(const ComplexRat &o);
    ComplexRat &operator/=(const ComplexRat &o) { return *this *= o.inverse(); }

    friend ComplexRat operator+(ComplexRat a, const ComplexRat &b) { return a += b; }
    friend ComplexRat operator-(ComplexRat a, const ComplexRat &b) { return a -= b; }
    friend ComplexRat operator*(ComplexRat a, const ComplexRat &b) { return a *= b; }
    friend ComplexRat operator/(ComplexRat a, const ComplexRat &b) { return a /= b; }
    ComplexRat operator-() const { return ComplexRat(-re_, -im_); }

    friend bool operator==(const ComplexRat &a, const ComplexRat &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexRat &a, const ComplexRat &b) { return !(a == b); }
    // Arbitrary total order (re, then im) so values can key ordered maps.
    friend bool operator<(const ComplexRat &a, const ComplexRat &b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : a.im_ < b.im_;
    }

    ComplexRat pow(long e) const;
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

} // namespace acsp
