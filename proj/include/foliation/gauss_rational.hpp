#ifndef FOLIATION_GAUSS_RATIONAL_HPP
#define FOLIATION_GAUSS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace foliation {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Element of Q(i): exact complex number with rational real and imaginary parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit GaussRational(long v) : re_(v), im_(0) {}

    static GaussRational from_strings(const std::string& re, const std::string& im);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussRational inverse() const;

    std::complex<double> to_complex() const;

    // canonical "p/q" (or "p" for integers) strings, stable under round-trip
    std::string re_string() const;
    std::string im_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

// parses "p", "-p", "p/q"; throws ValidationError on malformed input
Rational parse_rational(const std::string& s);
std::string rational_string(const Rational& r);

}  // namespace foliation

#endif
