#include "foliation/gauss_rational.hpp"

#include "foliation/errors.hpp"

#include <sstream>

namespace foliation {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("rational literal with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("malformed rational literal: " + s);
    }
}

std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

GaussRational GaussRational::from_strings(const std::string& re, const std::string& im) {
    return {parse_rational(re), parse_rational(im)};
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw Error("division by zero Gaussian rational");
    Rational n = o.norm();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    im_ = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    return *this;
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) throw Error("inverse of zero Gaussian rational");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::complex<double> GaussRational::to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
}

std::string GaussRational::re_string() const { return rational_string(re_); }
std::string GaussRational::im_string() const { return rational_string(im_); }

}  // namespace foliation
