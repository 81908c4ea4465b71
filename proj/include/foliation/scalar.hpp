#ifndef FOLIATION_SCALAR_HPP
#define FOLIATION_SCALAR_HPP

#include "foliation/errors.hpp"
#include "foliation/gauss_rational.hpp"

#include <complex>
#include <cstdint>

namespace foliation {

enum class Mode : std::uint8_t { exact, floating };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

// Complex scalar in one of two arithmetic modes. Mixing modes in any binary
// operation is an error, never a silent promotion.
class Scalar {
public:
    Scalar() : mode_(Mode::exact) {}

    static Scalar zero(Mode m) { return Scalar(m); }
    static Scalar one(Mode m) {
        Scalar s(m);
        if (m == Mode::exact)
            s.q_ = GaussRational(1);
        else
            s.f_ = 1.0;
        return s;
    }
    static Scalar exact(GaussRational q) {
        Scalar s(Mode::exact);
        s.q_ = std::move(q);
        return s;
    }
    static Scalar exact_int(long re, long im = 0) {
        return exact(GaussRational(Rational(re), Rational(im)));
    }
    static Scalar exact_ratio(long num, long den) {
        return exact(GaussRational(Rational(num, den), Rational(0)));
    }
    static Scalar floating(std::complex<double> z) {
        Scalar s(Mode::floating);
        s.f_ = z;
        return s;
    }

    Mode mode() const { return mode_; }
    const GaussRational& exact_value() const {
        require(Mode::exact);
        return q_;
    }
    std::complex<double> float_value() const {
        require(Mode::floating);
        return f_;
    }

    bool is_zero() const { return mode_ == Mode::exact ? q_.is_zero() : f_ == 0.0; }

    std::complex<double> to_complex() const {
        return mode_ == Mode::exact ? q_.to_complex() : f_;
    }
    Scalar to_float() const { return floating(to_complex()); }

    Scalar operator-() const {
        Scalar s(mode_);
        if (mode_ == Mode::exact)
            s.q_ = -q_;
        else
            s.f_ = -f_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        match(o);
        if (mode_ == Mode::exact)
            q_ += o.q_;
        else
            f_ += o.f_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        match(o);
        if (mode_ == Mode::exact)
            q_ -= o.q_;
        else
            f_ -= o.f_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        match(o);
        if (mode_ == Mode::exact)
            q_ *= o.q_;
        else
            f_ *= o.f_;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        match(o);
        if (o.is_zero()) throw Error("scalar division by zero");
        if (mode_ == Mode::exact)
            q_ /= o.q_;
        else
            f_ /= o.f_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.match(b);
        return a.mode_ == Mode::exact ? a.q_ == b.q_ : a.f_ == b.f_;
    }

    Scalar inverse() const {
        Scalar s(mode_);
        if (is_zero()) throw Error("inverse of zero scalar");
        if (mode_ == Mode::exact)
            s.q_ = q_.inverse();
        else
            s.f_ = 1.0 / f_;
        return s;
    }

    // integer scaling without constructing a second Scalar
    Scalar& scale_int(long k) {
        if (mode_ == Mode::exact)
            q_ *= GaussRational(k);
        else
            f_ *= static_cast<double>(k);
        return *this;
    }

    double abs() const { return std::abs(to_complex()); }

    Scalar pow(long e) const;

private:
    explicit Scalar(Mode m) : mode_(m) {}

    void require(Mode m) const {
        if (mode_ != m) throw ModeError(std::string("scalar is not in ") + mode_name(m) + " mode");
    }
    void match(const Scalar& o) const {
        if (mode_ != o.mode_) throw ModeError("mixed exact/float scalar arithmetic");
    }

    Mode mode_;
    GaussRational q_;
    std::complex<double> f_{0.0, 0.0};
};

}  // namespace foliation

#endif
