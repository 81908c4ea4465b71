#ifndef FOLIATION_VECTOR_FIELD_HPP
#define FOLIATION_VECTOR_FIELD_HPP

#include "foliation/matrix.hpp"
#include "foliation/series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace foliation {

class FormalDiffeo;

// X = sum_j h_j d/dx_j with truncated-series components. Components vanish
// at the origin unless allow_regular is set (the leaf tracer needs that
// escape hatch; nothing symbolic does).
class VectorField {
public:
    explicit VectorField(std::vector<TruncatedSeries> components, bool allow_regular = false);

    static VectorField zero(int nvars, int cap, Mode mode);
    // sum lambda_j x_j d/dx_j
    static VectorField diagonal(std::span<const long> lambda, int cap, Mode mode);

    int nvars() const { return static_cast<int>(comps_.size()); }
    int cap() const { return comps_[0].cap(); }
    Mode mode() const { return comps_[0].mode(); }
    const TruncatedSeries& component(int j) const { return comps_[j]; }
    const std::vector<TruncatedSeries>& components() const { return comps_; }
    bool allow_regular() const { return allow_regular_; }

    bool is_zero() const;
    double max_abs() const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator-() const;
    VectorField scaled(const Scalar& c) const;
    // componentwise product with a scalar function: (f X)_j = f * X_j
    VectorField multiplied_by(const TruncatedSeries& f) const;

    friend bool operator==(const VectorField& a, const VectorField& b);

    VectorField to_float() const;
    VectorField to_exact() const;

    void require_compatible(const VectorField& o) const;

private:
    std::vector<TruncatedSeries> comps_;
    bool allow_regular_;
};

// Germ of formal diffeomorphism: components with zero constant term and an
// invertible linear part (cached as a matrix).
class FormalDiffeo {
public:
    explicit FormalDiffeo(std::vector<TruncatedSeries> components);

    static FormalDiffeo identity(int nvars, int cap, Mode mode);
    static FormalDiffeo linear(const ScalarMatrix& m, int cap);

    int nvars() const { return static_cast<int>(comps_.size()); }
    int cap() const { return comps_[0].cap(); }
    Mode mode() const { return comps_[0].mode(); }
    const TruncatedSeries& component(int j) const { return comps_[j]; }
    const std::vector<TruncatedSeries>& components() const { return comps_; }
    const ScalarMatrix& linear_part() const { return linear_; }

    bool is_identity() const;
    bool is_tangent_to_identity() const;

    // f o phi
    TruncatedSeries apply_to(const TruncatedSeries& f) const;
    std::vector<std::complex<double>> apply_to_point(
        std::span<const std::complex<double>> p) const;

    FormalDiffeo to_float() const;

    friend bool operator==(const FormalDiffeo& a, const FormalDiffeo& b);

private:
    std::vector<TruncatedSeries> comps_;
    ScalarMatrix linear_;
};

// --- operations ---

// X(f) = sum_j h_j df/dx_j
TruncatedSeries apply_derivation(const VectorField& x, const TruncatedSeries& f);

// [X,Y]_j = X(Y_j) - Y(X_j)
VectorField lie_bracket(const VectorField& x, const VectorField& y);

ScalarMatrix linear_part(const VectorField& x);

// Lie-series exponential: component j is x_j + Y(x_j) + Y(Y(x_j))/2! + ...
// Exact mode requires a vanishing linear part (the series then terminates at
// the cap); float mode integrates the jet-coefficient ODE otherwise.
FormalDiffeo exp_formal(const VectorField& y);

// (D phi . X) o phi^{-1}; the production chain-rule path
VectorField pushforward(const FormalDiffeo& phi, const VectorField& x);
// exp(ad_Y) X = X + [Y,X] + [Y,[Y,X]]/2! + ...; only for generators with
// vanishing linear part, cross-checked against the chain rule in tests
VectorField pushforward_bch(const VectorField& y, const VectorField& x);

FormalDiffeo compose_diffeo(const FormalDiffeo& phi, const FormalDiffeo& psi);  // phi o psi
FormalDiffeo invert_diffeo(const FormalDiffeo& phi);

double distance(const VectorField& a, const VectorField& b);
double distance(const FormalDiffeo& a, const FormalDiffeo& b);

}  // namespace foliation

#endif
