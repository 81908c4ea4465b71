#ifndef FOLIATION_JET_FLOW_HPP
#define FOLIATION_JET_FLOW_HPP

#include "foliation/ode.hpp"
#include "foliation/vector_field.hpp"

#include <complex>

namespace foliation {

// Indexing of the full monomial basis of C[x]/m^(cap+1), canonical order.
class JetBasis {
public:
    JetBasis(int nvars, int cap);

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    int size() const { return static_cast<int>(monomials_.size()); }
    const Multidegree& monomial(int i) const { return monomials_[i]; }
    int index_of(const Multidegree& d) const;

    CVec coefficients(const TruncatedSeries& s) const;
    TruncatedSeries series(const CVec& coeffs, Mode mode) const;

private:
    int nvars_;
    int cap_;
    std::vector<Multidegree> monomials_;
};

// The time-t flow of a float-mode vector field as a cap-jet, computed by
// integrating the linear coefficient ODE dv/ds = D_{tY} v on the jet space
// (v_j(0) = x_j, v_j(1) = x_j o exp(tY)) with adaptive step control.
FormalDiffeo flow_time(const VectorField& y, std::complex<double> t, double rtol = 1e-13);

}  // namespace foliation

#endif
