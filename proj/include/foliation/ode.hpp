#ifndef FOLIATION_ODE_HPP
#define FOLIATION_ODE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace foliation {

using CVec = std::vector<std::complex<double>>;

struct OdeOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    double h0 = 0.0;  // 0 = auto
    double hmin = 1e-14;
    long max_steps = 2000000;
};

enum class OdeStatus { done, stopped, step_underflow, max_steps };

// Adaptive embedded Dormand-Prince 5(4). State is a complex vector; the
// independent variable is real. The callback sees every accepted step and
// may stop the integration by returning false.
OdeStatus integrate_ode(const std::function<void(double, const CVec&, CVec&)>& rhs, double t0,
                        double t1, CVec& y, const OdeOptions& opts,
                        const std::function<bool(double, const CVec&)>& on_step = {});

}  // namespace foliation

#endif
