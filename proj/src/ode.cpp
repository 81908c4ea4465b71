#include "foliation/ode.hpp"

#include <algorithm>
#include <cmath>

namespace foliation {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// embedded 4th-order weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

double error_norm(const CVec& y0, const CVec& y1, const CVec& err, double atol, double rtol) {
    double m = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        m = std::max(m, std::abs(err[i]) / scale);
    }
    return m;
}

}  // namespace

OdeStatus integrate_ode(const std::function<void(double, const CVec&, CVec&)>& rhs, double t0,
                        double t1, CVec& y, const OdeOptions& opts,
                        const std::function<bool(double, const CVec&)>& on_step) {
    const double dir = t1 >= t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (span == 0.0) return OdeStatus::done;
    const std::size_t n = y.size();
    CVec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y1(n), err(n);

    double t = t0;
    double h = opts.h0 > 0 ? opts.h0 : span / 100.0;
    h = std::min(h, span);

    rhs(t, y, k1);
    for (long step = 0; step < opts.max_steps; ++step) {
        const double rem = std::abs(t1 - t);
        if (rem == 0.0) return OdeStatus::done;
        const bool final_step = h >= rem;
        const double hs = final_step ? t1 - t : dir * h;
        if (std::abs(hs) < opts.hmin) return OdeStatus::step_underflow;

        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + hs * a21 * k1[i];
        rhs(t + c2 * hs, tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * hs, tmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * hs, tmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * hs, tmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] =
                y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + hs, tmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            y1[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + hs, y1, k7);  // FSAL
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> y4 =
                y[i] + hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
            err[i] = y1[i] - y4;
        }

        double en = error_norm(y, y1, err, opts.atol, opts.rtol);
        if (en <= 1.0) {
            t = final_step ? t1 : t + hs;
            y.swap(y1);
            k1.swap(k7);
            if (on_step && !on_step(t, y)) return OdeStatus::stopped;
            if (t == t1) return OdeStatus::done;
        }
        double factor = en > 0 ? 0.9 * std::pow(en, -0.2) : 5.0;
        factor = std::clamp(factor, 0.2, 5.0);
        h *= factor;
    }
    return OdeStatus::max_steps;
}

}  // namespace foliation
