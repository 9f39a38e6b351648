#include "ptdirac/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace ptdirac {

double brent(const std::function<double(double)>& f, double a, double b,
             double tol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("brent: interval does not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * 2.22e-16 * std::abs(b) + 0.5 * tol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double r = fb / fc;
                double t = fa / fc;
                p = s * (2.0 * xm * t * (t - r) - (b - a) * (r - 1.0));
                q = (t - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

scan_result scan_roots(const std::function<std::optional<double>(double)>& f,
                       double lo, double hi, int grid_points, double tol) {
    scan_result out;
    if (grid_points < 2 || !(hi > lo)) return out;

    auto wrapped = [&f](double x) {
        auto v = f(x);
        return v ? *v : std::nan("");
    };

    double prev_x = lo;
    auto prev = f(lo);
    double excl_start = prev ? std::nan("") : lo;
    for (int i = 1; i < grid_points; ++i) {
        double x = lo + (hi - lo) * i / (grid_points - 1.0);
        auto cur = f(x);
        if (!cur) {
            if (std::isnan(excl_start)) excl_start = prev_x;
        } else {
            if (!std::isnan(excl_start)) {
                out.excluded.emplace_back(excl_start, x);
                excl_start = std::nan("");
            }
            if (prev && *prev * *cur < 0.0) {
                double r = brent([&wrapped](double t) { return wrapped(t); }, prev_x, x, tol);
                out.roots.push_back({r, {prev_x, x}});
            }
        }
        prev_x = x;
        prev = cur;
    }
    if (!std::isnan(excl_start)) out.excluded.emplace_back(excl_start, hi);
    return out;
}

}  // namespace ptdirac
