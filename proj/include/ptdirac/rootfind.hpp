#ifndef PTDIRAC_ROOTFIND_HPP
#define PTDIRAC_ROOTFIND_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace ptdirac {

// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
double brent(const std::function<double(double)>& f, double a, double b,
             double tol = 1e-12, int max_iter = 200);

struct bracketed_root {
    double root;
    std::pair<double, double> bracket;
};

struct scan_result {
    std::vector<bracketed_root> roots;
    // maximal sub-intervals where the function was undefined
    std::vector<std::pair<double, double>> excluded;
};

// Scans f on a uniform grid over [lo, hi], brackets sign changes and refines
// each by Brent.  f may return nullopt where it is undefined; such cells are
// collected into excluded intervals and skipped.
scan_result scan_roots(const std::function<std::optional<double>(double)>& f,
                       double lo, double hi, int grid_points, double tol = 1e-12);

}  // namespace ptdirac

#endif
