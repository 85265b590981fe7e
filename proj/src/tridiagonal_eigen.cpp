#include "cubicop/tridiagonal_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cubicop/errors.hpp"

namespace cubicop {

TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag,
                                             std::span<const double> offdiag) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) return {};
    if (static_cast<int>(offdiag.size()) != n - 1)
        throw ShapeError("symmetric_tridiagonal_eigen: offdiag must have length n-1");

    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    std::copy(offdiag.begin(), offdiag.end(), e.begin());
    // Only the first row of the accumulated rotation matrix is tracked.
    std::vector<double> z(static_cast<std::size_t>(n), 0.0);
    z[0] = 1.0;

    constexpr int max_sweeps = 60;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) + dd == dd) break;
            }
            if (m == l) break;
            if (iter++ == max_sweeps)
                throw NumericalError("symmetric_tridiagonal_eigen: no convergence for eigenvalue " +
                                     std::to_string(l) + " of " + std::to_string(n));
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            int i = m - 1;
            for (; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    TridiagonalEigen out;
    out.values.reserve(order.size());
    out.first_components.reserve(order.size());
    for (std::size_t k : order) {
        out.values.push_back(d[k]);
        out.first_components.push_back(z[k]);
    }
    return out;
}

}  // namespace cubicop
