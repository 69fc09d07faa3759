#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace gridtf::internal {

/// Parlett-Reinsch balancing by powers of two. Eigen's eigensolver does not
/// balance; companion matrices of wide-dynamic-range polynomials need it
/// before the Schur iteration.
inline void balance_in_place(Eigen::MatrixXd& a) {
    const double radix = 2.0, sqrdx = radix * radix;
    const Eigen::Index n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                r += std::abs(a(i, j));
                c += std::abs(a(j, i));
            }
            if (r == 0.0 || c == 0.0) continue;
            const double s = c + r;
            double f = 1.0, g = r / radix;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) *= 1.0 / f;
                a.col(i) *= f;
            }
        }
    }
}

}  // namespace gridtf::internal
