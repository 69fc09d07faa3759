#include "gridtf/state_space.hpp"

#include "internal/balancing.hpp"

#include <stdexcept>

namespace gridtf {

StateSpace to_state_space(const RationalTF& tf) {
    if (!tf.is_proper()) throw std::invalid_argument("to_state_space: improper transfer function");
    if (tf.den.is_zero()) throw std::invalid_argument("to_state_space: zero denominator");

    // Monic denominator, then split off the feedthrough.
    const double lead = tf.den.leading();
    const Polynomial den = poly_scale(tf.den, 1.0 / lead);
    Polynomial num = poly_scale(tf.num, 1.0 / lead);

    StateSpace ss;
    const int n = den.degree();
    if (num.degree() == n && n >= 0) {
        const auto div = poly_divmod(num, den);
        ss.D = div.quotient[0];
        num = div.remainder;
    }
    ss.A = Eigen::MatrixXd::Zero(n, n);
    ss.B = Eigen::VectorXd::Zero(n);
    ss.C = Eigen::RowVectorXd::Zero(n);
    if (n == 0) return ss;

    for (int i = 0; i + 1 < n; ++i) ss.A(i, i + 1) = 1.0;
    for (int j = 0; j < n; ++j) ss.A(n - 1, j) = -den[static_cast<std::size_t>(j)];
    ss.B(n - 1) = 1.0;
    for (int j = 0; j <= num.degree(); ++j) ss.C(j) = num[static_cast<std::size_t>(j)];
    return ss;
}

double max_eigenvalue_magnitude(const StateSpace& ss) {
    if (ss.order() == 0) return 0.0;
    Eigen::MatrixXd balanced = ss.A;
    internal::balance_in_place(balanced);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(balanced, /*computeEigenvectors=*/false);
    double m = 0.0;
    for (int i = 0; i < ss.order(); ++i) m = std::max(m, std::abs(solver.eigenvalues()(i)));
    return m;
}

}  // namespace gridtf
