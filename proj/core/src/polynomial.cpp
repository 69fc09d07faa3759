#include "gridtf/polynomial.hpp"

#include <Eigen/Dense>

#include "internal/balancing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gridtf {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw std::invalid_argument("polynomial coefficient not finite");
    }
    trim();
}

Polynomial Polynomial::constant(double c) {
    Polynomial p;
    if (c != 0.0) p.coeffs_ = {c};
    return p;
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double Polynomial::eval(double s) const {
    double y = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) y = y * s + *it;
    return y;
}

std::complex<double> Polynomial::eval(std::complex<double> s) const {
    std::complex<double> y = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) y = y * s + *it;
    return y;
}

Polynomial& Polynomial::operator*=(double k) {
    for (double& c : coeffs_) c *= k;
    trim();
    return *this;
}

void Polynomial::trim(double rel_tol) {
    const double cut = rel_tol > 0.0 ? rel_tol * max_abs_coeff() : 0.0;
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
    return Polynomial(std::move(out));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
    return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<double> out(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Polynomial(std::move(out));
}

Polynomial poly_scale(const Polynomial& p, double k) {
    Polynomial out = p;
    out *= k;
    return out;
}

Polynomial poly_pow(const Polynomial& p, int n) {
    if (n < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Polynomial result = Polynomial::constant(1.0);
    Polynomial base = p;
    while (n > 0) {
        if (n & 1) result = poly_mul(result, base);
        base = poly_mul(base, base);
        n >>= 1;
    }
    return result;
}

PolyDivision poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    std::vector<double> rem = a.coeffs();
    const int db = b.degree();
    int dr = a.degree();
    if (dr < db) return {Polynomial(), a};
    std::vector<double> quot(dr - db + 1, 0.0);
    const double lead = b.leading();
    for (int k = dr - db; k >= 0; --k) {
        const double q = rem[k + db] / lead;
        quot[k] = q;
        for (int j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
    }
    rem.resize(db > 0 ? db : 0);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_shift_down(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<double> out(p.coeffs().begin() + 1, p.coeffs().end());
    return Polynomial(std::move(out));
}

std::vector<std::complex<double>> poly_roots(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) return {};
    // Substitute s = gamma z with gamma the geometric mean of the root
    // magnitudes so the scaled roots cluster around unit size.
    const double lead = p.leading();
    double gamma = 1.0;
    if (p[0] != 0.0) gamma = std::pow(std::abs(p[0] / lead), 1.0 / n);
    if (!(gamma > 0.0) || !std::isfinite(gamma)) gamma = 1.0;

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) companion(i, i + 1) = 1.0;
    double scale = 1.0;  // gamma^(n-j) applied to coefficient j
    for (int j = n - 1; j >= 0; --j) {
        scale /= gamma;
        companion(n - 1, j) = -p[static_cast<std::size_t>(j)] / lead * scale;
    }
    internal::balance_in_place(companion);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = gamma * solver.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace gridtf
