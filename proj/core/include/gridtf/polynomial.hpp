#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gridtf {

/// Real univariate polynomial, coefficients stored in ascending powers of s.
/// The zero polynomial is an empty coefficient vector; any other polynomial
/// is kept trimmed so that the highest stored coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial constant(double c);

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<double>& coeffs() const { return coeffs_; }

    double operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
    double max_abs_coeff() const;

    double eval(double s) const;
    std::complex<double> eval(std::complex<double> s) const;

    Polynomial& operator*=(double k);

    /// Drops trailing coefficients with |c| <= rel_tol * max|c|. Removes pure
    /// floating-point dust left by cancelling sums; rel_tol = 0 trims exact
    /// zeros only.
    void trim(double rel_tol = 0.0);

private:
    std::vector<double> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& p, double k);
Polynomial poly_pow(const Polynomial& p, int n);

/// Quotient and remainder of a / b with b nonzero: a = q*b + r, deg r < deg b.
struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};
PolyDivision poly_divmod(const Polynomial& a, const Polynomial& b);

/// Shifts coefficients down by one power, i.e. divides by s. The constant
/// term must already be (numerically) zero; callers assert that themselves.
Polynomial poly_shift_down(const Polynomial& p);

/// Roots via eigenvalues of the companion matrix of the monic polynomial.
std::vector<std::complex<double>> poly_roots(const Polynomial& p);

}  // namespace gridtf
