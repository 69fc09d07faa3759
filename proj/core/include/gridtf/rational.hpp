#pragma once

#include "gridtf/curve.hpp"
#include "gridtf/polynomial.hpp"

#include <complex>
#include <vector>

namespace gridtf {

/// Rational transfer function num(s)/den(s). Synthesis outputs are stored
/// with a monic denominator and are proper (deg num <= deg den).
struct RationalTF {
    Polynomial num;
    Polynomial den;

    /// Normalizes the denominator to monic form, scaling the numerator by
    /// the same factor. Throws on a zero denominator.
    static RationalTF make(Polynomial num, Polynomial den);

    bool is_proper() const { return num.degree() <= den.degree(); }
    std::complex<double> eval(std::complex<double> s) const;
};

RationalTF tf_add(const RationalTF& a, const RationalTF& b);
RationalTF tf_scale(const RationalTF& tf, double k);

/// Rational delay approximation (1 - t/(2n) s)^n / (1 + t/(2n) s)^n used for
/// every exponential e^{-t s}; t = 0 collapses to 1. Orders outside [1, 10]
/// are rejected, larger ones get numerically intractable in implementations.
RationalTF pade_delay(double t, int n);

/// Raw segment translation: (y_i + d/s) P_i - (y_j + d/s) P_j over the
/// common denominator s (1 + t_i s/2n)^n (1 + t_j s/2n)^n. The numerator's
/// constant term is d - d = 0 by construction; it is checked against a
/// machine-epsilon-scale bound, zeroed symbolically and the factor s
/// cancelled exactly. The result is proper with all poles in the open left
/// half plane.
RationalTF segment_tf(const CurveSegment& seg, int n);

/// Sum of the segment transfer functions plus tail_value * pade_delay(t_last)
/// for the terminal hold, assembled over the factored common denominator so
/// shared delay factors are never duplicated. Strictly proper whenever the
/// curve starts at value 0.
RationalTF curve_to_tf(const PiecewiseCurve& curve, int n);

std::vector<std::complex<double>> poles(const RationalTF& tf);

/// True iff every denominator root has real part < -1e-9.
bool is_stable(const RationalTF& tf);

/// num(0)/den(0); throws if the denominator vanishes at the origin.
double dc_gain(const RationalTF& tf);

/// Cancels pole/zero pairs closer than `tol` (absolute distance). Reporting
/// aid only; synthesis never calls it.
RationalTF minreal(const RationalTF& tf, double tol);

/// Diagonal desired-behavior matrix: frequency->active power and
/// voltage->reactive power channels. Stored unsigned; the grid convention
/// applies a leading minus to both.
struct TdesMatrix {
    RationalTF fp;
    RationalTF vq;
};

struct AlphaParams;  // gridcode.hpp

/// fp = curve_to_tf(FCR) + curve_to_tf(FFR) as one rational function,
/// vq = curve_to_tf(VQ); both stable by construction.
TdesMatrix build_tdes(const AlphaParams& alpha, const GainSpec& gains, int n);

}  // namespace gridtf
