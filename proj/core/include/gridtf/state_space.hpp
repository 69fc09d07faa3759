#pragma once

#include "gridtf/rational.hpp"

#include <Eigen/Dense>

namespace gridtf {

/// Single-input single-output realization x' = A x + B u, y = C x + D u.
struct StateSpace {
    Eigen::MatrixXd A;
    Eigen::VectorXd B;
    Eigen::RowVectorXd C;
    double D = 0.0;

    int order() const { return static_cast<int>(A.rows()); }
};

/// Controllable-canonical realization. A biproper input is split into the
/// feedthrough D plus a strictly proper remainder by one polynomial
/// division; improper inputs are rejected.
StateSpace to_state_space(const RationalTF& tf);

/// Largest eigenvalue magnitude of A; 0 for an empty state.
double max_eigenvalue_magnitude(const StateSpace& ss);

}  // namespace gridtf
