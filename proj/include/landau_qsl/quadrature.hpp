#ifndef LANDAU_QSL_QUADRATURE_HPP
#define LANDAU_QSL_QUADRATURE_HPP

#include <span>
#include <stdexcept>

#include "landau_qsl/radial_solution.hpp"

namespace lqsl {

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Composite Simpson rule on a strictly increasing, possibly non-uniform grid.
/// An odd interval count closes with the three-point rule on the last interval.
double simpson(std::span<const double> x, std::span<const double> f);

/// Integral of S^2 s ds, including the [0, s0] piece from S ~ s^|m|.
double norm_integral(const RadialSolution& radial);

/// Rescales to unit norm. Throws QuadratureError when the outer 5% of the
/// grid carries more than 1e-8 of the norm.
RadialSolution normalize(RadialSolution radial);

struct OverlapResult {
    double value = 0.0;                      // integral of S_a s S_b s ds
    double estimated_quadrature_error = 0.0; // |Simpson(h) - Simpson(2h)| / 15
};

OverlapResult overlap_s(const RadialSolution& a, const RadialSolution& b);

/// Integral of S_a S_b s ds (no position operator).
double overlap(const RadialSolution& a, const RadialSolution& b);

/// Radial displacement of the equal-weight superposition of a and b, in
/// lambda_e units: 2 |<a|s|b>| beta^(-1/(n+2)).
double displacement(const RadialSolution& a, const RadialSolution& b, double beta);

/// Mean radial position (lambda_e units) of the equal-weight superposition at
/// time t seconds. The energies follow from the eigenvalues at field beta.
double mean_radius_t(const RadialSolution& a, const RadialSolution& b, double beta, double t_seconds);

} // namespace lqsl

#endif
