#ifndef LANDAU_QSL_RADIAL_SOLUTION_HPP
#define LANDAU_QSL_RADIAL_SOLUTION_HPP

#include <vector>

#include "landau_qsl/scaled_problem.hpp"

namespace lqsl {

/// Sampled radial function S(s) of one scaled problem. After normalization
/// the integral of S^2 s ds over [0, s_max] is one.
struct RadialSolution {
    ScaledProblem problem;
    std::vector<double> grid;
    std::vector<double> values;
    double alpha_tilde = 0.0;
    int nodes = 0;
    double norm_factor = 1.0;
};

} // namespace lqsl

#endif
