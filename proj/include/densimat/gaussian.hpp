#pragma once

#include <vector>

#include "densimat/grid.hpp"

namespace densimat {

/// Normalized Gaussian profile, the regularized delta:
/// g(x) = exp(-(x-center)^2 / 2 sigma^2) / (sigma sqrt(2 pi)).
double gaussian_value(double x, double center, double sigma);
/// d/dx of gaussian_value.
double gaussian_derivative(double x, double center, double sigma);

/// Samples of the regularized delta on a grid. Rejects under-resolved sigma
/// (sigma < min_dx_factor * dx) and profiles closer than 5 sigma to the
/// domain edges; within those bounds the quadrature equals 1 to < 1e-8.
std::vector<double> gaussian_delta(const UniformGrid1D& grid, double center, double sigma,
                                   double min_dx_factor = 4.0);

}  // namespace densimat
