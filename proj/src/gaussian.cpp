#include "densimat/gaussian.hpp"

#include <cmath>
#include <string>

namespace densimat {

double gaussian_value(double x, double center, double sigma) {
  const double u = (x - center) / sigma;
  return std::exp(-0.5 * u * u) / (sigma * std::sqrt(2.0 * kPi));
}

double gaussian_derivative(double x, double center, double sigma) {
  return -(x - center) / (sigma * sigma) * gaussian_value(x, center, sigma);
}

std::vector<double> gaussian_delta(const UniformGrid1D& grid, double center, double sigma,
                                   double min_dx_factor) {
  if (!(sigma > 0.0)) throw PreconditionError("gaussian_delta: sigma must be positive");
  if (sigma < min_dx_factor * grid.dx)
    throw PreconditionError("gaussian_delta: sigma = " + std::to_string(sigma) +
                            " under-resolved on dx = " + std::to_string(grid.dx) +
                            " (requires sigma >= " + std::to_string(min_dx_factor) + "*dx)");
  const double lo = grid.x0, hi = grid.x0 + grid.length();
  if (center - 5.0 * sigma < lo || center + 5.0 * sigma > hi)
    throw PreconditionError("gaussian_delta: support closer than 5 sigma to the domain edge");
  std::vector<double> g(grid.n);
  for (int i = 0; i < grid.n; ++i) g[i] = gaussian_value(grid.x(i), center, sigma);
  return g;
}

}  // namespace densimat
