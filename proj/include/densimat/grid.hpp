#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace densimat {

inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when an operation's preconditions are violated (maps to CLI exit code 2).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a run blows up numerically (maps to CLI exit code 3).
class NumericDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform periodic 1-D grid. Point i sits at x0 + i*dx; the domain has
/// length n*dx and wraps. n must be even and >= 4 so that the wavenumber set
/// {2*pi*j/L : j = -n/2 .. n/2-1} is symmetric apart from the lone Nyquist mode.
struct UniformGrid1D {
  int n = 0;
  double x0 = 0.0;
  double dx = 0.0;

  UniformGrid1D() = default;
  UniformGrid1D(int n_, double x0_, double dx_) : n(n_), x0(x0_), dx(dx_) {
    if (n < 4 || n % 2 != 0)
      throw PreconditionError("grid: n must be even and >= 4, got " + std::to_string(n));
    if (!(dx > 0.0)) throw PreconditionError("grid: dx must be positive");
  }

  /// Grid of n points covering [-L/2, L/2).
  static UniformGrid1D centered(int n, double length) {
    return UniformGrid1D(n, -length / 2.0, length / n);
  }

  double length() const { return n * dx; }
  double x(int i) const { return x0 + i * dx; }

  std::vector<double> points() const {
    std::vector<double> p(n);
    for (int i = 0; i < n; ++i) p[i] = x(i);
    return p;
  }

  /// Angular wavenumbers in FFT order: 0, dk, .., (n/2-1)dk, -n/2 dk, .., -dk.
  std::vector<double> wavenumbers() const {
    std::vector<double> k(n);
    const double dk = 2.0 * kPi / length();
    for (int i = 0; i < n; ++i) k[i] = dk * (i < n / 2 ? i : i - n);
    return k;
  }

  /// Index of the grid line x == 0; throws if no point sits exactly at zero.
  int index_of_zero() const {
    const double i = -x0 / dx;
    const int ii = static_cast<int>(std::lround(i));
    if (ii < 0 || ii >= n || std::abs(x(ii)) > 1e-12 * std::max(1.0, std::abs(x0)))
      throw PreconditionError("grid does not contain x = 0 as an exact grid line");
    return ii;
  }

  bool operator==(const UniformGrid1D& o) const {
    return n == o.n && x0 == o.x0 && dx == o.dx;
  }
};

/// Trapezoid quadrature on a periodic grid (exact for trigonometric data):
/// just dx * sum of samples, in fixed index order for determinism.
template <typename T>
T quadrature(const std::vector<T>& samples, double dx) {
  T s{};
  for (const auto& v : samples) s += v;
  return s * dx;
}

}  // namespace densimat
