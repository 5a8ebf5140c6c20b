#pragma once

#include <complex>
#include <vector>

#include "densimat/grid.hpp"

namespace densimat {

using cd = std::complex<double>;

enum class Coords2D { SD, XY, K_SD, K_XY };

/// Complex scalar field sampled on a 2-D product lattice.
///
/// coords == SD:   axis 0 is x_S (grid_s), axis 1 is x_D (grid_d).
/// coords == XY:   axis 0 is x (grid_s), axis 1 is y (grid_d).
/// coords == K_SD: axis 0 is k_S, axis 1 is k_D (FFT order, see kaxis0/kaxis1);
///                 grid_s/grid_d still hold the originating spatial grids.
/// coords == K_XY: axis 0 is k_x, axis 1 is k_y, same bookkeeping.
struct ComplexScalarField2D {
  UniformGrid1D grid_s, grid_d;
  Coords2D coords = Coords2D::SD;
  std::vector<cd> data;                 // row-major, [i0 * n1 + i1]
  std::vector<double> kaxis0, kaxis1;   // populated for K_* coords only

  ComplexScalarField2D() = default;
  ComplexScalarField2D(const UniformGrid1D& gs, const UniformGrid1D& gd, Coords2D c)
      : grid_s(gs), grid_d(gd), coords(c), data(static_cast<size_t>(gs.n) * gd.n) {}

  int n0() const { return coords == Coords2D::K_SD ? grid_d.n : grid_s.n; }
  int n1() const { return coords == Coords2D::K_SD ? grid_s.n : grid_d.n; }
  cd& at(int i0, int i1) { return data[static_cast<size_t>(i0) * n1() + i1]; }
  const cd& at(int i0, int i1) const { return data[static_cast<size_t>(i0) * n1() + i1]; }
};

/// Coordinate change of Eq.-style half-sum / difference pairs.
inline std::pair<double, double> sd_from_xy(double x, double y) {
  return {0.5 * (x + y), y - x};
}
inline std::pair<double, double> xy_from_sd(double xs, double xd) {
  return {xs - 0.5 * xd, xs + 0.5 * xd};
}

/// Position-space (x,y) field -> momentum-space, kernel e^{-i kx x + i ky y}
/// with prefactor dx dy / (2 pi). Requires coords == XY.
ComplexScalarField2D dft2(const ComplexScalarField2D& f);
/// Inverse of dft2; requires coords == K_XY.
ComplexScalarField2D idft2(const ComplexScalarField2D& f);

/// Canonical (x_S,x_D) field -> (k_S,k_D), kernel e^{+i kD xS + i kS xD}
/// with prefactor dxS dxD / (2 pi); axis 0 of the result is k_S.
/// This is dft2 composed with both coordinate changes, done in one pass.
ComplexScalarField2D to_ksd(const ComplexScalarField2D& f);
ComplexScalarField2D from_ksd(const ComplexScalarField2D& f);

/// Spectral derivative along one axis: multiplication by (ik)^order in
/// transform space. For odd orders the unpaired Nyquist mode is zeroed.
ComplexScalarField2D spectral_derivative(const ComplexScalarField2D& f, int axis, int order);

/// Samples of the field translated by delta along an axis (band-limited shift).
ComplexScalarField2D spectral_shift(const ComplexScalarField2D& f, int axis, double delta);

/// dx0*dx1 * sum over samples (fixed order).
cd quadrature2d(const ComplexScalarField2D& f);

/// Exact lift re-indexing: field on an n x n (x,y) lattice with equal spacing
/// -> SD lattice with grid_S = x-grid and grid_D = {n, spacing 2 dx, length 2L}.
ComplexScalarField2D sd_view_of_xy(const ComplexScalarField2D& f);

}  // namespace densimat
