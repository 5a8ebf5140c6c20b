#include "densimat/field2d.hpp"

#include "densimat/fft.hpp"

namespace densimat {

namespace {

void apply_axis_phase(ComplexScalarField2D& f, const std::vector<double>& k, int axis,
                      double coeff) {
  const int N0 = f.n0(), N1 = f.n1();
  for (int i = 0; i < N0; ++i)
    for (int j = 0; j < N1; ++j) {
      const double kk = axis == 0 ? k[i] : k[j];
      f.data[static_cast<size_t>(i) * N1 + j] *= std::polar(1.0, coeff * kk);
    }
}

void scale(ComplexScalarField2D& f, double s) {
  for (auto& v : f.data) v *= s;
}

}  // namespace

ComplexScalarField2D dft2(const ComplexScalarField2D& f) {
  if (f.coords != Coords2D::XY) throw PreconditionError("dft2: field must be in XY coords");
  ComplexScalarField2D out = f;
  out.coords = Coords2D::K_XY;
  fft::transform_2d_mixed(out.data.data(), f.grid_s.n, f.grid_d.n, fft::kForward, fft::kBackward);
  out.kaxis0 = f.grid_s.wavenumbers();
  out.kaxis1 = f.grid_d.wavenumbers();
  apply_axis_phase(out, out.kaxis0, 0, -f.grid_s.x0);
  apply_axis_phase(out, out.kaxis1, 1, +f.grid_d.x0);
  scale(out, f.grid_s.dx * f.grid_d.dx / (2.0 * kPi));
  return out;
}

ComplexScalarField2D idft2(const ComplexScalarField2D& f) {
  if (f.coords != Coords2D::K_XY) throw PreconditionError("idft2: field must be in K_XY coords");
  ComplexScalarField2D out = f;
  out.coords = Coords2D::XY;
  apply_axis_phase(out, f.kaxis0, 0, +f.grid_s.x0);
  apply_axis_phase(out, f.kaxis1, 1, -f.grid_d.x0);
  fft::transform_2d_mixed(out.data.data(), f.grid_s.n, f.grid_d.n, fft::kBackward, fft::kForward);
  const double dk0 = 2.0 * kPi / f.grid_s.length();
  const double dk1 = 2.0 * kPi / f.grid_d.length();
  scale(out, dk0 * dk1 / (2.0 * kPi));
  out.kaxis0.clear();
  out.kaxis1.clear();
  return out;
}

ComplexScalarField2D to_ksd(const ComplexScalarField2D& f) {
  if (f.coords != Coords2D::SD) throw PreconditionError("to_ksd: field must be in SD coords");
  const int nS = f.grid_s.n, nD = f.grid_d.n;
  // backward transform on both axes: frequency along S is k_D, along D is k_S
  ComplexScalarField2D tmp = f;
  fft::transform_2d(tmp.data.data(), nS, nD, 1, fft::kBackward);
  const auto kD = f.grid_s.wavenumbers();
  const auto kS = f.grid_d.wavenumbers();
  ComplexScalarField2D out(f.grid_s, f.grid_d, Coords2D::K_SD);
  out.kaxis0 = kS;
  out.kaxis1 = kD;
  const double pref = f.grid_s.dx * f.grid_d.dx / (2.0 * kPi);
  for (int a = 0; a < nS; ++a)
    for (int b = 0; b < nD; ++b) {
      const cd phase = std::polar(1.0, kD[a] * f.grid_s.x0 + kS[b] * f.grid_d.x0);
      out.data[static_cast<size_t>(b) * nS + a] =
          pref * phase * tmp.data[static_cast<size_t>(a) * nD + b];
    }
  return out;
}

ComplexScalarField2D from_ksd(const ComplexScalarField2D& f) {
  if (f.coords != Coords2D::K_SD) throw PreconditionError("from_ksd: field must be in K_SD coords");
  const int nS = f.grid_s.n, nD = f.grid_d.n;
  ComplexScalarField2D tmp(f.grid_s, f.grid_d, Coords2D::SD);
  const auto& kS = f.kaxis0;
  const auto& kD = f.kaxis1;
  const double pref = f.grid_s.dx * f.grid_d.dx / (2.0 * kPi);
  for (int a = 0; a < nS; ++a)
    for (int b = 0; b < nD; ++b) {
      const cd phase = std::polar(1.0, -(kD[a] * f.grid_s.x0 + kS[b] * f.grid_d.x0));
      tmp.data[static_cast<size_t>(a) * nD + b] =
          phase * f.data[static_cast<size_t>(b) * nS + a] / pref;
    }
  fft::transform_2d(tmp.data.data(), nS, nD, 1, fft::kForward);
  scale(tmp, 1.0 / (static_cast<double>(nS) * nD));
  return tmp;
}

ComplexScalarField2D spectral_derivative(const ComplexScalarField2D& f, int axis, int order) {
  if (f.coords != Coords2D::SD && f.coords != Coords2D::XY)
    throw PreconditionError("spectral_derivative: position-space field required");
  const int N0 = f.grid_s.n, N1 = f.grid_d.n;
  ComplexScalarField2D out = f;
  const auto k = axis == 0 ? f.grid_s.wavenumbers() : f.grid_d.wavenumbers();
  const int n = axis == 0 ? N0 : N1;
  if (axis == 0)
    fft::transform(out.data.data(), {N0, N1}, 1, fft::kForward);
  else
    fft::transform(out.data.data(), {N1}, N0, fft::kForward);
  for (int i = 0; i < N0; ++i)
    for (int j = 0; j < N1; ++j) {
      const int idx = axis == 0 ? i : j;
      cd m = std::pow(cd(0.0, k[idx]), order);
      if (order % 2 != 0 && idx == n / 2) m = 0.0;  // unpaired Nyquist mode
      out.data[static_cast<size_t>(i) * N1 + j] *= m;
    }
  if (axis == 0)
    fft::transform(out.data.data(), {N0, N1}, 1, fft::kBackward);
  else
    fft::transform(out.data.data(), {N1}, N0, fft::kBackward);
  // the axis-0 path transformed both axes; undo normalization accordingly
  scale(out, axis == 0 ? 1.0 / (static_cast<double>(N0) * N1) : 1.0 / N1);
  return out;
}

ComplexScalarField2D spectral_shift(const ComplexScalarField2D& f, int axis, double delta) {
  const int N0 = f.grid_s.n, N1 = f.grid_d.n;
  ComplexScalarField2D out = f;
  const auto k = axis == 0 ? f.grid_s.wavenumbers() : f.grid_d.wavenumbers();
  if (axis == 0)
    fft::transform(out.data.data(), {N0, N1}, 1, fft::kForward);
  else
    fft::transform(out.data.data(), {N1}, N0, fft::kForward);
  for (int i = 0; i < N0; ++i)
    for (int j = 0; j < N1; ++j)
      out.data[static_cast<size_t>(i) * N1 + j] *= std::polar(1.0, k[axis == 0 ? i : j] * delta);
  if (axis == 0)
    fft::transform(out.data.data(), {N0, N1}, 1, fft::kBackward);
  else
    fft::transform(out.data.data(), {N1}, N0, fft::kBackward);
  scale(out, axis == 0 ? 1.0 / (static_cast<double>(N0) * N1) : 1.0 / N1);
  return out;
}

cd quadrature2d(const ComplexScalarField2D& f) {
  cd s{};
  for (const auto& v : f.data) s += v;
  return s * (f.grid_s.dx * f.grid_d.dx);
}

ComplexScalarField2D sd_view_of_xy(const ComplexScalarField2D& f) {
  if (f.coords != Coords2D::XY) throw PreconditionError("sd_view_of_xy: XY field required");
  if (f.grid_s.n != f.grid_d.n || f.grid_s.dx != f.grid_d.dx || f.grid_s.x0 != f.grid_d.x0)
    throw PreconditionError("sd_view_of_xy: axes must share one grid");
  const int n = f.grid_s.n;
  UniformGrid1D gd(n, -f.grid_s.length(), 2.0 * f.grid_s.dx);
  ComplexScalarField2D out(f.grid_s, gd, Coords2D::SD);
  for (int is = 0; is < n; ++is)
    for (int id = 0; id < n; ++id) {
      const int j = id - n / 2;  // x_D = 2 dx j
      const int ix = ((is - j) % n + n) % n;
      const int iy = ((is + j) % n + n) % n;
      out.at(is, id) = f.at(ix, iy);
    }
  return out;
}

}  // namespace densimat
