#include "densimat/schrodinger.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "densimat/fft.hpp"

namespace densimat {

PotentialSpec PotentialSpec::tabulated(const UniformGrid1D& g, std::vector<double> samples) {
  if (static_cast<int>(samples.size()) != g.n)
    throw PreconditionError("tabulated potential: sample count != grid size");
  PotentialSpec p;
  p.kind = Kind::Tabulated;
  p.table_grid = g;
  p.table = std::move(samples);
  return p;
}

double PotentialSpec::operator()(double x) const {
  switch (kind) {
    case Kind::Zero:
      return 0.0;
    case Kind::Harmonic:
      return 0.5 * mass * omega * omega * x * x;
    case Kind::Tabulated: {
      // periodic Catmull-Rom
      const int n = table_grid.n;
      double u = (x - table_grid.x0) / table_grid.dx;
      double fi = std::floor(u);
      double t = u - fi;
      int i = static_cast<int>(fi) % n;
      if (i < 0) i += n;
      auto at = [&](int j) { return table[((i + j) % n + n) % n]; };
      const double p0 = at(-1), p1 = at(0), p2 = at(1), p3 = at(2);
      return p1 + 0.5 * t * (p2 - p0 + t * (2 * p0 - 5 * p1 + 4 * p2 - p3 +
                                            t * (3 * (p1 - p2) + p3 - p0)));
    }
  }
  return 0.0;
}

double WaveFunction1D::norm2() const {
  double s = 0.0;
  for (const auto& v : data) s += std::norm(v);
  return s * grid.dx;
}

void WaveFunction1D::normalize() {
  const double s = std::sqrt(norm2());
  if (s == 0.0) throw PreconditionError("cannot normalize the zero wave function");
  for (auto& v : data) v /= s;
}

namespace {

UniformGrid1D lift_d_grid(const UniformGrid1D& g) {
  return UniformGrid1D(g.n, -g.length(), 2.0 * g.dx);
}

DensityField lift_impl(const WaveFunction1D& a, const WaveFunction1D& b) {
  if (!(a.grid == b.grid)) throw PreconditionError("lift: wave functions on different grids");
  const int n = a.grid.n;
  DensityField out(a.grid, lift_d_grid(a.grid), a.hbar, a.mass);
  for (int is = 0; is < n; ++is)
    for (int id = 0; id < n; ++id) {
      const int j = id - n / 2;
      const int ix = ((is - j) % n + n) % n;
      const int iy = ((is + j) % n + n) % n;
      out.field.at(is, id) = a.data[ix] * std::conj(b.data[iy]);
    }
  return out;
}

}  // namespace

DensityField lift_pure(const WaveFunction1D& psi) { return lift_impl(psi, psi); }
DensityField lift_pair(const WaveFunction1D& a, const WaveFunction1D& b) { return lift_impl(a, b); }

double hermiticity_defect(const DensityField& f) {
  const int ns = f.field.grid_s.n, nd = f.field.grid_d.n;
  double worst = 0.0;
  for (int is = 0; is < ns; ++is)
    for (int id = 0; id < nd; ++id) {
      const int mid = (nd - id) % nd;  // x_D -> -x_D with periodic wrap
      worst = std::max(worst, std::abs(f.field.at(is, mid) - std::conj(f.field.at(is, id))));
    }
  return worst;
}

std::vector<double> to_real_rep(const DensityField& f) {
  if (hermiticity_defect(f) >= 1e-8)
    throw PreconditionError("to_real_rep: field violates the hermiticity-swap condition");
  std::vector<double> r(f.field.data.size());
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = f.field.data[i].real() + f.field.data[i].imag();
  return r;
}

DensityField from_real_rep(const std::vector<double>& real_rep, const DensityField& proto) {
  const int ns = proto.field.grid_s.n, nd = proto.field.grid_d.n;
  if (real_rep.size() != static_cast<size_t>(ns) * nd)
    throw PreconditionError("from_real_rep: size mismatch");
  DensityField out(proto.field.grid_s, proto.field.grid_d, proto.hbar, proto.mass);
  for (int is = 0; is < ns; ++is)
    for (int id = 0; id < nd; ++id) {
      const int mid = (nd - id) % nd;
      const double a = real_rep[static_cast<size_t>(is) * nd + id];
      const double b = real_rep[static_cast<size_t>(is) * nd + mid];
      // symmetric part under x<->y (x_D mirror) is Re, antisymmetric is Im
      out.field.at(is, id) = cd(0.5 * (a + b), 0.5 * (a - b));
    }
  return out;
}

DmStepper::DmStepper(const DensityField& proto, const PotentialSpec& V, double dt)
    : ns_(proto.field.grid_s.n), nd_(proto.field.grid_d.n), dt_(dt) {
  if (!(dt > 0.0)) throw PreconditionError("evolve_dm: dt must be positive");
  const auto& gs = proto.field.grid_s;
  const auto& gd = proto.field.grid_d;
  pot_half_.resize(static_cast<size_t>(ns_) * nd_, cd(1.0, 0.0));
  if (!V.is_zero()) {
    for (int is = 0; is < ns_; ++is)
      for (int id = 0; id < nd_; ++id) {
        const double xs = gs.x(is), xd = gd.x(id);
        const auto [x, y] = xy_from_sd(xs, xd);
        pot_half_[static_cast<size_t>(is) * nd_ + id] =
            std::polar(1.0, -dt / (2.0 * proto.hbar) * (V(x) - V(y)));
      }
  }
  const auto a = gs.wavenumbers();
  const auto b = gd.wavenumbers();
  kin_.resize(static_cast<size_t>(ns_) * nd_);
  for (int i = 0; i < ns_; ++i)
    for (int j = 0; j < nd_; ++j)
      kin_[static_cast<size_t>(i) * nd_ + j] =
          std::polar(1.0, dt * proto.hbar * a[i] * b[j] / proto.mass);
}

void DmStepper::step(DensityField& f) const {
  auto* d = f.field.data.data();
  const size_t sz = f.field.data.size();
  for (size_t i = 0; i < sz; ++i) d[i] *= pot_half_[i];
  fft::transform_2d(d, ns_, nd_, 1, fft::kForward);
  for (size_t i = 0; i < sz; ++i) d[i] *= kin_[i];
  fft::transform_2d(d, ns_, nd_, 1, fft::kBackward);
  const double inv = 1.0 / (static_cast<double>(ns_) * nd_);
  for (size_t i = 0; i < sz; ++i) d[i] *= pot_half_[i] * inv;
}

DensityField evolve_dm(DensityField f, const PotentialSpec& V, double dt, int steps) {
  DmStepper s(f, V, dt);
  for (int i = 0; i < steps; ++i) s.step(f);
  return f;
}

PureStepper::PureStepper(const WaveFunction1D& proto, const PotentialSpec& V, double dt)
    : dt_(dt) {
  const int n = proto.grid.n;
  pot_half_.resize(n, cd(1.0, 0.0));
  if (!V.is_zero())
    for (int i = 0; i < n; ++i)
      pot_half_[i] = std::polar(1.0, -dt / (2.0 * proto.hbar) * V(proto.grid.x(i)));
  const auto k = proto.grid.wavenumbers();
  kin_.resize(n);
  for (int i = 0; i < n; ++i)
    kin_[i] = std::polar(1.0, -dt * proto.hbar * k[i] * k[i] / (2.0 * proto.mass));
}

void PureStepper::step(WaveFunction1D& psi) const {
  const int n = psi.grid.n;
  for (int i = 0; i < n; ++i) psi.data[i] *= pot_half_[i];
  fft::transform_1d(psi.data.data(), n, 1, fft::kForward);
  for (int i = 0; i < n; ++i) psi.data[i] *= kin_[i];
  fft::transform_1d(psi.data.data(), n, 1, fft::kBackward);
  const double inv = 1.0 / n;
  for (int i = 0; i < n; ++i) psi.data[i] *= pot_half_[i] * inv;
}

WaveFunction1D evolve_pure(WaveFunction1D psi, const PotentialSpec& V, double dt, int steps) {
  PureStepper s(psi, V, dt);
  for (int i = 0; i < steps; ++i) s.step(psi);
  return psi;
}

DensityField apply_Q_gen(const DensityField& f) {
  DensityField out = f;
  const int ns = f.field.grid_s.n, nd = f.field.grid_d.n;
  for (int is = 0; is < ns; ++is)
    for (int id = 0; id < nd; ++id) out.field.at(is, id) *= -f.field.grid_d.x(id);
  return out;
}

DensityField apply_P_gen(const DensityField& f) {
  DensityField out = f;
  out.field = spectral_derivative(f.field, 0, 1);
  for (auto& v : out.field.data) v *= cd(0.0, -f.hbar);
  return out;
}

namespace {

/// x_D-derivative of given order restricted to the x_D = 0 line.
std::vector<cd> slice_derivative(const ComplexScalarField2D& f, int order, DerivMode mode) {
  const int ns = f.grid_s.n, nd = f.grid_d.n;
  const int id0 = f.grid_d.index_of_zero();
  std::vector<cd> out(ns);
  if (order == 0) {
    for (int is = 0; is < ns; ++is) out[is] = f.at(is, id0);
    return out;
  }
  if (mode == DerivMode::Spectral) {
    ComplexScalarField2D d = spectral_derivative(f, 1, order);
    for (int is = 0; is < ns; ++is) out[is] = d.at(is, id0);
    return out;
  }
  const double h = f.grid_d.dx;
  auto v = [&](int is, int off) { return f.at(is, ((id0 + off) % nd + nd) % nd); };
  for (int is = 0; is < ns; ++is) {
    if (order == 1)
      out[is] = (v(is, -2) - 8.0 * v(is, -1) + 8.0 * v(is, 1) - v(is, 2)) / (12.0 * h);
    else if (order == 2)
      out[is] = (-v(is, -2) + 16.0 * v(is, -1) - 30.0 * v(is, 0) + 16.0 * v(is, 1) - v(is, 2)) /
                (12.0 * h * h);
    else
      throw PreconditionError("slice_derivative: unsupported order");
  }
  return out;
}

}  // namespace

SchrodingerObservables observe(const DensityField& f, const PotentialSpec& V, DerivMode mode) {
  const auto& gs = f.field.grid_s;
  const int ns = gs.n;
  SchrodingerObservables o;
  const auto phi0 = slice_derivative(f.field, 0, mode);
  const auto dphi = slice_derivative(f.field, 1, mode);
  const auto d2phi = slice_derivative(f.field, 2, mode);
  cd q{}, p{}, e{};
  for (int is = 0; is < ns; ++is) {
    const double xs = gs.x(is);
    q += xs * phi0[is];
    p += cd(0.0, f.hbar) * dphi[is];
    e += -f.hbar * f.hbar / (2.0 * f.mass) * d2phi[is] + V(xs) * phi0[is];
  }
  o.Q = (q * gs.dx).real();
  o.P = (p * gs.dx).real();
  o.E = (e * gs.dx).real();
  return o;
}

double observable_P_momentum(const ComplexScalarField2D& ksd, double hbar) {
  if (ksd.coords != Coords2D::K_SD)
    throw PreconditionError("observable_P_momentum: K_SD field required");
  const auto& kS = ksd.kaxis0;
  const auto& kD = ksd.kaxis1;
  int ikd0 = 0;
  for (size_t i = 0; i < kD.size(); ++i)
    if (kD[i] == 0.0) ikd0 = static_cast<int>(i);
  const double dkS = 2.0 * kPi / ksd.grid_d.length();
  const int nks = static_cast<int>(kS.size());
  cd p{};
  for (int a = 0; a < nks; ++a) {
    if (a == nks / 2) continue;  // unpaired Nyquist mode
    p += hbar * kS[a] * ksd.at(a, ikd0);
  }
  return (p * dkS).real();
}

double observable_E_momentum(const ComplexScalarField2D& ksd, const PotentialSpec& V, double hbar,
                             double mass) {
  if (!V.is_zero())
    throw PreconditionError("observable_E_momentum: free-field form requires V = 0");
  if (ksd.coords != Coords2D::K_SD)
    throw PreconditionError("observable_E_momentum: K_SD field required");
  const auto& kS = ksd.kaxis0;
  const auto& kD = ksd.kaxis1;
  int ikd0 = 0;
  for (size_t i = 0; i < kD.size(); ++i)
    if (kD[i] == 0.0) ikd0 = static_cast<int>(i);
  const double dkS = 2.0 * kPi / ksd.grid_d.length();
  cd e{};
  for (size_t a = 0; a < kS.size(); ++a) {
    const double ps = hbar * kS[a];
    e += ps * ps / (2.0 * mass) * ksd.at(static_cast<int>(a), ikd0);
  }
  return (e * dkS).real();
}

DensityField localized_solution(const UniformGrid1D& gs, const UniformGrid1D& gd, double x0,
                                double k0, double sigma, double t, double hbar, double mass) {
  // k0 must be an exact x_D mode so e^{-i k0 x_D} is periodic on gd
  const double jr = k0 * gd.length() / (2.0 * kPi);
  if (std::abs(jr - std::lround(jr)) > 1e-9)
    throw PreconditionError("localized_solution: k0 is not an exact x_D wavenumber of grid_d");
  const double center = x0 + hbar * k0 / mass * t;
  const auto g = gaussian_delta(gs, center, sigma);
  DensityField out(gs, gd, hbar, mass);
  std::vector<cd> phase(gd.n);
  for (int id = 0; id < gd.n; ++id) phase[id] = std::polar(1.0, -k0 * gd.x(id));
  for (int is = 0; is < gs.n; ++is)
    for (int id = 0; id < gd.n; ++id) out.field.at(is, id) = g[is] * phase[id];
  return out;
}

EnergySpectrum eigensolve_1d(const UniformGrid1D& grid, const PotentialSpec& V, int n_levels,
                             Kinetic kin, double hbar, double mass) {
  const int n = grid.n;
  if (n_levels < 1 || n_levels > n) throw PreconditionError("eigensolve_1d: bad n_levels");
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
  if (kin == Kinetic::Fd3) {
    const double c = hbar * hbar / (2.0 * mass * grid.dx * grid.dx);
    for (int i = 0; i < n; ++i) {
      H(i, i) += 2.0 * c + V(grid.x(i));
      H(i, (i + 1) % n) -= c;
      H(i, (i - 1 + n) % n) -= c;
    }
  } else {
    // K = F^-1 diag(hbar^2 k^2 / 2m) F, dense and real symmetric (circulant)
    const auto k = grid.wavenumbers();
    std::vector<double> kernel(n, 0.0);
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int a = 0; a < n; ++a)
        s += hbar * hbar * k[a] * k[a] / (2.0 * mass) * std::cos(2.0 * kPi * a * j / n);
      kernel[j] = s / n;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) H(i, j) = kernel[((j - i) % n + n) % n];
      H(i, i) += V(grid.x(i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  EnergySpectrum out;
  out.energies.assign(es.eigenvalues().data(), es.eigenvalues().data() + n_levels);
  out.states.resize(n_levels);
  const double scale = 1.0 / std::sqrt(grid.dx);
  for (int l = 0; l < n_levels; ++l) {
    out.states[l].resize(n);
    // fix sign so the largest-magnitude entry is positive (deterministic)
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(es.eigenvectors()(i, l)) > std::abs(es.eigenvectors()(imax, l))) imax = i;
    const double sgn = es.eigenvectors()(imax, l) >= 0.0 ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) out.states[l][i] = sgn * scale * es.eigenvectors()(i, l);
  }
  return out;
}

StationaryPair stationary_pair(const EnergySpectrum& spec, int a, int b, const UniformGrid1D& grid,
                               double hbar, double mass) {
  if (a < 0 || b < 0 || a >= static_cast<int>(spec.states.size()) ||
      b >= static_cast<int>(spec.states.size()))
    throw PreconditionError("stationary_pair: level index out of range");
  WaveFunction1D pa(grid, hbar, mass), pb(grid, hbar, mass);
  pa.data = spec.states[a];
  pb.data = spec.states[b];
  return {lift_pair(pa, pb), spec.energies[a] - spec.energies[b]};
}

}  // namespace densimat
