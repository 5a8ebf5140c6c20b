#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "densimat/field2d.hpp"
#include "densimat/gaussian.hpp"

namespace densimat {

/// Real scalar potential V(x). Tabulated potentials are sampled on a grid and
/// evaluated off-lattice with periodic cubic (Catmull-Rom) interpolation.
struct PotentialSpec {
  enum class Kind { Zero, Harmonic, Tabulated };
  Kind kind = Kind::Zero;
  double omega = 0.0;
  double mass = 1.0;  // used by the harmonic form V = m omega^2 x^2 / 2
  UniformGrid1D table_grid;
  std::vector<double> table;

  static PotentialSpec zero() { return {}; }
  static PotentialSpec harmonic(double omega, double mass = 1.0) {
    PotentialSpec p;
    p.kind = Kind::Harmonic;
    p.omega = omega;
    p.mass = mass;
    return p;
  }
  static PotentialSpec tabulated(const UniformGrid1D& g, std::vector<double> samples);

  double operator()(double x) const;
  bool is_zero() const { return kind == Kind::Zero; }
};

struct WaveFunction1D {
  UniformGrid1D grid;
  std::vector<cd> data;
  double hbar = 1.0;
  double mass = 1.0;

  WaveFunction1D() = default;
  WaveFunction1D(const UniformGrid1D& g, double hbar_ = 1.0, double mass_ = 1.0)
      : grid(g), data(g.n), hbar(hbar_), mass(mass_) {}
  double norm2() const;  // integral of |psi|^2
  void normalize();
};

/// Two-coordinate field in canonical (x_S, x_D) storage.
struct DensityField {
  ComplexScalarField2D field;  // coords SD
  double hbar = 1.0;
  double mass = 1.0;

  DensityField() = default;
  DensityField(const UniformGrid1D& gs, const UniformGrid1D& gd, double hbar_ = 1.0,
               double mass_ = 1.0)
      : field(gs, gd, Coords2D::SD), hbar(hbar_), mass(mass_) {}
};

struct SchrodingerObservables {
  double Q = 0.0;  // position functional
  double P = 0.0;  // momentum functional
  double E = 0.0;  // energy functional
};

enum class DerivMode { Spectral, Fd4 };

/// phi(x_S, x_D) = psi(x) psi*(y) with x = x_S - x_D/2, y = x_S + x_D/2,
/// on the exact lift lattice: grid_S = psi.grid, grid_D = n points of
/// spacing 2 dx covering [-L, L). Pure re-indexing, no interpolation.
DensityField lift_pure(const WaveFunction1D& psi);
/// Cross lift phi = psi_a(x) psi_b*(y) (stationary pairs).
DensityField lift_pair(const WaveFunction1D& a, const WaveFunction1D& b);

/// max |phi(x_S,-x_D) - conj phi(x_S,x_D)| over the lattice.
double hermiticity_defect(const DensityField& f);

/// phi_R = Re phi + Im phi; invertible because Re is x<->y symmetric and
/// Im antisymmetric. Rejects fields with hermiticity defect >= 1e-8.
std::vector<double> to_real_rep(const DensityField& f);
DensityField from_real_rep(const std::vector<double>& real_rep, const DensityField& proto);

/// Strang split step for the density-field evolution: half potential
/// multiplier exp(-i dt/2hbar [V(x_S - x_D/2) - V(x_S + x_D/2)]), full
/// kinetic multiplier exp(+i dt hbar kS kD / m) in transform space, half
/// potential. Exact for V = 0.
class DmStepper {
 public:
  DmStepper(const DensityField& proto, const PotentialSpec& V, double dt);
  void step(DensityField& f) const;
  double dt() const { return dt_; }

 private:
  std::vector<cd> pot_half_, kin_;
  int ns_ = 0, nd_ = 0;
  double dt_ = 0.0;
};
DensityField evolve_dm(DensityField f, const PotentialSpec& V, double dt, int steps);

/// Pure-state split step (oracle path).
class PureStepper {
 public:
  PureStepper(const WaveFunction1D& proto, const PotentialSpec& V, double dt);
  void step(WaveFunction1D& psi) const;

 private:
  std::vector<cd> pot_half_, kin_;
  double dt_ = 0.0;
};
WaveFunction1D evolve_pure(WaveFunction1D psi, const PotentialSpec& V, double dt, int steps);

/// Generators in the two-coordinate representation: Q phi = -x_D phi,
/// P phi = -i hbar d/dx_S phi.
DensityField apply_Q_gen(const DensityField& f);
DensityField apply_P_gen(const DensityField& f);

/// Position-space slice functionals evaluated on the x_D = 0 grid line;
/// x_D-derivatives spectral by default, 4th-order central in Fd4 mode.
SchrodingerObservables observe(const DensityField& f, const PotentialSpec& V,
                               DerivMode mode = DerivMode::Spectral);

/// Momentum-space functionals on the k_D = 0 slice of the K_SD transform.
double observable_P_momentum(const ComplexScalarField2D& ksd, double hbar);
/// Free-field energy form; rejects a nonzero potential.
double observable_E_momentum(const ComplexScalarField2D& ksd, const PotentialSpec& V, double hbar,
                             double mass);

/// g_sigma(x_S - x0 - (hbar k0/m) t) e^{-i k0 x_D}; k0 must be an exact
/// x_D mode of grid_d or the phase factor is not periodic.
DensityField localized_solution(const UniformGrid1D& gs, const UniformGrid1D& gd, double x0,
                                double k0, double sigma, double t, double hbar = 1.0,
                                double mass = 1.0);

enum class Kinetic { Fd3, Spectral };
struct EnergySpectrum {
  std::vector<double> energies;        // ascending
  std::vector<std::vector<cd>> states; // normalized, integral |psi|^2 dx = 1
};
/// Dense diagonalization of the 1-D Hamiltonian. Fd3 is the 3-point
/// finite-difference oracle (O(dx^2)); Spectral uses the same kinetic
/// operator as the split-step propagators.
EnergySpectrum eigensolve_1d(const UniformGrid1D& grid, const PotentialSpec& V, int n_levels,
                             Kinetic kin = Kinetic::Fd3, double hbar = 1.0, double mass = 1.0);

/// phi_ab = psi_a(x) psi_b*(y) together with its beat energy E_a - E_b.
struct StationaryPair {
  DensityField field;
  double beat_energy;
};
StationaryPair stationary_pair(const EnergySpectrum& spec, int a, int b, const UniformGrid1D& grid,
                               double hbar = 1.0, double mass = 1.0);

}  // namespace densimat
