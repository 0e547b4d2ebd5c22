#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbc {

/// Weights (q, s, r) of the quadratic supply rate  q*u^2 + 2*s*u*y + r*y^2.
struct DissipativityTriple {
  double q = 0.0;
  double s = 0.0;
  double r = 0.0;

  /// Symmetric 2x2 supply matrix [[q, s], [s, r]] acting on (u, y).
  Eigen::Matrix2d supply_matrix() const {
    Eigen::Matrix2d m;
    m << q, s, s, r;
    return m;
  }

  double supply(double u, double y) const { return q * u * u + 2.0 * s * u * y + r * y * y; }
};

/// Sector slopes, k1 < k2 strictly. The sector is the set of pairs (v, u)
/// with (u - k1*v)(u - k2*v) <= 0.
struct SectorBounds {
  double k1;
  double k2;
};

/// Sector bounds together with the S-procedure multiplier lambda that
/// witnesses compatibility with a dissipativity triple.
struct SectorCertificate {
  SectorBounds bounds{0.0, 1.0};
  double lambda = 0.0;
  DissipativityTriple triple;
};

/// Which sector constraint is active at a given (v, u_minus) pair.
enum class BoundaryMode { Interior, LowerActive, UpperActive, Apex, Outside };

char mode_letter(BoundaryMode mode);
BoundaryMode mode_from_letter(char letter);

/// Stacked closed-loop state xi = (x, z). z is empty for the static-gain
/// baseline controller, otherwise z(0) is the projected coordinate z1.
struct ClosedLoopState {
  Eigen::VectorXd x;
  Eigen::VectorXd z;

  double z1() const { return z(0); }
  Eigen::VectorXd z2() const { return z.tail(z.size() - 1); }

  Eigen::VectorXd stacked() const {
    Eigen::VectorXd xi(x.size() + z.size());
    xi << x, z;
    return xi;
  }

  static ClosedLoopState from_stacked(const Eigen::VectorXd& xi, Eigen::Index n) {
    return ClosedLoopState{xi.head(n), xi.tail(xi.size() - n)};
  }
};

/// Storage function V(x) >= 0 with analytic gradient.
struct StorageFunction {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
};

/// SISO plant xdot = f(x, u), y = output_row * x, with optional storage.
struct PlantModel {
  Eigen::Index state_dim = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> field;
  Eigen::RowVectorXd output_row;
  std::optional<StorageFunction> storage;

  double output(const Eigen::VectorXd& x) const { return output_row.dot(x); }
};

/// Controller zdot = (f1(z1, z2, v), f2(z1, z2, v)), u_minus = z1.
/// A set static_gain marks the memoryless baseline u_minus = k*v, which has
/// no state and bypasses projection.
struct ControllerModel {
  Eigen::Index state_dim = 0;
  std::function<double(double, const Eigen::VectorXd&, double)> f1;
  std::function<Eigen::VectorXd(double, const Eigen::VectorXd&, double)> f2;
  std::optional<double> static_gain;

  bool is_static() const { return static_gain.has_value(); }
};

/// Recorded simulation output plus the metadata needed to audit it later.
struct Trajectory {
  std::vector<double> times;
  std::vector<ClosedLoopState> states;
  std::vector<double> inputs;   // u = -u_minus
  std::vector<double> outputs;  // y
  std::optional<std::vector<double>> storage_values;
  std::vector<BoundaryMode> modes;

  double step_h = 0.0;
  bool projected = false;
  bool diverged = false;
  std::optional<double> divergence_time;
  double max_drift = 0.0;  // largest sector residual seen before per-step repair

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
};

struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// partial_project was handed a state outside the admissible set.
struct StateLeftAdmissibleSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The triple matches none of the analytic sector-design cases.
struct NotSectorDesignable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No multiplier (or no (lambda, c, d) grid point) certifies the sector.
struct CertificateSearchFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dissipativity check requested on a plant without a storage function.
struct NotCheckable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A state component left the finite range during integration.
struct NumericalBlowup : std::runtime_error {
  NumericalBlowup(const std::string& what, Eigen::VectorXd state_in)
      : std::runtime_error(what), state(std::move(state_in)) {}
  Eigen::VectorXd state;
};

}  // namespace pbc
