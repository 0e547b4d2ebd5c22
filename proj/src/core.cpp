#include "pbc/core.hpp"

namespace pbc {

char mode_letter(BoundaryMode mode) {
  switch (mode) {
    case BoundaryMode::Interior:
      return 'I';
    case BoundaryMode::LowerActive:
      return 'L';
    case BoundaryMode::UpperActive:
      return 'U';
    case BoundaryMode::Apex:
      return 'A';
    case BoundaryMode::Outside:
      return 'O';
  }
  return '?';
}

BoundaryMode mode_from_letter(char letter) {
  switch (letter) {
    case 'I':
      return BoundaryMode::Interior;
    case 'L':
      return BoundaryMode::LowerActive;
    case 'U':
      return BoundaryMode::UpperActive;
    case 'A':
      return BoundaryMode::Apex;
    case 'O':
      return BoundaryMode::Outside;
  }
  throw ConfigurationError(std::string("unknown boundary mode letter '") + letter + "'");
}

Eigen::VectorXd unprojected_field(const PlantModel& plant, const ControllerModel& controller,
                                  const ClosedLoopState& xi) {
  const Eigen::Index n = plant.state_dim;
  const Eigen::Index m = controller.state_dim;
  if (xi.x.size() != n) {
    throw ConfigurationError("unprojected_field: plant state has length " +
                             std::to_string(xi.x.size()) + ", expected " + std::to_string(n));
  }
  if (xi.z.size() != m) {
    throw ConfigurationError("unprojected_field: controller state has length " +
                             std::to_string(xi.z.size()) + ", expected " + std::to_string(m));
  }
  if (plant.output_row.size() != n) {
    throw ConfigurationError("unprojected_field: output row has length " +
                             std::to_string(plant.output_row.size()) + ", expected " +
                             std::to_string(n));
  }

  const double v = plant.output(xi.x);
  const double u_minus = controller.is_static() ? *controller.static_gain * v : xi.z1();

  Eigen::VectorXd out(n + m);
  out.head(n) = plant.field(xi.x, -u_minus);
  if (m > 0) {
    const Eigen::VectorXd z2 = xi.z2();
    out(n) = controller.f1(xi.z1(), z2, v);
    if (m > 1) {
      Eigen::VectorXd z2dot = controller.f2(xi.z1(), z2, v);
      if (z2dot.size() != m - 1) {
        throw ConfigurationError("unprojected_field: f2 returned length " +
                                 std::to_string(z2dot.size()) + ", expected " +
                                 std::to_string(m - 1));
      }
      out.tail(m - 1) = z2dot;
    }
  }
  return out;
}

}  // namespace pbc
