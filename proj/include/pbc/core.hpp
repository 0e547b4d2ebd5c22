#pragma once

#include "pbc/types.hpp"

namespace pbc {

/// Closed-loop vector field of the negative feedback interconnection,
/// before any projection: u = -u_minus and v = y = G_p x, stacked as
/// (f_p(x, -z1), f1(z1, z2, v), f2(z1, z2, v)).
///
/// For the static-gain baseline the controller contributes no states and the
/// result is just the plant field under u = -k*v.
Eigen::VectorXd unprojected_field(const PlantModel& plant, const ControllerModel& controller,
                                  const ClosedLoopState& xi);

}  // namespace pbc
