#pragma once

#include "becscat/gpe_solver.hpp"

namespace fixture {

// Ground state on default_grid(gamma) with the default solver config,
// solved once per process and shared.
const becscat::GroundState& converged_state(double gamma);

}  // namespace fixture
