#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace becscat {

// Composite Simpson on uniformly spaced samples. With an odd number of
// intervals the last three intervals use Simpson's 3/8 rule; two samples
// fall back to the trapezoid.
double simpson(std::span<const double> f, double h);

// Weights w with simpson(f, h) == sum_j w_j f_j up to rounding.
std::vector<double> simpson_weights(std::size_t n, double h);

}  // namespace becscat
