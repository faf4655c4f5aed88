#include "becscat/quadrature.hpp"

#include "becscat/error.hpp"

namespace becscat {

namespace {

double simpson_even(std::span<const double> f, double h) {
  // f.size() - 1 intervals, even.
  const std::size_t last = f.size() - 1;
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t j = 1; j < last; j += 2) odd += f[j];
  for (std::size_t j = 2; j < last; j += 2) even += f[j];
  return h / 3.0 * (f[0] + f[last] + 4.0 * odd + 2.0 * even);
}

double three_eighths(std::span<const double> f, double h) {
  return 3.0 * h / 8.0 * (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]);
}

}  // namespace

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) {
    throw Error(ErrorKind::invalid_input, "quadrature needs at least two samples");
  }
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if ((n - 1) % 2 == 0) return simpson_even(f, h);
  if (n == 4) return three_eighths(f, h);
  const std::size_t split = n - 4;
  return simpson_even(f.first(split + 1), h) + three_eighths(f.subspan(split), h);
}

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n < 2) {
    throw Error(ErrorKind::invalid_input, "quadrature needs at least two samples");
  }
  std::vector<double> w(n, 0.0);
  if (n == 2) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  auto add_simpson = [&](std::size_t begin, std::size_t last) {
    w[begin] += h / 3.0;
    w[last] += h / 3.0;
    for (std::size_t j = begin + 1; j < last; ++j) {
      w[j] += ((j - begin) % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    }
  };
  auto add_three_eighths = [&](std::size_t begin) {
    w[begin] += 3.0 * h / 8.0;
    w[begin + 1] += 9.0 * h / 8.0;
    w[begin + 2] += 9.0 * h / 8.0;
    w[begin + 3] += 3.0 * h / 8.0;
  };
  if ((n - 1) % 2 == 0) {
    add_simpson(0, n - 1);
  } else if (n == 4) {
    add_three_eighths(0);
  } else {
    add_simpson(0, n - 4);
    add_three_eighths(n - 4);
  }
  return w;
}

}  // namespace becscat
