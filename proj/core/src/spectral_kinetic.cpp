#include "becscat/spectral_kinetic.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "becscat/error.hpp"

namespace becscat {

namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

// DST-I of length N via the imaginary part of a real FFT of the odd
// extension, length 2(N + 1).
struct SpectralKinetic::Impl {
  RadialGrid grid;
  std::size_t interior;
  std::size_t extended;
  double* real = nullptr;
  fftw_complex* spectrum = nullptr;
  fftw_plan plan = nullptr;
  std::vector<double> eigenvalues;
  std::vector<double> decay;
  std::vector<double> coeff;
  double decay_dtau = -1.0;

  explicit Impl(const RadialGrid& g)
      : grid(g), interior(g.size() - 2), extended(2 * (g.size() - 1)) {
    eigenvalues.resize(interior);
    coeff.resize(interior);
    const double k0 = std::numbers::pi / grid.r_max();
    for (std::size_t m = 0; m < interior; ++m) {
      const double k = k0 * static_cast<double>(m + 1);
      eigenvalues[m] = 0.5 * k * k;
    }
    std::lock_guard lock(planner_mutex());
    real = fftw_alloc_real(extended);
    spectrum = fftw_alloc_complex(extended / 2 + 1);
    if (real == nullptr || spectrum == nullptr) {
      fftw_free(real);
      fftw_free(spectrum);
      throw std::bad_alloc();
    }
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(extended), real, spectrum, FFTW_ESTIMATE);
    if (plan == nullptr) {
      fftw_free(real);
      fftw_free(spectrum);
      throw Error(ErrorKind::invalid_config, "could not create sine transform plan");
    }
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
    fftw_free(real);
    fftw_free(spectrum);
  }

  // y_m = 2 sum_j x_j sin(pi (j + 1)(m + 1) / (N + 1)), same convention as RODFT00.
  void dst1(const double* x, double* y) {
    const std::size_t n = interior;
    real[0] = 0.0;
    real[n + 1] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      real[j + 1] = x[j];
      real[extended - 1 - j] = -x[j];
    }
    fftw_execute(plan);
    for (std::size_t m = 0; m < n; ++m) y[m] = -spectrum[m + 1][1];
  }

  // Forward transform, multiply by factor[m], inverse transform; writes interior of out.
  void filter(std::span<const double> u, std::span<double> out, const std::vector<double>& factor) {
    if (u.size() != grid.size() || out.size() != grid.size()) {
      throw Error(ErrorKind::invalid_input, "kinetic operator: sample count does not match grid");
    }
    dst1(u.data() + 1, coeff.data());
    // DST-I is its own inverse up to 2 (N + 1).
    const double scale = 1.0 / (2.0 * static_cast<double>(interior + 1));
    for (std::size_t m = 0; m < interior; ++m) coeff[m] *= factor[m] * scale;
    dst1(coeff.data(), out.data() + 1);
    out[0] = 0.0;
    out[grid.size() - 1] = 0.0;
  }
};

SpectralKinetic::SpectralKinetic(const RadialGrid& grid) : impl_(std::make_unique<Impl>(grid)) {}
SpectralKinetic::~SpectralKinetic() = default;
SpectralKinetic::SpectralKinetic(SpectralKinetic&&) noexcept = default;
SpectralKinetic& SpectralKinetic::operator=(SpectralKinetic&&) noexcept = default;

const RadialGrid& SpectralKinetic::grid() const noexcept { return impl_->grid; }

void SpectralKinetic::apply(std::span<const double> u, std::span<double> out) {
  impl_->filter(u, out, impl_->eigenvalues);
}

void SpectralKinetic::propagate(std::span<double> u, double dtau) {
  if (dtau != impl_->decay_dtau) {
    impl_->decay.resize(impl_->interior);
    for (std::size_t m = 0; m < impl_->interior; ++m) {
      impl_->decay[m] = std::exp(-impl_->eigenvalues[m] * dtau);
    }
    impl_->decay_dtau = dtau;
  }
  impl_->filter(u, u, impl_->decay);
}

double SpectralKinetic::eigenvalue(std::size_t mode) const noexcept {
  return impl_->eigenvalues[mode - 1];
}

}  // namespace becscat
