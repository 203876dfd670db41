#include "sharpflat/detail/fft.hpp"

#include <algorithm>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <fftw3.h>

namespace sharpflat::detail {

namespace {

// FFTW's planner is not reentrant; plan creation and destruction are serialized.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct RealBuffer {
  explicit RealBuffer(std::size_t n) : data(fftw_alloc_real(n)), size(n) {
    if (!data) throw std::bad_alloc();
  }
  ~RealBuffer() { fftw_free(data); }
  RealBuffer(const RealBuffer&) = delete;
  RealBuffer& operator=(const RealBuffer&) = delete;
  double* data;
  std::size_t size;
};

struct ComplexBuffer {
  explicit ComplexBuffer(std::size_t n) : data(fftw_alloc_complex(n)), size(n) {
    if (!data) throw std::bad_alloc();
  }
  ~ComplexBuffer() { fftw_free(data); }
  ComplexBuffer(const ComplexBuffer&) = delete;
  ComplexBuffer& operator=(const ComplexBuffer&) = delete;
  fftw_complex* data;
  std::size_t size;
};

class Plan {
 public:
  Plan() = default;
  explicit Plan(fftw_plan p) : plan_(p) {
    if (!plan_) throw std::runtime_error("FFTW failed to create a plan");
  }
  ~Plan() { reset(); }
  Plan(Plan&& o) noexcept : plan_(std::exchange(o.plan_, nullptr)) {}
  Plan& operator=(Plan&& o) noexcept {
    if (this != &o) {
      reset();
      plan_ = std::exchange(o.plan_, nullptr);
    }
    return *this;
  }
  fftw_plan get() const { return plan_; }

 private:
  void reset() {
    if (plan_) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan_);
      plan_ = nullptr;
    }
  }
  fftw_plan plan_ = nullptr;
};

}  // namespace

std::vector<std::complex<double>> real_dft(std::span<const double> samples) {
  const int m = static_cast<int>(samples.size());
  if (m < 1) return {};
  RealBuffer in(m);
  ComplexBuffer out(m / 2 + 1);
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = Plan(fftw_plan_dft_r2c_1d(m, in.data, out.data, FFTW_ESTIMATE));
  }
  std::copy(samples.begin(), samples.end(), in.data);
  fftw_execute(plan.get());
  std::vector<std::complex<double>> result(m / 2 + 1);
  for (int k = 0; k <= m / 2; ++k) result[k] = {out.data[k][0], out.data[k][1]};
  return result;
}

struct CircularConvolution::Impl {
  explicit Impl(int m) : size(m), real(m), spectrum(m / 2 + 1) {}
  int size;
  RealBuffer real;
  ComplexBuffer spectrum;
  Plan forward;
  Plan backward;
  std::vector<std::complex<double>> multiplier;
};

CircularConvolution::CircularConvolution(std::span<const double> kernel, double scale) {
  const int m = static_cast<int>(kernel.size());
  if (m < 1) throw std::invalid_argument("empty convolution kernel");
  impl_ = std::make_unique<Impl>(m);
  {
    std::lock_guard lock(planner_mutex());
    impl_->forward =
        Plan(fftw_plan_dft_r2c_1d(m, impl_->real.data, impl_->spectrum.data, FFTW_ESTIMATE));
    impl_->backward =
        Plan(fftw_plan_dft_c2r_1d(m, impl_->spectrum.data, impl_->real.data, FFTW_ESTIMATE));
  }
  std::copy(kernel.begin(), kernel.end(), impl_->real.data);
  fftw_execute(impl_->forward.get());
  impl_->multiplier.resize(m / 2 + 1);
  for (int k = 0; k <= m / 2; ++k) {
    impl_->multiplier[k] = scale * std::complex<double>(impl_->spectrum.data[k][0],
                                                        impl_->spectrum.data[k][1]);
  }
}

CircularConvolution::~CircularConvolution() = default;
CircularConvolution::CircularConvolution(CircularConvolution&&) noexcept = default;
CircularConvolution& CircularConvolution::operator=(CircularConvolution&&) noexcept = default;

int CircularConvolution::size() const { return impl_->size; }

const std::vector<std::complex<double>>& CircularConvolution::multiplier() const {
  return impl_->multiplier;
}

void CircularConvolution::apply(std::span<const double> in, std::span<double> out) {
  const int m = impl_->size;
  if (static_cast<int>(in.size()) != m || static_cast<int>(out.size()) != m) {
    throw std::invalid_argument("convolution operand has the wrong length");
  }
  std::copy(in.begin(), in.end(), impl_->real.data);
  fftw_execute(impl_->forward.get());
  const double inv = 1.0 / m;
  for (int k = 0; k <= m / 2; ++k) {
    const std::complex<double> x(impl_->spectrum.data[k][0], impl_->spectrum.data[k][1]);
    const std::complex<double> y = x * impl_->multiplier[k] * inv;
    impl_->spectrum.data[k][0] = y.real();
    impl_->spectrum.data[k][1] = y.imag();
  }
  fftw_execute(impl_->backward.get());
  std::copy(impl_->real.data, impl_->real.data + m, out.begin());
}

}  // namespace sharpflat::detail
