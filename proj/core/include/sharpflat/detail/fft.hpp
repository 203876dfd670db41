#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace sharpflat::detail {

/// Half spectrum X_m = sum_j x_j exp(-2 pi i j m / M), m = 0 .. M/2, of a real sequence.
std::vector<std::complex<double>> real_dft(std::span<const double> samples);

/// Circular convolution with a fixed real kernel,
///   out_i = scale * sum_j kernel_{i-j} in_j,
/// applied through a cached pair of FFT plans. Each instance owns its
/// buffers; distinct instances may be used concurrently.
class CircularConvolution {
 public:
  CircularConvolution(std::span<const double> kernel, double scale);
  ~CircularConvolution();
  CircularConvolution(CircularConvolution&&) noexcept;
  CircularConvolution& operator=(CircularConvolution&&) noexcept;
  CircularConvolution(const CircularConvolution&) = delete;
  CircularConvolution& operator=(const CircularConvolution&) = delete;

  int size() const;
  /// scale * DFT(kernel), m = 0 .. M/2.
  const std::vector<std::complex<double>>& multiplier() const;
  void apply(std::span<const double> in, std::span<double> out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sharpflat::detail
