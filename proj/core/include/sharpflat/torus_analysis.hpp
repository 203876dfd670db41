#pragma once

// Analysis on the circle T = R / 2 pi Z: L^p norms, the Jacobi kernels
// P_n^{(alpha,beta)}(cos theta), the L^{p'} -> L^p norms of convolution with
// them, and the piecewise growth envelopes those norms are measured against.
//
// Convolution convention: (T f)(theta) = int_0^{2 pi} k(theta - t) f(t) dt,
// so that the L^2 norm is max_m |k^(m)| with k^(m) = int k(theta) e^{-i m theta} dtheta.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "sharpflat/special_functions.hpp"

namespace sharpflat::torus {

using special::JacobiParams;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// M equispaced nodes theta_j = 2 pi j / M, M >= 8.
class PeriodicGrid {
 public:
  explicit PeriodicGrid(int size);

  /// max(8192, 8 (n + 1)).
  static PeriodicGrid for_degree(int n);

  int size() const { return size_; }
  double spacing() const;
  double node(int j) const;

 private:
  int size_;
};

/// (sum_j |f_j|^p 2 pi / M)^{1/p}; p = infinity gives max |f_j|.
/// Throws DomainError for p <= 0 or a non-finite sample.
double lp_norm_periodic(std::span<const double> samples, double p);

/// P_n(cos theta_j) on the grid.
std::vector<double> kernel_samples(const JacobiParams& params, int n, const PeriodicGrid& grid);

/// || P_n(cos .) ||_{L^q(T)}.
double kernel_lp_norm(const JacobiParams& params, int n, double q, const PeriodicGrid& grid);

/// (n+1)^{delta - 1/p} for p > 1/(delta + 1/2), (n+1)^{-1/2} otherwise.
double envelope_A(double delta, double p, int n);
/// envelope_A with the factor log^{delta + 1/2}(n + 2) at p = 1/(delta + 1/2).
double envelope_A_tilde(double delta, double p, int n);
/// Power of (n+1) in envelope_A.
double envelope_exponent(double delta, double p);
bool is_kink(double delta, double p);

/// Fourier multiplier k^(m), m = 0 .. M/2. Throws AliasingError unless M > 2n.
std::vector<double> kernel_multipliers(const JacobiParams& params, int n, const PeriodicGrid& grid);

/// L^2 -> L^2 norm of T_n: max_m |k^(m)|.
double opnorm_l2_exact(const JacobiParams& params, int n, const PeriodicGrid& grid);

enum class UpperMethod { Young, ExactMultiplier };
std::string to_string(UpperMethod method);

/// Two-sided estimate of ||T_n||_{L^{p'} -> L^p}.
struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
  double young_upper = 0.0;  ///< ||kernel||_{L^{p/2}} regardless of the method used for `upper`
  std::string lower_witness;
  UpperMethod upper_method = UpperMethod::Young;
  bool search_diverged = false;  ///< a refinement produced non-finite values and was discarded
};

struct BracketOptions {
  int power_steps = 200;        ///< generalized power iteration steps per refined candidate
  int refined_candidates = 3;   ///< best-scoring starts that get refined
  int random_candidates = 4;    ///< seeded random trigonometric polynomials
};

/// Upper bound: exact multiplier norm at p = 2, Young's inequality
/// ||k * f||_p <= ||k||_{p/2} ||f||_{p'} for p > 2. Lower bound: best ratio
/// ||T f||_p / ||f||_{p'} over exponentials, bumps of widths 2^{-j} down to
/// 1/(4n), the kernel itself and seeded random trigonometric polynomials,
/// the best few refined by Boyd's generalized power iteration.
/// Requires p >= 2.
NormBracket opnorm_bracket(const JacobiParams& params, int n, double p, const PeriodicGrid& grid,
                           std::uint64_t seed, const BracketOptions& options = {});

/// Upper half of opnorm_bracket without the lower-bound search.
double opnorm_upper(const JacobiParams& params, int n, double p, const PeriodicGrid& grid);

struct KernelFactor {
  JacobiParams params;
  int n = 0;
};

/// Product of per-factor upper bounds: bounds the convolution on T^k with
/// the tensor-product kernel (Minkowski, p >= 2). Empty list gives 1.
double tensor_opnorm_upper(std::span<const KernelFactor> factors, double p);

}  // namespace sharpflat::torus
