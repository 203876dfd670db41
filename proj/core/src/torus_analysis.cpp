#include "sharpflat/torus_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sharpflat/detail/fft.hpp"

namespace sharpflat::torus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kKinkTolerance = 1e-12;

void check_resolves(int n, const PeriodicGrid& grid) {
  if (grid.size() <= 2 * n) {
    throw AliasingError("grid of " + std::to_string(grid.size()) +
                        " points cannot resolve kernel frequencies up to " + std::to_string(n));
  }
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

enum class DualStatus { Ok, Vanished, NonFinite };

// psi_p(v) = sign(v) |v|^{p-1} / ||v||_p^{p-1}, the unit L^{p'} vector norming v.
DualStatus dual_vector(std::span<const double> v, double p, std::span<double> out) {
  const double scale = max_abs(v);
  if (scale == 0.0) return DualStatus::Vanished;
  if (!std::isfinite(scale)) return DualStatus::NonFinite;
  const int m = static_cast<int>(v.size());
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const double t = std::abs(v[j]) / scale;
    const double tp = std::pow(t, p - 1.0);
    out[j] = v[j] < 0.0 ? -tp : tp;
    sum += tp * t;
  }
  const double norm = std::pow(sum * kTwoPi / m, 1.0 / p);  // ||v/scale||_p
  const double denom = std::pow(norm, p - 1.0);
  if (!(denom > 0.0) || !std::isfinite(denom)) return DualStatus::NonFinite;
  for (double& x : out) x /= denom;
  return DualStatus::Ok;
}

struct Candidate {
  std::string label;
  std::vector<double> samples;
  double ratio = 0.0;
};

}  // namespace

PeriodicGrid::PeriodicGrid(int size) : size_(size) {
  if (size < 8) throw DomainError("periodic grid needs at least 8 points");
}

PeriodicGrid PeriodicGrid::for_degree(int n) { return PeriodicGrid(std::max(8192, 8 * (n + 1))); }

double PeriodicGrid::spacing() const { return kTwoPi / size_; }

double PeriodicGrid::node(int j) const { return kTwoPi * j / size_; }

double lp_norm_periodic(std::span<const double> samples, double p) {
  if (!(p > 0.0)) throw DomainError("L^p exponent must be positive");
  if (samples.empty()) throw DomainError("no samples");
  for (double x : samples) {
    if (!std::isfinite(x)) throw DomainError("non-finite sample in L^p norm");
  }
  const double scale = max_abs(samples);
  if (std::isinf(p) || scale == 0.0) return scale;
  double sum = 0.0;
  for (double x : samples) sum += std::pow(std::abs(x) / scale, p);
  return scale * std::pow(sum * kTwoPi / static_cast<double>(samples.size()), 1.0 / p);
}

std::vector<double> kernel_samples(const JacobiParams& params, int n, const PeriodicGrid& grid) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  const int m = grid.size();
  std::vector<double> out(m);
  for (int j = 0; 2 * j <= m; ++j) {
    const double v = special::jacobi_value<double>(params.a(), params.b(), n, std::cos(grid.node(j)));
    out[j] = v;
    if (j > 0) out[m - j] = v;
  }
  return out;
}

double kernel_lp_norm(const JacobiParams& params, int n, double q, const PeriodicGrid& grid) {
  return lp_norm_periodic(kernel_samples(params, n, grid), q);
}

bool is_kink(double delta, double p) {
  const double kink = 1.0 / (delta + 0.5);
  return std::abs(p - kink) <= kKinkTolerance * std::max(1.0, kink);
}

double envelope_exponent(double delta, double p) {
  if (!(delta >= 0.0) || !(p > 0.0)) throw DomainError("envelope needs delta >= 0 and p > 0");
  if (!is_kink(delta, p) && p > 1.0 / (delta + 0.5)) return delta - 1.0 / p;
  return -0.5;
}

double envelope_A(double delta, double p, int n) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  return std::pow(n + 1.0, envelope_exponent(delta, p));
}

double envelope_A_tilde(double delta, double p, int n) {
  const double base = envelope_A(delta, p, n);
  if (is_kink(delta, p)) return base * std::pow(std::log(n + 2.0), delta + 0.5);
  return base;
}

std::vector<double> kernel_multipliers(const JacobiParams& params, int n, const PeriodicGrid& grid) {
  check_resolves(n, grid);
  const auto samples = kernel_samples(params, n, grid);
  const auto spectrum = detail::real_dft(samples);
  std::vector<double> out(spectrum.size());
  const double h = grid.spacing();
  // The kernel is real and even, so its coefficients are real.
  for (std::size_t m = 0; m < spectrum.size(); ++m) out[m] = h * spectrum[m].real();
  return out;
}

double opnorm_l2_exact(const JacobiParams& params, int n, const PeriodicGrid& grid) {
  const auto mult = kernel_multipliers(params, n, grid);
  return max_abs(mult);
}

std::string to_string(UpperMethod method) {
  return method == UpperMethod::Young ? "young" : "exact_multiplier";
}

double opnorm_upper(const JacobiParams& params, int n, double p, const PeriodicGrid& grid) {
  if (!(p >= 2.0)) throw DomainError("operator norm bracket requires p >= 2");
  check_resolves(n, grid);
  if (p == 2.0) return opnorm_l2_exact(params, n, grid);
  return kernel_lp_norm(params, n, p / 2.0, grid);
}

NormBracket opnorm_bracket(const JacobiParams& params, int n, double p, const PeriodicGrid& grid,
                           std::uint64_t seed, const BracketOptions& options) {
  if (!(p >= 2.0) || std::isinf(p)) throw DomainError("operator norm bracket requires 2 <= p < inf");
  if (n < 0) throw DomainError("degree must be nonnegative");
  check_resolves(n, grid);

  const int m = grid.size();
  const double h = grid.spacing();
  const double p_dual = p / (p - 1.0);
  const auto kernel = kernel_samples(params, n, grid);
  detail::CircularConvolution conv(kernel, h);

  NormBracket bracket;
  bracket.young_upper = lp_norm_periodic(kernel, p / 2.0);
  double exact_l2 = 0.0;
  int best_frequency = 0;
  for (int k = 0; k <= n; ++k) {
    const double v = std::abs(conv.multiplier()[k].real());
    if (v > exact_l2) {
      exact_l2 = v;
      best_frequency = k;
    }
  }
  if (p == 2.0) {
    double sup = 0.0;
    for (const auto& z : conv.multiplier()) sup = std::max(sup, std::abs(z.real()));
    bracket.upper = sup;
    bracket.upper_method = UpperMethod::ExactMultiplier;
  } else {
    bracket.upper = bracket.young_upper;
    bracket.upper_method = UpperMethod::Young;
  }

  // exp(i m theta) is an eigenfunction: ||T e||_p / ||e||_{p'} = |k^(m)| (2 pi)^{1/p - 1/p'}.
  bracket.lower = exact_l2 * std::pow(kTwoPi, 1.0 / p - 1.0 / p_dual);
  bracket.lower_witness = "exponential m=" + std::to_string(best_frequency);

  std::vector<double> image(m);
  auto ratio_of = [&](std::span<const double> f) {
    const double denom = lp_norm_periodic(f, p_dual);
    if (!(denom > 0.0)) return 0.0;
    conv.apply(f, image);
    return lp_norm_periodic(image, p) / denom;
  };

  std::vector<Candidate> candidates;
  {
    const double min_width = 1.0 / (4.0 * std::max(n, 1));
    for (int j = 0;; ++j) {
      const double width = std::ldexp(1.0, -j);
      if (width < min_width) break;
      Candidate c;
      c.label = "bump width=2^-" + std::to_string(j);
      c.samples.assign(m, 0.0);
      for (int i = 0; i < m; ++i) {
        const double d = std::min(grid.node(i), kTwoPi - grid.node(i));
        if (d < width) {
          const double t = 1.0 - (d / width) * (d / width);
          c.samples[i] = t * t;
        }
      }
      candidates.push_back(std::move(c));
    }
  }
  candidates.push_back({"kernel", kernel, 0.0});
  {
    Candidate c;
    c.label = "cosine m=" + std::to_string(best_frequency);
    c.samples.resize(m);
    for (int i = 0; i < m; ++i) c.samples[i] = std::cos(best_frequency * grid.node(i));
    candidates.push_back(std::move(c));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int r = 0; r < options.random_candidates; ++r) {
    Candidate c;
    c.label = "random #" + std::to_string(r);
    c.samples.resize(m);
    for (double& x : c.samples) x = unit(rng);
    candidates.push_back(std::move(c));
  }

  for (auto& c : candidates) {
    c.ratio = ratio_of(c.samples);
    if (c.ratio > bracket.lower) {
      bracket.lower = c.ratio;
      bracket.lower_witness = c.label;
    }
  }

  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].ratio > candidates[b].ratio;
  });

  const int refine = std::min<int>(options.refined_candidates, static_cast<int>(order.size()));
  std::vector<double> f(m);
  std::vector<double> g(m);
  for (int r = 0; r < refine; ++r) {
    const Candidate& start = candidates[order[r]];
    const double start_norm = lp_norm_periodic(start.samples, p_dual);
    if (!(start_norm > 0.0)) continue;
    for (int i = 0; i < m; ++i) f[i] = start.samples[i] / start_norm;
    DualStatus status = DualStatus::Ok;
    for (int step = 0; step < options.power_steps; ++step) {
      conv.apply(f, image);
      status = dual_vector(image, p, g);
      if (status != DualStatus::Ok) break;
      conv.apply(g, image);
      status = dual_vector(image, p, f);
      if (status != DualStatus::Ok) break;
      const double value = ratio_of(f);
      if (!std::isfinite(value)) {
        status = DualStatus::NonFinite;
        break;
      }
      if (value > bracket.lower) {
        bracket.lower = value;
        bracket.lower_witness = start.label + " refined " + std::to_string(step + 1);
      }
    }
    if (status == DualStatus::NonFinite) bracket.search_diverged = true;
  }
  return bracket;
}

double tensor_opnorm_upper(std::span<const KernelFactor> factors, double p) {
  double product = 1.0;
  for (const auto& f : factors) {
    product *= opnorm_upper(f.params, f.n, p, PeriodicGrid::for_degree(f.n));
  }
  return product;
}

}  // namespace sharpflat::torus
