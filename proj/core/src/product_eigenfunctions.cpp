#include "sharpflat/product_eigenfunctions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <Eigen/Dense>

#include "sharpflat/errors.hpp"
#include "sharpflat/gauss_jacobi.hpp"

namespace sharpflat::product {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kBlockSize = 1024;

struct AxisRule {
  std::vector<double> node;
  std::vector<double> weight;
};

// Gauss-Legendre on [lo, hi]; weights sum to hi - lo.
AxisRule legendre_rule(double lo, double hi, int order) {
  const auto rule = special::gauss_jacobi_rule(0.0, 0.0, order);
  AxisRule out;
  out.node.resize(order);
  out.weight.resize(order);
  const double length = hi - lo;
  for (int i = 0; i < order; ++i) {
    const double x = std::cos(rule.theta[i]);
    out.node[i] = lo + 0.5 * (x + 1.0) * length;
    out.weight[i] = rule.weight[i] * length;
  }
  return out;
}

struct PartialSums {
  std::vector<double> power;  // sum of w |f/f0|^p per finite p
  double sup = 0.0;
};

}  // namespace

FlatSubmanifold::FlatSubmanifold(int ambient_rank, int dimension, std::vector<double> matrix,
                                 std::vector<double> offset, std::vector<std::pair<double, double>> box)
    : rank_(ambient_rank),
      dim_(dimension),
      matrix_(std::move(matrix)),
      offset_(std::move(offset)),
      box_(std::move(box)) {
  if (rank_ < 1) throw DomainError("ambient torus rank must be positive");
  if (dim_ < 0 || dim_ > rank_) throw DomainError("submanifold dimension must lie in [0, r]");
  if (matrix_.size() != static_cast<std::size_t>(rank_ * dim_)) {
    throw DomainError("matrix must have r * k entries");
  }
  if (offset_.size() != static_cast<std::size_t>(rank_)) throw DomainError("offset must have r entries");
  if (box_.size() != static_cast<std::size_t>(dim_)) throw DomainError("box must have k intervals");
  for (const auto& [lo, hi] : box_) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw DomainError("box intervals must be finite with lo < hi");
    }
  }
  for (double v : matrix_) {
    if (!std::isfinite(v)) throw DomainError("non-finite matrix entry");
  }
  if (dim_ == 0) return;
  Eigen::MatrixXd a(rank_, dim_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < dim_; ++j) a(i, j) = coefficient(i, j);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  if (!(sv(dim_ - 1) > 1e-12 * sv(0))) throw DomainError("matrix must have full column rank");
  density_ = sv.prod();
}

FlatSubmanifold FlatSubmanifold::point(std::vector<double> offset) {
  const int r = static_cast<int>(offset.size());
  return FlatSubmanifold(r, 0, {}, std::move(offset), {});
}

double FlatSubmanifold::area() const {
  double v = density_;
  for (const auto& [lo, hi] : box_) v *= hi - lo;
  return v;
}

void FlatSubmanifold::map(std::span<const double> u, std::span<double> theta) const {
  for (int i = 0; i < rank_; ++i) {
    double t = offset_[i];
    for (int j = 0; j < dim_; ++j) t += coefficient(i, j) * u[j];
    theta[i] = t;
  }
}

Extremizer::Extremizer(const ProductManifold& manifold, const LatticeShell& shell)
    : manifold_(manifold), shell_(shell) {
  const int r = manifold.rank();
  if (shell.empty()) throw DomainError("extremizer needs a nonempty shell");
  max_degree_.assign(r, 0);
  for (const auto& t : shell.members) {
    if (static_cast<int>(t.size()) != r) throw DomainError("shell tuple length differs from the rank");
    for (int i = 0; i < r; ++i) max_degree_[i] = std::max(max_degree_[i], t[i]);
  }
  coefficient_.resize(r);
  sqrt_dimension_.resize(r);
  for (int i = 0; i < r; ++i) {
    const auto& space = manifold.factor(i);
    const auto k = cross::rep_dimensions(space, max_degree_[i]);
    coefficient_[i].resize(k.size());
    sqrt_dimension_[i].resize(k.size());
    for (std::size_t n = 0; n < k.size(); ++n) {
      sqrt_dimension_[i][n] = std::sqrt(k[n]);
      coefficient_[i][n] =
          sqrt_dimension_[i][n] / special::jacobi_binomial(space.params().a(), static_cast<int>(n));
    }
  }

  trie_.resize(r);
  const DegreeTuple* prev = nullptr;
  for (const auto& t : shell.members) {
    int split = 0;
    if (prev != nullptr) {
      while (split < r && (*prev)[split] == t[split]) ++split;
      if (split == r) throw DomainError("shell contains a repeated tuple");
    }
    for (int d = split; d < r; ++d) {
      if (d + 1 < r) trie_[d].child_begin.push_back(static_cast<int>(trie_[d + 1].degree.size()));
      trie_[d].degree.push_back(t[d]);
    }
    prev = &t;
  }
  for (int d = 0; d + 1 < r; ++d) trie_[d].child_begin.push_back(static_cast<int>(trie_[d + 1].degree.size()));

  double total = 0.0;
  for (const auto& t : shell.members) {
    double term = 1.0;
    for (int i = 0; i < r; ++i) term *= sqrt_dimension_[i][t[i]];
    total += term;
  }
  origin_value_ = total;
}

Extremizer::Workspace Extremizer::make_workspace() const {
  Workspace ws;
  const int r = rank();
  ws.weights.resize(r);
  ws.node_values.resize(r);
  int longest = 0;
  for (int i = 0; i < r; ++i) {
    ws.weights[i].resize(max_degree_[i] + 1);
    ws.node_values[i].resize(trie_[i].degree.size());
    longest = std::max(longest, max_degree_[i]);
  }
  ws.sequence.resize(longest + 1);
  return ws;
}

double Extremizer::evaluate(std::span<const double> theta, Workspace& ws) const {
  const int r = rank();
  if (static_cast<int>(theta.size()) != r) throw DomainError("point dimension differs from the rank");
  for (int i = 0; i < r; ++i) {
    const auto& p = manifold_.factor(i).params();
    const int nmax = max_degree_[i];
    std::span<double> seq(ws.sequence.data(), nmax + 1);
    special::jacobi_sequence<double>(p.a(), p.b(), nmax, std::cos(theta[i]), seq);
    auto& w = ws.weights[i];
    for (int n = 0; n <= nmax; ++n) w[n] = coefficient_[i][n] * seq[n];
  }
  {
    const auto& level = trie_[r - 1];
    auto& values = ws.node_values[r - 1];
    const auto& w = ws.weights[r - 1];
    for (std::size_t j = 0; j < level.degree.size(); ++j) values[j] = w[level.degree[j]];
  }
  for (int d = r - 2; d >= 0; --d) {
    const auto& level = trie_[d];
    const auto& below = ws.node_values[d + 1];
    auto& values = ws.node_values[d];
    const auto& w = ws.weights[d];
    for (std::size_t j = 0; j < level.degree.size(); ++j) {
      double sum = 0.0;
      for (int c = level.child_begin[j]; c < level.child_begin[j + 1]; ++c) sum += below[c];
      values[j] = w[level.degree[j]] * sum;
    }
  }
  double total = 0.0;
  for (double v : ws.node_values[0]) total += v;
  return total;
}

double Extremizer::evaluate(std::span<const double> theta) const {
  auto ws = make_workspace();
  return evaluate(theta, ws);
}

double Extremizer::l2_norm() const { return extremizer_l2_norm(shell_); }

double extremizer_eval(const ProductManifold& manifold, const LatticeShell& shell,
                       std::span<const double> theta) {
  return Extremizer(manifold, shell).evaluate(theta);
}

double extremizer_l2_norm(const LatticeShell& shell) {
  return std::sqrt(static_cast<double>(shell.size()));
}

double extremizer_l2_norm_quadrature(const ProductManifold& manifold, const LatticeShell& shell) {
  const int r = manifold.rank();
  if (shell.empty()) return 0.0;
  std::vector<int> nmax(r, 0);
  for (const auto& t : shell.members) {
    for (int i = 0; i < r; ++i) nmax[i] = std::max(nmax[i], t[i]);
  }
  // gram[i](n, m) = sqrt(k(n) k(m)) * integral of Phi_n Phi_m.
  std::vector<Eigen::MatrixXd> gram(r);
  for (int i = 0; i < r; ++i) {
    const auto& space = manifold.factor(i);
    const auto rule = special::gauss_jacobi_rule(space.params(), nmax[i] + 1);
    const auto k = cross::rep_dimensions(space, nmax[i]);
    Eigen::MatrixXd phi(rule.order(), nmax[i] + 1);
    for (int q = 0; q < rule.order(); ++q) {
      const auto seq = cross::spherical_sequence(space, nmax[i], rule.theta[q]);
      for (int n = 0; n <= nmax[i]; ++n) phi(q, n) = seq[n] * std::sqrt(k[n] * rule.weight[q]);
    }
    gram[i] = phi.transpose() * phi;
  }
  double sum = 0.0;
  for (const auto& s : shell.members) {
    for (const auto& t : shell.members) {
      double term = 1.0;
      for (int i = 0; i < r; ++i) term *= gram[i](s[i], t[i]);
      sum += term;
    }
  }
  return std::sqrt(std::max(sum, 0.0));
}

std::vector<int> quadrature_nodes(const Extremizer& f, const FlatSubmanifold& submanifold,
                                  const Resolution& resolution) {
  if (!(resolution.points_per_wavelength >= 2.0)) {
    throw ResolutionError("quadrature needs at least 2 points per wavelength");
  }
  if (submanifold.ambient_rank() != f.rank()) throw DomainError("submanifold lives in a torus of another rank");
  std::vector<int> nodes(submanifold.dimension());
  for (int j = 0; j < submanifold.dimension(); ++j) {
    double frequency = 0.0;
    for (int i = 0; i < f.rank(); ++i) frequency += f.max_degree(i) * std::abs(submanifold.coefficient(i, j));
    const auto [lo, hi] = submanifold.box()[j];
    const double wanted = std::ceil(resolution.points_per_wavelength * frequency * (hi - lo) / kTwoPi);
    nodes[j] = std::max(resolution.min_nodes_per_axis, static_cast<int>(wanted));
  }
  return nodes;
}

std::vector<double> restriction_lp_norms(const Extremizer& f, const FlatSubmanifold& submanifold,
                                         std::span<const double> exponents, const Resolution& resolution,
                                         int threads) {
  for (double p : exponents) {
    if (!(p >= 1.0)) throw DomainError("restriction norms need p >= 1");
  }
  const int k = submanifold.dimension();
  const int r = f.rank();
  std::vector<double> out(exponents.size());
  if (k == 0) {
    if (submanifold.ambient_rank() != r) throw DomainError("submanifold lives in a torus of another rank");
    const double v = std::abs(f.evaluate(submanifold.offset()));
    std::fill(out.begin(), out.end(), v);
    return out;
  }
  const auto nodes = quadrature_nodes(f, submanifold, resolution);
  std::vector<AxisRule> axes;
  std::size_t total = 1;
  for (int j = 0; j < k; ++j) {
    axes.push_back(legendre_rule(submanifold.box()[j].first, submanifold.box()[j].second, nodes[j]));
    total *= static_cast<std::size_t>(nodes[j]);
  }
  const double scale = f.value_at_origin();
  const std::size_t blocks = (total + kBlockSize - 1) / kBlockSize;
  std::vector<PartialSums> partial(blocks);

  auto run_block = [&](std::size_t b, Extremizer::Workspace& ws, std::vector<double>& u,
                       std::vector<double>& theta) {
    PartialSums acc;
    acc.power.assign(exponents.size(), 0.0);
    const std::size_t end = std::min(total, (b + 1) * kBlockSize);
    for (std::size_t flat = b * kBlockSize; flat < end; ++flat) {
      std::size_t rest = flat;
      double weight = 1.0;
      for (int j = k - 1; j >= 0; --j) {
        const std::size_t idx = rest % static_cast<std::size_t>(nodes[j]);
        rest /= static_cast<std::size_t>(nodes[j]);
        u[j] = axes[j].node[idx];
        weight *= axes[j].weight[idx];
      }
      submanifold.map(u, theta);
      const double v = std::abs(f.evaluate(theta, ws)) / scale;
      acc.sup = std::max(acc.sup, v);
      for (std::size_t e = 0; e < exponents.size(); ++e) {
        if (std::isfinite(exponents[e])) acc.power[e] += weight * std::pow(v, exponents[e]);
      }
    }
    partial[b] = std::move(acc);
  };

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(blocks)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    auto ws = f.make_workspace();
    std::vector<double> u(k);
    std::vector<double> theta(r);
    for (std::size_t b = next++; b < blocks; b = next++) run_block(b, ws, u, theta);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::vector<double> sums(exponents.size(), 0.0);
  double sup = 0.0;
  for (const auto& acc : partial) {
    sup = std::max(sup, acc.sup);
    for (std::size_t e = 0; e < exponents.size(); ++e) sums[e] += acc.power[e];
  }
  const double density = submanifold.area_density();
  for (std::size_t e = 0; e < exponents.size(); ++e) {
    const double p = exponents[e];
    out[e] = std::isfinite(p) ? scale * std::pow(density * sums[e], 1.0 / p) : scale * sup;
  }
  return out;
}

double restriction_lp_norm(const ProductManifold& manifold, const LatticeShell& shell,
                           const FlatSubmanifold& submanifold, double p, const Resolution& resolution) {
  const Extremizer f(manifold, shell);
  const double exponents[] = {p};
  return restriction_lp_norms(f, submanifold, exponents, resolution).front();
}

double pointwise_lower_check(const Extremizer& f, double epsilon, int samples_per_axis) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (samples_per_axis < 2) throw DomainError("need at least two samples per axis");
  const int r = f.rank();
  const double radius = epsilon / std::max(1.0, f.shell().spectral_parameter());
  auto ws = f.make_workspace();
  std::vector<int> index(r, 0);
  std::vector<double> theta(r);
  double worst = std::numeric_limits<double>::infinity();
  while (true) {
    for (int i = 0; i < r; ++i) theta[i] = radius * index[i] / (samples_per_axis - 1);
    worst = std::min(worst, std::abs(f.evaluate(theta, ws)) / f.value_at_origin());
    int i = 0;
    while (i < r && ++index[i] == samples_per_axis) index[i++] = 0;
    if (i == r) break;
  }
  return worst;
}

double pointwise_lower_check(const ProductManifold& manifold, const LatticeShell& shell, double epsilon) {
  return pointwise_lower_check(Extremizer(manifold, shell), epsilon);
}

SharpnessReport sharpness_report(const ProductManifold& manifold, const FlatSubmanifold& submanifold,
                                 std::span<const double> exponents, std::span<const std::int64_t> levels,
                                 const SharpnessOptions& options) {
  if (exponents.empty()) throw DomainError("no exponents requested");
  if (submanifold.ambient_rank() != manifold.rank()) {
    throw DomainError("submanifold lives in a torus of another rank");
  }
  SharpnessReport report;
  report.exponents.assign(exponents.begin(), exponents.end());
  const double base = 0.5 * (manifold.dimension() - 2);
  const int k = submanifold.dimension();
  for (double p : exponents) report.target_slopes.push_back(base - (std::isfinite(p) ? k / p : 0.0));

  std::vector<std::vector<torus::FitPoint>> points(exponents.size());
  std::vector<std::int64_t> sorted(levels.begin(), levels.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::int64_t level : sorted) {
    const auto shell = enumerate_shell(manifold, level, true);
    if (shell.empty()) continue;
    const Extremizer f(manifold, shell);
    const auto norms = restriction_lp_norms(f, submanifold, exponents, options.resolution, options.threads);
    const double l2 = f.l2_norm();
    const double lower = pointwise_lower_check(f, options.epsilon);
    const double big_n = shell.spectral_parameter();
    for (std::size_t e = 0; e < exponents.size(); ++e) {
      SharpnessRow row;
      row.level = level;
      row.spectral_parameter = big_n;
      row.shell_size = shell.size();
      row.p = exponents[e];
      row.restriction_norm = norms[e];
      row.l2_norm = l2;
      row.ratio = norms[e] / l2;
      row.envelope = std::pow(big_n, report.target_slopes[e]);
      row.lower_check = lower;
      report.rows.push_back(row);
      points[e].push_back({big_n, row.ratio});
    }
  }
  if (report.rows.empty()) throw DomainError("no requested level has a nonempty shell");
  if (points.front().size() >= 3) {
    for (const auto& pts : points) report.fits.push_back(torus::fit_exponent(pts));
  }
  return report;
}

}  // namespace sharpflat::product
