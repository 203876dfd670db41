#pragma once

// Products M = M_1 x ... x M_r of CROSSs, the lattice shells of degree
// tuples at a fixed spectral level, the zonal extremizer built on a shell,
// and L^p norms of its restriction to affine subtori of the maximal flat.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sharpflat/cross_geometry.hpp"
#include "sharpflat/exponent_fit.hpp"

namespace sharpflat::product {

using cross::CrossSpace;

/// Factors are kept sorted by ascending dimension (stable), r >= 2.
class ProductManifold {
 public:
  explicit ProductManifold(std::vector<CrossSpace> factors);

  int rank() const { return static_cast<int>(factors_.size()); }
  int dimension() const { return dimension_; }
  const std::vector<CrossSpace>& factors() const { return factors_; }
  const CrossSpace& factor(int i) const { return factors_.at(i); }

 private:
  std::vector<CrossSpace> factors_;
  int dimension_ = 0;
};

using DegreeTuple = std::vector<int>;

/// Degree tuples with sum_i (n_i^2 + a_i n_i) = level. With the ordering
/// constraint, also n_1 >= ... >= n_r >= n_1 / 2. Members are sorted
/// lexicographically.
struct LatticeShell {
  std::int64_t level = 0;
  bool ordered = true;
  std::vector<DegreeTuple> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  /// N with N^2 = level.
  double spectral_parameter() const;
};

LatticeShell enumerate_shell(const ProductManifold& manifold, std::int64_t level,
                             bool ordering_constraint);

/// Exact membership test in integer arithmetic.
bool in_shell(const ProductManifold& manifold, const DegreeTuple& tuple, std::int64_t level,
              bool ordering_constraint);

/// Number of unconstrained tuples at every level 0 .. max_level.
std::vector<std::int64_t> unconstrained_shell_counts(const ProductManifold& manifold,
                                                     std::int64_t max_level);

/// Fit of the unconstrained count against N = sqrt(level) over all nonempty
/// levels 2 .. max_level.
torus::ExponentFit count_growth(const ProductManifold& manifold, std::int64_t max_level);

/// Affine map u -> A u + b from a box V in R^k into the maximal flat T^r.
class FlatSubmanifold {
 public:
  /// `matrix` is r x k in row-major order; `box` holds [lo, hi] per axis.
  FlatSubmanifold(int ambient_rank, int dimension, std::vector<double> matrix,
                  std::vector<double> offset, std::vector<std::pair<double, double>> box);

  /// The 0-dimensional submanifold {b}.
  static FlatSubmanifold point(std::vector<double> offset);

  int ambient_rank() const { return rank_; }
  int dimension() const { return dim_; }
  double coefficient(int row, int col) const { return matrix_[row * dim_ + col]; }
  const std::vector<double>& offset() const { return offset_; }
  const std::vector<std::pair<double, double>>& box() const { return box_; }

  /// sqrt(det(A^T A)); constant for affine maps.
  double area_density() const { return density_; }
  /// k-dimensional volume of the image of the box.
  double area() const;

  void map(std::span<const double> u, std::span<double> theta) const;

 private:
  int rank_;
  int dim_;
  std::vector<double> matrix_;
  std::vector<double> offset_;
  std::vector<std::pair<double, double>> box_;
  double density_ = 1.0;
};

/// f(theta) = sum over the shell of prod_i sqrt(k_i(n_i)) Phi_{i,n_i}(theta_i).
/// Evaluation shares common tuple prefixes through a trie over the shell.
class Extremizer {
 public:
  Extremizer(const ProductManifold& manifold, const LatticeShell& shell);

  /// Scratch space for one evaluating thread.
  class Workspace {
    friend class Extremizer;
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> node_values;
    std::vector<double> sequence;
  };
  Workspace make_workspace() const;

  double evaluate(std::span<const double> theta, Workspace& ws) const;
  double evaluate(std::span<const double> theta) const;

  /// sum over the shell of prod_i sqrt(k_i(n_i)) = f(0).
  double value_at_origin() const { return origin_value_; }
  /// ||f||_{L^2(M)} = |shell|^{1/2} (orthonormality of sqrt(k) Phi_n).
  double l2_norm() const;
  int max_degree(int factor) const { return max_degree_.at(factor); }
  int rank() const { return static_cast<int>(max_degree_.size()); }
  const LatticeShell& shell() const { return shell_; }

 private:
  struct Level {
    std::vector<int> degree;
    std::vector<int> child_begin;  ///< children of node j are [child_begin[j], child_begin[j+1]) one level down
  };
  ProductManifold manifold_;
  LatticeShell shell_;
  std::vector<int> max_degree_;
  std::vector<std::vector<double>> coefficient_;  ///< sqrt(k_i(n)) / binom(n + alpha_i, n)
  std::vector<std::vector<double>> sqrt_dimension_;
  std::vector<Level> trie_;
  double origin_value_ = 0.0;
};

double extremizer_eval(const ProductManifold& manifold, const LatticeShell& shell,
                       std::span<const double> theta);

/// |shell|^{1/2}.
double extremizer_l2_norm(const LatticeShell& shell);

/// ||f||_{L^2(M)} by Gauss-Jacobi quadrature of the radial measures,
/// independent of the orthonormality shortcut. Cost O(|shell|^2 r).
double extremizer_l2_norm_quadrature(const ProductManifold& manifold, const LatticeShell& shell);

struct Resolution {
  double points_per_wavelength = 8.0;
  int min_nodes_per_axis = 16;
};

/// Gauss-Legendre node counts per axis of the submanifold box for this shell.
std::vector<int> quadrature_nodes(const Extremizer& f, const FlatSubmanifold& submanifold,
                                  const Resolution& resolution);

/// ||f||_{L^p(S)} for each p in `exponents` (p = infinity allowed), by a
/// tensor Gauss-Legendre rule over the box weighted by the area density.
/// k = 0 returns |f(b)|. Throws ResolutionError below 2 points per wavelength.
std::vector<double> restriction_lp_norms(const Extremizer& f, const FlatSubmanifold& submanifold,
                                         std::span<const double> exponents,
                                         const Resolution& resolution = {}, int threads = 1);

double restriction_lp_norm(const ProductManifold& manifold, const LatticeShell& shell,
                           const FlatSubmanifold& submanifold, double p,
                           const Resolution& resolution = {});

/// inf over the polydisc |theta_i| <= epsilon / N of |f(theta)| / f(0),
/// sampled on a grid with `samples_per_axis` points per coordinate
/// (f is even in each coordinate, so [0, epsilon/N] suffices).
double pointwise_lower_check(const Extremizer& f, double epsilon, int samples_per_axis = 4);
double pointwise_lower_check(const ProductManifold& manifold, const LatticeShell& shell,
                             double epsilon = 0.05);

struct SharpnessRow {
  std::int64_t level = 0;
  double spectral_parameter = 0.0;  ///< N
  std::size_t shell_size = 0;
  double p = 2.0;
  double restriction_norm = 0.0;
  double l2_norm = 0.0;
  double ratio = 0.0;
  double envelope = 0.0;      ///< N^{(d-2)/2 - k/p}
  double lower_check = 0.0;   ///< pointwise_lower_check at the configured epsilon
};

struct SharpnessOptions {
  Resolution resolution;
  double epsilon = 0.05;
  int threads = 1;
};

struct SharpnessReport {
  std::vector<SharpnessRow> rows;  ///< ordered by level, then by p as given
  std::vector<double> exponents;   ///< the p values
  std::vector<torus::ExponentFit> fits;  ///< ratio vs N per p (empty when fewer than 3 levels)
  std::vector<double> target_slopes;     ///< (d-2)/2 - k/p per p
};

/// Runs the extremizer on the ordered shell at each level; empty shells are
/// skipped. Throws DomainError when no level yields a nonempty shell.
SharpnessReport sharpness_report(const ProductManifold& manifold, const FlatSubmanifold& submanifold,
                                 std::span<const double> exponents,
                                 std::span<const std::int64_t> levels,
                                 const SharpnessOptions& options = {});

}  // namespace sharpflat::product
