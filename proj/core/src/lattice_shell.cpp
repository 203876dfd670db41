#include <algorithm>
#include <cmath>

#include "sharpflat/errors.hpp"
#include "sharpflat/product_eigenfunctions.hpp"

namespace sharpflat::product {

namespace {

std::int64_t eigenvalue(const CrossSpace& space, std::int64_t n) {
  return n * n + static_cast<std::int64_t>(space.eigenvalue_shift()) * n;
}

// Largest n with n^2 + a n <= budget.
std::int64_t max_degree_within(const CrossSpace& space, std::int64_t budget) {
  if (budget < 0) return -1;
  auto n = static_cast<std::int64_t>(std::sqrt(static_cast<double>(budget)));
  while (n > 0 && eigenvalue(space, n) > budget) --n;
  while (eigenvalue(space, n + 1) <= budget) ++n;
  return n;
}

// The n >= 0 with n^2 + a n = budget, or -1.
std::int64_t exact_degree(const CrossSpace& space, std::int64_t budget) {
  const std::int64_t n = max_degree_within(space, budget);
  return (n >= 0 && eigenvalue(space, n) == budget) ? n : -1;
}

class ShellWalker {
 public:
  ShellWalker(const ProductManifold& manifold, std::int64_t level, bool ordered)
      : manifold_(manifold), level_(level), ordered_(ordered), tuple_(manifold.rank()) {}

  std::vector<DegreeTuple> run() {
    descend(0, level_);
    return std::move(out_);
  }

 private:
  std::int64_t lower_bound(int depth) const {
    if (!ordered_ || depth == 0) return 0;
    return (tuple_[0] + 1) / 2;
  }

  std::int64_t upper_bound(int depth, std::int64_t budget) const {
    std::int64_t hi = max_degree_within(manifold_.factor(depth), budget);
    if (ordered_ && depth > 0) hi = std::min<std::int64_t>(hi, tuple_[depth - 1]);
    return hi;
  }

  // Smallest possible contribution of the factors after `depth`.
  std::int64_t tail_minimum(int depth, std::int64_t lo) const {
    std::int64_t sum = 0;
    for (int j = depth + 1; j < manifold_.rank(); ++j) sum += eigenvalue(manifold_.factor(j), lo);
    return sum;
  }

  bool admits(int depth, std::int64_t n) const {
    return manifold_.factor(depth).admits_degree(static_cast<int>(n));
  }

  void descend(int depth, std::int64_t budget) {
    const int r = manifold_.rank();
    if (depth == r - 1) {
      const std::int64_t n = exact_degree(manifold_.factor(depth), budget);
      if (n < 0 || !admits(depth, n)) return;
      if (n < lower_bound(depth) || (ordered_ && depth > 0 && n > tuple_[depth - 1])) return;
      tuple_[depth] = static_cast<int>(n);
      out_.push_back(tuple_);
      return;
    }
    const std::int64_t hi = upper_bound(depth, budget);
    for (std::int64_t n = lower_bound(depth); n <= hi; ++n) {
      if (!admits(depth, n)) continue;
      tuple_[depth] = static_cast<int>(n);
      const std::int64_t rest = budget - eigenvalue(manifold_.factor(depth), n);
      const std::int64_t lo_next = ordered_ ? (depth == 0 ? (n + 1) / 2 : lower_bound(depth + 1)) : 0;
      if (tail_minimum(depth, lo_next) > rest) break;
      descend(depth + 1, rest);
    }
  }

  const ProductManifold& manifold_;
  std::int64_t level_;
  bool ordered_;
  DegreeTuple tuple_;
  std::vector<DegreeTuple> out_;
};

}  // namespace

ProductManifold::ProductManifold(std::vector<CrossSpace> factors) : factors_(std::move(factors)) {
  if (factors_.size() < 2) throw DomainError("a product manifold needs at least two factors");
  std::stable_sort(factors_.begin(), factors_.end(), [](const CrossSpace& a, const CrossSpace& b) {
    return a.dimension() < b.dimension();
  });
  for (const auto& f : factors_) dimension_ += f.dimension();
}

double LatticeShell::spectral_parameter() const { return std::sqrt(static_cast<double>(level)); }

LatticeShell enumerate_shell(const ProductManifold& manifold, std::int64_t level, bool ordering_constraint) {
  if (level < 0) throw DomainError("spectral level must be nonnegative");
  LatticeShell shell;
  shell.level = level;
  shell.ordered = ordering_constraint;
  shell.members = ShellWalker(manifold, level, ordering_constraint).run();
  return shell;
}

bool in_shell(const ProductManifold& manifold, const DegreeTuple& tuple, std::int64_t level,
              bool ordering_constraint) {
  if (static_cast<int>(tuple.size()) != manifold.rank()) return false;
  std::int64_t sum = 0;
  for (int i = 0; i < manifold.rank(); ++i) {
    if (!manifold.factor(i).admits_degree(tuple[i])) return false;
    sum += eigenvalue(manifold.factor(i), tuple[i]);
  }
  if (sum != level) return false;
  if (!ordering_constraint) return true;
  for (int i = 1; i < manifold.rank(); ++i) {
    if (tuple[i] > tuple[i - 1]) return false;
  }
  return 2 * static_cast<std::int64_t>(tuple.back()) >= tuple.front();
}

std::vector<std::int64_t> unconstrained_shell_counts(const ProductManifold& manifold, std::int64_t max_level) {
  if (max_level < 0) throw DomainError("maximum level must be nonnegative");
  const auto size = static_cast<std::size_t>(max_level) + 1;
  std::vector<std::int64_t> counts(size, 0);
  counts[0] = 1;
  std::vector<std::int64_t> next(size);
  for (const auto& space : manifold.factors()) {
    std::fill(next.begin(), next.end(), 0);
    for (std::int64_t n = 0;; ++n) {
      const std::int64_t lam = eigenvalue(space, n);
      if (lam > max_level) break;
      if (!space.admits_degree(static_cast<int>(n))) continue;
      for (std::int64_t l = lam; l <= max_level; ++l) next[l] += counts[l - lam];
    }
    counts.swap(next);
  }
  return counts;
}

torus::ExponentFit count_growth(const ProductManifold& manifold, std::int64_t max_level) {
  const auto counts = unconstrained_shell_counts(manifold, max_level);
  std::vector<torus::FitPoint> points;
  for (std::int64_t l = 2; l <= max_level; ++l) {
    if (counts[l] > 0) points.push_back({std::sqrt(static_cast<double>(l)), static_cast<double>(counts[l])});
  }
  return torus::fit_exponent(points);
}

}  // namespace sharpflat::product
