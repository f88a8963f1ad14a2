#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

#include <Eigen/Core>

namespace clsfront::testing {

// Exhaustive minimum over every monotone path (steps (1,0), (0,1), (1,1))
// from (0,0) to the far corner. Costs are accumulated from the start in path
// order so optimal sums are bit-comparable with a forward DP.
class BruteForceDtw {
 public:
  BruteForceDtw(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) : a_(a), b_(b) {}

  double optimal_cost() {
    best_ = std::numeric_limits<double>::infinity();
    paths_ = 0;
    walk(0, 0, local(0, 0));
    return best_;
  }
  std::size_t paths_seen() const { return paths_; }

 private:
  double local(Eigen::Index i, Eigen::Index j) const {
    double s = 0.0;
    for (Eigen::Index d = 0; d < a_.cols(); ++d) {
      const double diff = a_(i, d) - b_(j, d);
      s += diff * diff;
    }
    return std::sqrt(s);
  }

  void walk(Eigen::Index i, Eigen::Index j, double sum) {
    if (i == a_.rows() - 1 && j == b_.rows() - 1) {
      ++paths_;
      if (sum < best_) best_ = sum;
      return;
    }
    if (i + 1 < a_.rows() && j + 1 < b_.rows()) walk(i + 1, j + 1, sum + local(i + 1, j + 1));
    if (i + 1 < a_.rows()) walk(i + 1, j, sum + local(i + 1, j));
    if (j + 1 < b_.rows()) walk(i, j + 1, sum + local(i, j + 1));
  }

  const Eigen::MatrixXd& a_;
  const Eigen::MatrixXd& b_;
  double best_ = 0.0;
  std::size_t paths_ = 0;
};

// Delannoy number D(m, n): count of such paths on an (m+1) x (n+1) grid.
inline std::size_t delannoy(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) return 1;
  return delannoy(m - 1, n) + delannoy(m, n - 1) + delannoy(m - 1, n - 1);
}

}  // namespace clsfront::testing
