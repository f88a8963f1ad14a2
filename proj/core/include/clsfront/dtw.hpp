#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "clsfront/cepstra.hpp"

namespace clsfront {

// Monotone alignment from (0, 0) to (T_a - 1, T_b - 1) with steps
// (1,0), (0,1) and (1,1).
struct AlignmentPath {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double cost = 0.0;  // summed Euclidean frame distance along the path
};

double frame_distance(const Eigen::MatrixXd& a, Eigen::Index i, const Eigen::MatrixXd& b,
                      Eigen::Index j);

// Minimum-cost alignment. Ties prefer the diagonal step, then (1,0).
// Throws Errc::dimension_mismatch or Errc::too_short for empty inputs.
AlignmentPath dtw(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
AlignmentPath dtw(const CepstraMatrix& a, const CepstraMatrix& b);

}  // namespace clsfront
