#include "clsfront/dtw.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "clsfront/errors.hpp"

namespace clsfront {

double frame_distance(const Eigen::MatrixXd& a, Eigen::Index i, const Eigen::MatrixXd& b,
                      Eigen::Index j) {
  return (a.row(i) - b.row(j)).norm();
}

AlignmentPath dtw(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() == 0 || b.rows() == 0) throw Error(Errc::too_short, "cannot align an empty matrix");
  if (a.cols() != b.cols()) {
    throw Error(Errc::dimension_mismatch, std::to_string(a.cols()) + " vs " +
                                              std::to_string(b.cols()) + " coefficients");
  }
  const Eigen::Index rows = a.rows(), cols = b.rows();
  constexpr double inf = std::numeric_limits<double>::infinity();

  // acc(i, j): cheapest path cost ending at (i, j), summed from the start.
  Eigen::MatrixXd acc(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double best = 0.0;
      if (i > 0 || j > 0) {
        const double diag = (i > 0 && j > 0) ? acc(i - 1, j - 1) : inf;
        const double up = i > 0 ? acc(i - 1, j) : inf;
        const double left = j > 0 ? acc(i, j - 1) : inf;
        best = std::min({diag, up, left});
      }
      acc(i, j) = best + frame_distance(a, i, b, j);
    }
  }

  AlignmentPath path;
  path.cost = acc(rows - 1, cols - 1);
  Eigen::Index i = rows - 1, j = cols - 1;
  path.pairs.emplace_back(i, j);
  while (i > 0 || j > 0) {
    const double diag = (i > 0 && j > 0) ? acc(i - 1, j - 1) : inf;
    const double up = i > 0 ? acc(i - 1, j) : inf;
    const double left = j > 0 ? acc(i, j - 1) : inf;
    if (diag <= up && diag <= left) {
      --i, --j;
    } else if (up <= left) {
      --i;
    } else {
      --j;
    }
    path.pairs.emplace_back(i, j);
  }
  std::reverse(path.pairs.begin(), path.pairs.end());
  return path;
}

AlignmentPath dtw(const CepstraMatrix& a, const CepstraMatrix& b) { return dtw(a.frames, b.frames); }

}  // namespace clsfront
