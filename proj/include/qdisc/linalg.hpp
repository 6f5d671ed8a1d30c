#pragma once

// Exact Gauss-Jordan elimination over a field scalar (Scalar, Rational).

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace qdisc {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

namespace detail {

template <class S>
bool is_zero(const S& x) {
  return x == S(0);
}

}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<Eigen::Index> rref(Mat<S>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r)
      if (!detail::is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c)
      if (!detail::is_zero(a(row, c))) a(row, c) = a(row, c) * inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || detail::is_zero(a(r, col))) continue;
      const S f = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c)
        if (!detail::is_zero(a(row, c))) a(r, c) = a(r, c) - f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(Mat<S> a) {
  return rref(a).size();
}

/// Basis of {x : a x = 0}, one column per free variable.
template <class S>
Mat<S> nullspace(Mat<S> a) {
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Mat<S> basis = Mat<S>::Constant(a.cols(), static_cast<Eigen::Index>(free.size()), S(0));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const auto fk = static_cast<Eigen::Index>(k);
    basis(free[k], fk) = S(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], fk) = -a(static_cast<Eigen::Index>(i), free[k]);
  }
  return basis;
}

}  // namespace qdisc
