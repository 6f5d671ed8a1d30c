#pragma once

// Fock representation of Pol(C)_q and its f0-extension in the weighted basis
// E_n (E_n = e_n scaled by sqrt(g_n)):
//   z E_n = E_(n+1),  z^* E_n = (1 - q^2n) E_(n-1),  f0 E_n = delta_n0 E_0,
// with <E_m, E_n> = delta_mn g_n and g_n = prod_(k=1..n) (1 - q^2k).

#include <string>
#include <vector>

#include <Eigen/Core>

#include "qdisc/linalg.hpp"
#include "qdisc/ncpoly.hpp"

namespace qdisc {

struct FockMatrix {
  int N = 0;
  /// M(i, j) = coefficient of E_i in T(f) E_j.
  Mat<Scalar> m;
  /// Columns where applying some word ran past E_N.
  std::vector<bool> boundary;
  /// Longest word of the represented element.
  int degree = 0;

  bool is_boundary(int j) const { return boundary[static_cast<std::size_t>(j)]; }
  /// True when every non-boundary column vanishes.
  bool zero_off_boundary() const;
};

/// g_n.
Scalar fock_weight(int n);

/// p must be Pol(C)_q or the extended algebra (generators z, z^*, optionally f0).
FockMatrix represent(const NCExpr& f, const Presentation& p, int N);
/// Smallest truncation with no boundary at column 0.
int required_truncation(const NCExpr& f);

/// D^(1/2) M D^(-1/2) at q = q0, D = diag(g_n): the orthonormal e_n picture.
Eigen::MatrixXd orthonormal_numeric(const NCExpr& f, const Presentation& p, int N, double q0);

/// Exact joint kernel of T(z^*) on span{E_0..E_N}; columns are basis vectors.
Mat<Scalar> vacuum_vectors(int N);

struct FaithfulnessReport {
  int degree_bound = 0;
  int N = 0;
  std::size_t family_size = 0;
  std::size_t rank = 0;
  bool passed() const { return rank == family_size; }
};
/// Exact rank of the matrices of z^a (z^*)^b, a, b <= degree_bound, on non-boundary columns.
FaithfulnessReport faithfulness_check(int degree_bound, int N);

struct IrreducibilityReport {
  int N = 0;
  double q0 = 0;
  std::size_t commutant_dimension = 0;
  std::vector<double> smallest_singular_values;
  double tolerance = 0;
};
/// Numeric commutant of the truncated orthonormal z and z^*.
IrreducibilityReport irreducibility_check(int N, double q0);

struct AdjointnessReport {
  int N = 0;
  std::size_t checked = 0;
  std::vector<std::pair<int, int>> failures;
  bool passed() const { return failures.empty(); }
};
/// <z E_m, E_n> = <E_m, z^* E_n> for 0 <= m, n <= N.
AdjointnessReport adjointness_check(int N);

std::vector<std::vector<std::string>> to_strings(const Mat<Scalar>& m);

}  // namespace qdisc
