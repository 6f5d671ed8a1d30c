#pragma once

// Cartan data of the simple complex Lie algebras (Bourbaki numbering) with
// a_ij = alpha_j(H_i), positive roots by closure under root strings, the
// maximal root and the Z-gradations with n_l0 = 1.

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qdisc/scalar.hpp"

namespace qdisc {

class RootDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CartanData {
  char type = 'A';
  int rank = 0;
  Eigen::MatrixXi a;
  /// Coprime positive integers with d_i a_ij = d_j a_ji.
  std::vector<int> d;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

/// Types A (l >= 1), B (l >= 2), C (l >= 2), D (l >= 4) up to rank 12;
/// E6, E7, E8, F4, G2.
CartanData build(char type, int rank);
/// Parses labels such as "A3", "e8" or "G_2".
CartanData build(std::string_view label);
/// Checks the Cartan matrix invariants and the symmetrizer.
bool is_valid(const CartanData& c);

using RootVector = std::vector<int>;

/// Positive roots as coefficient vectors, sorted by height then lexicographically.
std::vector<RootVector> positive_roots(const CartanData& c);
/// Coefficients n_i of the highest root, from enumeration.
RootVector maximal_root(const CartanData& c);
/// Stored classical values, used to cross-validate the enumeration.
RootVector maximal_root_table(const CartanData& c);
std::size_t positive_root_count_table(const CartanData& c);

/// 1-based indices i with n_i = 1.
std::vector<int> l0_candidates(const CartanData& c);

struct GradationData {
  int l0 = 0;
  /// H = sum h_i H_i with alpha_l0(H) = 2 and alpha_j(H) = 0 otherwise.
  std::vector<Rational> h;
  std::size_t dim_k = 0;
  std::size_t dim_p_plus = 0;
  std::size_t dim_p_minus = 0;
  std::size_t dim_g = 0;
};

/// l0 is 1-based and must be admissible.
GradationData gradation(const CartanData& c, int l0);

struct RhoData {
  /// Half the sum of positive roots, over the simple roots.
  std::vector<Rational> half_sum;
  /// 1/2 sum n_i alpha_i as displayed next to the invariant integral.
  std::vector<Rational> displayed;
  /// 1/2 sum n_i d_i, coefficients of rho-check over the H_i.
  std::vector<Rational> rho_check;
  /// alpha_i^vee(half_sum) = 1 for every i.
  bool half_sum_is_weyl_vector = false;
};
RhoData rho_and_check(const CartanData& c);

}  // namespace qdisc
