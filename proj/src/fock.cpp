#include "qdisc/fock.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace qdisc {

namespace {

enum class Op { Raise, Lower, Vacuum };

std::vector<Op> letter_ops(const Presentation& p) {
  std::vector<Op> ops;
  for (const auto& g : p.generators()) {
    if (g.name == "z") ops.push_back(Op::Raise);
    else if (g.name == "z^*") ops.push_back(Op::Lower);
    else if (g.name == "f0") ops.push_back(Op::Vacuum);
    else throw std::invalid_argument("no Fock action for generator " + g.name);
  }
  return ops;
}

const Scalar& one_minus_q2n(int n) {
  static thread_local std::vector<Scalar> cache;
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(Scalar(1) - Scalar::q_power(2 * static_cast<int>(cache.size())));
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace

bool FockMatrix::zero_off_boundary() const {
  for (int j = 0; j <= N; ++j) {
    if (is_boundary(j)) continue;
    for (int i = 0; i <= N; ++i)
      if (!m(i, j).is_zero()) return false;
  }
  return true;
}

Scalar fock_weight(int n) {
  Scalar g(1);
  for (int k = 1; k <= n; ++k) g *= one_minus_q2n(k);
  return g;
}

FockMatrix represent(const NCExpr& f, const Presentation& p, int N) {
  if (N < 0) throw std::invalid_argument("Fock truncation must be non-negative");
  const auto ops = letter_ops(p);
  FockMatrix r;
  r.N = N;
  r.degree = std::max(f.degree(), 0);
  r.m = Mat<Scalar>::Constant(N + 1, N + 1, Scalar(0));
  r.boundary.assign(static_cast<std::size_t>(N + 1), false);
  for (int j = 0; j <= N; ++j) {
    for (const auto& [w, c] : f.terms()) {
      int n = j;
      Scalar coef = c;
      bool alive = true;
      for (auto it = w.rbegin(); it != w.rend() && alive; ++it) {
        switch (ops[*it]) {
          case Op::Raise:
            if (n == N) {
              r.boundary[static_cast<std::size_t>(j)] = true;
              alive = false;
            } else {
              ++n;
            }
            break;
          case Op::Lower:
            if (n == 0) alive = false;
            else coef *= one_minus_q2n(n--);
            break;
          case Op::Vacuum:
            if (n != 0) alive = false;
            break;
        }
      }
      if (alive) r.m(n, j) += coef;
    }
  }
  return r;
}

int required_truncation(const NCExpr& f) { return std::max(f.degree(), 0) + 1; }

Eigen::MatrixXd orthonormal_numeric(const NCExpr& f, const Presentation& p, int N, double q0) {
  if (!(q0 > 0 && q0 < 1)) throw std::domain_error("q0 must lie in (0, 1)");
  const FockMatrix r = represent(f, p, N);
  std::vector<double> g(static_cast<std::size_t>(N + 1), 1.0);
  for (int n = 1; n <= N; ++n) g[static_cast<std::size_t>(n)] = g[static_cast<std::size_t>(n - 1)] * (1.0 - std::pow(q0, 2 * n));
  Eigen::MatrixXd o(N + 1, N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j)
      o(i, j) = r.m(i, j).is_zero()
                    ? 0.0
                    : std::sqrt(g[static_cast<std::size_t>(i)] / g[static_cast<std::size_t>(j)]) * to_double(r.m(i, j), q0);
  return o;
}

Mat<Scalar> vacuum_vectors(int N) {
  if (N < 1) throw std::invalid_argument("vacuum_vectors needs N >= 1");
  const auto& p = pol_cq();
  return nullspace<Scalar>(represent(NCExpr::letter(p.letter("z^*")), p, N).m);
}

FaithfulnessReport faithfulness_check(int degree_bound, int N) {
  if (N < 2 * degree_bound + 1) throw std::invalid_argument("faithfulness_check needs N >= 2 * degree_bound + 1");
  const auto& p = pol_cq();
  const Letter z = p.letter("z");
  const Letter zs = p.letter("z^*");
  FaithfulnessReport rep;
  rep.degree_bound = degree_bound;
  rep.N = N;
  std::vector<FockMatrix> family;
  for (int a = 0; a <= degree_bound; ++a)
    for (int b = 0; b <= degree_bound; ++b)
      family.push_back(represent(NCExpr::monomial(concat(power_word(z, a), power_word(zs, b))), p, N));
  rep.family_size = family.size();
  // Only columns that are interior for every member take part.
  std::vector<int> cols;
  for (int j = 0; j <= N; ++j) {
    bool ok = true;
    for (const auto& f : family) ok = ok && !f.is_boundary(j);
    if (ok) cols.push_back(j);
  }
  Mat<Scalar> stacked = Mat<Scalar>::Constant(static_cast<Eigen::Index>((N + 1) * cols.size()),
                                              static_cast<Eigen::Index>(family.size()), Scalar(0));
  for (std::size_t k = 0; k < family.size(); ++k)
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (int i = 0; i <= N; ++i)
        stacked(static_cast<Eigen::Index>(c) * (N + 1) + i, static_cast<Eigen::Index>(k)) = family[k].m(i, cols[c]);
  rep.rank = rank<Scalar>(stacked);
  return rep;
}

IrreducibilityReport irreducibility_check(int N, double q0) {
  const auto& p = pol_cq();
  const Eigen::MatrixXd a = orthonormal_numeric(NCExpr::letter(p.letter("z")), p, N, q0);
  const Eigen::MatrixXd b = orthonormal_numeric(NCExpr::letter(p.letter("z^*")), p, N, q0);
  const Eigen::Index n = N + 1;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  // vec(XA - AX) = (A^T (x) I - I (x) A) vec(X).
  auto kron = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd k(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j) k.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return k;
  };
  Eigen::MatrixXd sys(2 * n * n, n * n);
  sys.topRows(n * n) = kron(a.transpose(), id) - kron(id, a);
  sys.bottomRows(n * n) = kron(b.transpose(), id) - kron(id, b);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
  const auto& sv = svd.singularValues();
  IrreducibilityReport r;
  r.N = N;
  r.q0 = q0;
  r.tolerance = 1e-10 * std::max(1.0, sv(0));
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= r.tolerance) ++r.commutant_dimension;
  for (Eigen::Index i = std::max<Eigen::Index>(0, sv.size() - 3); i < sv.size(); ++i)
    r.smallest_singular_values.push_back(sv(i));
  return r;
}

AdjointnessReport adjointness_check(int N) {
  const auto& p = pol_cq();
  const FockMatrix tz = represent(NCExpr::letter(p.letter("z")), p, N);
  const FockMatrix ts = represent(NCExpr::letter(p.letter("z^*")), p, N);
  AdjointnessReport r;
  r.N = N;
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n) {
      ++r.checked;
      // <z E_m, E_n> = M_z(n, m) g_n;  <E_m, z^* E_n> = M_z*(m, n) g_m.
      const Scalar lhs = tz.m(n, m) * fock_weight(n);
      const Scalar rhs = ts.m(m, n) * fock_weight(m);
      if (lhs != rhs) r.failures.emplace_back(m, n);
    }
  return r;
}

std::vector<std::vector<std::string>> to_strings(const Mat<Scalar>& m) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j).str());
  return out;
}

}  // namespace qdisc
