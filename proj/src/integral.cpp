#include "qdisc/integral.hpp"

#include <algorithm>
#include <sstream>

#include "qdisc/fock.hpp"

namespace qdisc {

namespace {

const Presentation& ext() { return extended_pol_cq(); }

}  // namespace

FiniteFunction FiniteFunction::basis(int a, int b, const Scalar& c) {
  FiniteFunction f;
  f.add_term(a, b, c);
  return f;
}

FiniteFunction FiniteFunction::from_expr(const NCExpr& e) {
  const auto& p = ext();
  const Letter z = p.letter("z");
  const Letter zs = p.letter("z^*");
  const Letter f0 = p.letter("f0");
  FiniteFunction out;
  const NCExpr nf = normal_form(e, p);
  for (const auto& [w, c] : nf.terms()) {
    auto it = std::find(w.begin(), w.end(), f0);
    if (it == w.end()) throw NotFiniteError("term " + p.format_word(w) + " is not in the f0 ideal");
    const auto a = static_cast<int>(it - w.begin());
    const auto b = static_cast<int>(w.end() - it - 1);
    if (!std::all_of(w.begin(), it, [z](Letter g) { return g == z; }) ||
        !std::all_of(it + 1, w.end(), [zs](Letter g) { return g == zs; }))
      throw NotFiniteError("word " + p.format_word(w) + " is not of the form z^a f0 z*^b");
    out.add_term(a, b, c);
  }
  return out;
}

Scalar FiniteFunction::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void FiniteFunction::add_term(int a, int b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int FiniteFunction::max_index() const {
  int m = 0;
  for (const auto& [ab, c] : terms_) m = std::max({m, ab.first, ab.second});
  return m;
}

NCExpr FiniteFunction::to_expr() const {
  const auto& p = ext();
  NCExpr e;
  for (const auto& [ab, c] : terms_) {
    Word w = power_word(p.letter("z"), ab.first);
    w.push_back(p.letter("f0"));
    const Word tail = power_word(p.letter("z^*"), ab.second);
    w.insert(w.end(), tail.begin(), tail.end());
    e.add_term(w, c);
  }
  return e;
}

FiniteFunction FiniteFunction::star() const {
  FiniteFunction out;
  for (const auto& [ab, c] : terms_) out.add_term(ab.second, ab.first, c);
  return out;
}

std::string FiniteFunction::str() const { return ext().format(to_expr()); }

FiniteFunction& FiniteFunction::operator+=(const FiniteFunction& o) {
  for (const auto& [ab, c] : o.terms_) add_term(ab.first, ab.second, c);
  return *this;
}

FiniteFunction operator*(const Scalar& c, const FiniteFunction& f) {
  FiniteFunction out;
  for (const auto& [ab, v] : f.terms()) out.add_term(ab.first, ab.second, c * v);
  return out;
}

FiniteFunction multiply_ff(const FiniteFunction& f, const FiniteFunction& g) {
  return FiniteFunction::from_expr(f.to_expr() * g.to_expr());
}

FiniteFunction act(const UqElement& x, const FiniteFunction& f) {
  return FiniteFunction::from_expr(act(extended(), x, f.to_expr()));
}

Scalar integrate(const FiniteFunction& f) {
  if (f.is_zero()) return Scalar(0);
  const int N = f.max_index();
  const FockMatrix t = represent(f.to_expr(), ext(), N);
  Scalar s(0);
  for (int n = 0; n <= N; ++n)
    if (!t.m(n, n).is_zero()) s += t.m(n, n) * Scalar::q_power(-2 * n);
  return s;
}

InvarianceReport invariance_check(int degree_bound) {
  InvarianceReport r;
  r.degree_bound = degree_bound;
  for (Gen g : kGenerators) {
    const UqElement xi = as_uq(g);
    const Scalar eps = counit(xi);
    for (int a = 0; a <= degree_bound; ++a)
      for (int b = 0; b <= degree_bound; ++b) {
        ++r.checked;
        const FiniteFunction f = FiniteFunction::basis(a, b);
        const Scalar lhs = integrate(act(xi, f));
        const Scalar rhs = eps * integrate(f);
        if (lhs != rhs)
          r.failures.push_back(std::string(gen_name(g)) + " on " + f.str() + ": " + lhs.str() + " != " + rhs.str());
      }
  }
  return r;
}

UniquenessReport uniqueness_solve(int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  const int D = degree_bound;
  auto idx = [D](int a, int b) { return static_cast<Eigen::Index>(a * (D + 1) + b); };
  std::vector<std::vector<std::pair<Eigen::Index, Scalar>>> rows;
  for (Gen g : kGenerators) {
    const UqElement xi = as_uq(g);
    const Scalar eps = counit(xi);
    for (int a = 0; a <= D; ++a)
      for (int b = 0; b <= D; ++b) {
        const FiniteFunction img = act(xi, FiniteFunction::basis(a, b));
        if (img.max_index() > D) continue;
        std::map<Eigen::Index, Scalar> row;
        for (const auto& [ab, c] : img.terms()) row[idx(ab.first, ab.second)] += c;
        row[idx(a, b)] -= eps;
        std::vector<std::pair<Eigen::Index, Scalar>> sparse;
        for (const auto& [k, c] : row)
          if (!c.is_zero()) sparse.emplace_back(k, c);
        if (!sparse.empty()) rows.push_back(std::move(sparse));
      }
  }
  const Eigen::Index n = (D + 1) * (D + 1);
  Mat<Scalar> a = Mat<Scalar>::Constant(static_cast<Eigen::Index>(rows.size()), n, Scalar(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [k, c] : rows[i]) a(static_cast<Eigen::Index>(i), k) = c;
  const Mat<Scalar> ns = nullspace<Scalar>(a);

  UniquenessReport r;
  r.degree_bound = D;
  r.unknowns = static_cast<std::size_t>(n);
  r.equations = rows.size();
  r.dimension = static_cast<std::size_t>(ns.cols());
  if (r.dimension == 1 && !ns(idx(0, 0), 0).is_zero()) {
    const Scalar norm = ns(idx(0, 0), 0).inverse();
    r.matches_integral = true;
    for (int i = 0; i <= D; ++i)
      for (int j = 0; j <= D; ++j) {
        const Scalar v = ns(idx(i, j), 0) * norm;
        r.solution[{i, j}] = v;
        if (v != integrate(FiniteFunction::basis(i, j))) r.matches_integral = false;
      }
  }
  return r;
}

Mat<Scalar> gram_matrix(int degree_bound) {
  const int D = degree_bound;
  const Eigen::Index n = (D + 1) * (D + 1);
  std::vector<FiniteFunction> basis;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; b <= D; ++b) basis.push_back(FiniteFunction::basis(a, b));
  Mat<Scalar> g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = integrate(multiply_ff(basis[static_cast<std::size_t>(j)].star(), basis[static_cast<std::size_t>(i)]));
  return g;
}

PositivityReport positivity_check(int degree_bound, const Rational& q0) {
  if (!(q0 > 0 && q0 < 1)) throw std::domain_error("q0 must lie in (0, 1)");
  const Mat<Scalar> g = gram_matrix(degree_bound);
  const Eigen::Index n = g.rows();
  Mat<Rational> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = eval_numeric(g(i, j), q0);
  PositivityReport r;
  r.degree_bound = degree_bound;
  r.q0 = q0;
  r.size = static_cast<std::size_t>(n);
  r.positive_definite = true;
  // Symmetric Gaussian elimination; the pivots are the LDL^T diagonal.
  for (Eigen::Index k = 0; k < n; ++k) {
    const Rational piv = a(k, k);
    if (k == 0 || piv < r.min_pivot) r.min_pivot = piv;
    if (piv <= 0) {
      r.positive_definite = false;
      break;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / piv;
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return r;
}

}  // namespace qdisc
