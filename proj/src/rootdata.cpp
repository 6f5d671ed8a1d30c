#include "qdisc/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "qdisc/linalg.hpp"

namespace qdisc {

namespace {

void bond(Eigen::MatrixXi& a, int i, int j, int aij = -1, int aji = -1) {
  a(i, j) = aij;
  a(j, i) = aji;
}

/// d_i with d_i a_ij = d_j a_ji, scaled to coprime positive integers.
std::vector<int> symmetrizer(const Eigen::MatrixXi& a) {
  const int l = static_cast<int>(a.rows());
  std::vector<Rational> d(static_cast<std::size_t>(l), Rational(0));
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < l; ++j) {
      if (j == i || a(i, j) == 0 || d[static_cast<std::size_t>(j)] != 0) continue;
      d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(i)] * a(i, j) / a(j, i);
      stack.push_back(j);
    }
  }
  Integer den = 1;
  for (const auto& x : d) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> n;
  Integer g = 0;
  for (const auto& x : d) {
    n.push_back(Integer(x * den));
    g = gcd(g, n.back());
  }
  std::vector<int> out;
  for (const auto& x : n) out.push_back(static_cast<int>(Integer(x / g).get_si()));
  return out;
}

}  // namespace

CartanData build(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  const int l = rank;
  auto bad = [&] { return RootDataError("no simple Lie algebra of type " + std::string(1, type) + std::to_string(l)); };
  switch (type) {
    case 'A': if (l < 1 || l > 12) throw bad(); break;
    case 'B':
    case 'C': if (l < 2 || l > 12) throw bad(); break;
    case 'D': if (l < 4 || l > 12) throw bad(); break;
    case 'E': if (l < 6 || l > 8) throw bad(); break;
    case 'F': if (l != 4) throw bad(); break;
    case 'G': if (l != 2) throw bad(); break;
    default: throw bad();
  }
  CartanData c;
  c.type = type;
  c.rank = l;
  c.a = 2 * Eigen::MatrixXi::Identity(l, l);
  auto& a = c.a;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) bond(a, i, i + 1);
      break;
    case 'B':  // alpha_l short
      for (int i = 0; i + 2 < l; ++i) bond(a, i, i + 1);
      bond(a, l - 2, l - 1, -1, -2);
      break;
    case 'C':  // alpha_l long
      for (int i = 0; i + 2 < l; ++i) bond(a, i, i + 1);
      bond(a, l - 2, l - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) bond(a, i, i + 1);
      bond(a, l - 3, l - 1);
      break;
    case 'E':
      bond(a, 0, 2);
      bond(a, 1, 3);
      for (int i = 2; i + 1 < l; ++i) bond(a, i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      bond(a, 0, 1);
      bond(a, 1, 2, -1, -2);
      bond(a, 2, 3);
      break;
    case 'G':  // alpha_1 short
      bond(a, 0, 1, -3, -1);
      break;
  }
  c.d = symmetrizer(a);
  return c;
}

CartanData build(std::string_view label) {
  std::string s;
  for (char ch : label)
    if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])) ||
      !std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      s.size() > 4)
    throw RootDataError("malformed type label '" + std::string(label) + "'");
  return build(s[0], std::stoi(s.substr(1)));
}

bool is_valid(const CartanData& c) {
  const int l = c.rank;
  if (c.a.rows() != l || c.a.cols() != l || static_cast<int>(c.d.size()) != l) return false;
  int g = 0;
  for (int i = 0; i < l; ++i) {
    if (c.a(i, i) != 2 || c.d[static_cast<std::size_t>(i)] <= 0) return false;
    g = std::gcd(g, c.d[static_cast<std::size_t>(i)]);
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      if (c.a(i, j) > 0 || (c.a(i, j) == 0) != (c.a(j, i) == 0)) return false;
      if (c.d[static_cast<std::size_t>(i)] * c.a(i, j) != c.d[static_cast<std::size_t>(j)] * c.a(j, i)) return false;
    }
  }
  return g == 1;
}

std::vector<RootVector> positive_roots(const CartanData& c) {
  const int l = c.rank;
  std::set<RootVector> roots;
  std::vector<RootVector> layer;
  for (int i = 0; i < l; ++i) {
    RootVector r(static_cast<std::size_t>(l), 0);
    r[static_cast<std::size_t>(i)] = 1;
    roots.insert(r);
    layer.push_back(r);
  }
  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const auto& beta : layer)
      for (int i = 0; i < l; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        // alpha_i-string through beta: beta - r alpha_i .. beta + s alpha_i, r - s = alpha_i^vee(beta).
        int r = 0;
        for (RootVector down = beta; down[ui] > 0;) {
          --down[ui];
          if (!roots.count(down)) break;
          ++r;
        }
        int pairing = 0;
        for (int j = 0; j < l; ++j) pairing += beta[static_cast<std::size_t>(j)] * c.a(i, j);
        if (r - pairing <= 0) continue;
        RootVector up = beta;
        ++up[ui];
        next.insert(up);
      }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  std::vector<RootVector> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const RootVector& x, const RootVector& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x < y;
  });
  return out;
}

RootVector maximal_root(const CartanData& c) { return positive_roots(c).back(); }

RootVector maximal_root_table(const CartanData& c) {
  const auto l = static_cast<std::size_t>(c.rank);
  switch (c.type) {
    case 'A': return RootVector(l, 1);
    case 'B': {
      RootVector n(l, 2);
      n[0] = 1;
      return n;
    }
    case 'C': {
      RootVector n(l, 2);
      n[l - 1] = 1;
      return n;
    }
    case 'D': {
      RootVector n(l, 2);
      n[0] = n[l - 2] = n[l - 1] = 1;
      return n;
    }
    case 'E':
      if (l == 6) return {1, 2, 2, 3, 2, 1};
      if (l == 7) return {2, 2, 3, 4, 3, 2, 1};
      return {2, 3, 4, 6, 5, 4, 3, 2};
    case 'F': return {2, 3, 4, 2};
    case 'G': return {3, 2};
  }
  throw RootDataError("unknown type");
}

std::size_t positive_root_count_table(const CartanData& c) {
  const auto l = static_cast<std::size_t>(c.rank);
  switch (c.type) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  throw RootDataError("unknown type");
}

std::vector<int> l0_candidates(const CartanData& c) {
  std::vector<int> out;
  const RootVector n = maximal_root(c);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == 1) out.push_back(static_cast<int>(i) + 1);
  return out;
}

GradationData gradation(const CartanData& c, int l0) {
  const auto cand = l0_candidates(c);
  if (std::find(cand.begin(), cand.end(), l0) == cand.end())
    throw RootDataError("l0 = " + std::to_string(l0) + " is not admissible for " + c.label());
  const int l = c.rank;
  // sum_i h_i a_ij = 2 delta_{j,l0}
  Mat<Rational> sys(l, l + 1);
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < l; ++i) sys(j, i) = c.a(i, j);
    sys(j, l) = j == l0 - 1 ? 2 : 0;
  }
  rref(sys);
  GradationData g;
  g.l0 = l0;
  for (int i = 0; i < l; ++i) g.h.push_back(sys(i, l));
  for (const auto& r : positive_roots(c)) {
    if (r[static_cast<std::size_t>(l0 - 1)] == 1) {
      ++g.dim_p_plus;
    } else {
      g.dim_k += 2;
    }
  }
  g.dim_p_minus = g.dim_p_plus;
  g.dim_k += static_cast<std::size_t>(l);
  g.dim_g = g.dim_k + g.dim_p_plus + g.dim_p_minus;
  return g;
}

RhoData rho_and_check(const CartanData& c) {
  const auto l = static_cast<std::size_t>(c.rank);
  RhoData r;
  r.half_sum.assign(l, Rational(0));
  for (const auto& root : positive_roots(c))
    for (std::size_t i = 0; i < l; ++i) r.half_sum[i] += Rational(root[i]) / 2;
  const RootVector n = maximal_root(c);
  for (std::size_t i = 0; i < l; ++i) {
    r.displayed.push_back(Rational(n[i]) / 2);
    r.rho_check.push_back(Rational(n[i] * c.d[i]) / 2);
  }
  r.half_sum_is_weyl_vector = true;
  for (int i = 0; i < c.rank; ++i) {
    Rational pairing = 0;
    for (int j = 0; j < c.rank; ++j) pairing += r.half_sum[static_cast<std::size_t>(j)] * c.a(i, j);
    if (pairing != 1) r.half_sum_is_weyl_vector = false;
  }
  return r;
}

}  // namespace qdisc
