#include "amci/exact_linalg.hpp"

namespace amci {

long rank_bareiss(IMatrix a) {
  if (a.empty() || a[0].empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  Int prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t k = c + 1; k < cols; ++k) {
        Int num = a[r][c] * a[i][k] - a[i][c] * a[r][k];
        // exact by the Sylvester determinant identity
        mpz_divexact(a[i][k].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

std::vector<int> rref(QMatrix& a) {
  std::vector<int> pivots;
  if (a.empty() || a[0].empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat piv = a[r][c];
    for (size_t k = c; k < cols; ++k) a[r][k] /= piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

long rank_rational(QMatrix a) { return static_cast<long>(rref(a).size()); }

void normalize_primitive(std::vector<Rat>& v) {
  Int l(1);
  for (const auto& q : v) {
    Int den = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> w(v.size());
  Int g(0);
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = Int(v[i].get_num()) * (l / Int(v[i].get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g == 0) return;
  for (const auto& x : w) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(w[i] / g);
}

std::vector<std::vector<Rat>> nullspace(QMatrix a, int ncols) {
  auto pivots = rref(a);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    normalize_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace amci
