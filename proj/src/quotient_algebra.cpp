#include "amci/quotient_algebra.hpp"

#include <stdexcept>

namespace amci {

namespace {

void require_valid(const AlgebraParams& p) {
  if (p.n < 1 || p.d < 1) throw std::invalid_argument("algebra needs n >= 1 and d >= 1");
}

void basis_rec(const AlgebraParams& p, int pos, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (pos == p.n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  int room = (p.n - pos - 1) * (p.d - 1);
  int hi = std::min(p.d - 1, remaining);
  int lo = std::max(0, remaining - room);
  for (int e = hi; e >= lo; --e) {
    cur[pos] = e;
    basis_rec(p, pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

int monomial_degree(const Monomial& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

void QuotientPolynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

QuotientPolynomial& QuotientPolynomial::operator+=(const QuotientPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms) add_term(m, c);
  return *this;
}

QuotientPolynomial& QuotientPolynomial::operator-=(const QuotientPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms) add_term(m, -c);
  return *this;
}

QuotientPolynomial& QuotientPolynomial::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms) coeff *= c;
  return *this;
}

QuotientPolynomial make_monomial(AlgebraParams p, const Monomial& m, const Rat& c) {
  require_valid(p);
  if (static_cast<int>(m.size()) != p.n)
    throw std::invalid_argument("monomial has wrong number of variables");
  for (int e : m)
    if (e < 0 || e > p.d - 1) throw std::invalid_argument("exponent outside [0, d-1]");
  QuotientPolynomial q(p);
  q.add_term(m, c);
  return q;
}

QuotientPolynomial apply_F(const QuotientPolynomial& p) {
  QuotientPolynomial out(p.params);
  const int d = p.params.d;
  for (const auto& [m, c] : p.terms) {
    for (int k = 0; k < p.params.n; ++k) {
      if (m[k] + 1 >= d) continue;  // x_k^d = 0
      Monomial up = m;
      up[k] += 1;
      out.add_term(up, c);
    }
  }
  return out;
}

QuotientPolynomial apply_E(const QuotientPolynomial& p) {
  QuotientPolynomial out(p.params);
  const int d = p.params.d;
  for (const auto& [m, c] : p.terms) {
    for (int k = 0; k < p.params.n; ++k) {
      if (m[k] == 0) continue;
      Monomial down = m;
      down[k] -= 1;
      out.add_term(down, c * Rat(m[k] * (d - m[k])));
    }
  }
  return out;
}

QuotientPolynomial apply_H(const QuotientPolynomial& p) {
  QuotientPolynomial out = apply_E(apply_F(p));
  out -= apply_F(apply_E(p));
  return out;
}

std::vector<Monomial> monomial_basis(AlgebraParams p, int j) {
  require_valid(p);
  std::vector<Monomial> out;
  if (j < 0 || j > p.socle_degree()) return out;
  Monomial cur(p.n, 0);
  basis_rec(p, 0, j, cur, out);
  return out;
}

long long algebra_dim(AlgebraParams p, int j) {
  require_valid(p);
  if (j < 0 || j > p.socle_degree()) return 0;
  // running coefficient vector of prod (1 + t + ... + t^{d-1})
  std::vector<long long> coeff{1};
  for (int v = 0; v < p.n; ++v) {
    std::vector<long long> next(coeff.size() + p.d - 1, 0);
    for (size_t i = 0; i < coeff.size(); ++i)
      for (int e = 0; e < p.d; ++e) next[i + e] += coeff[i];
    coeff = std::move(next);
  }
  return coeff[j];
}

}  // namespace amci
