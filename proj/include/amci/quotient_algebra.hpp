#pragma once

#include "amci/rational.hpp"

#include <map>
#include <vector>

namespace amci {

// The algebra k[x_1..x_n]/(x_1^d,...,x_n^d) with its monomial basis
// {x^a : 0 <= a_i <= d-1}.  Socle degree n(d-1).
struct AlgebraParams {
  int n = 0;
  int d = 0;

  int socle_degree() const { return n * (d - 1); }
  bool operator==(const AlgebraParams&) const = default;
};

using Monomial = std::vector<int>;  // exponent vector

int monomial_degree(const Monomial& m);

// descending lexicographic order, x_1 exponent most significant
struct MonomialDescLex {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

// Sparse polynomial with exact rational coefficients; zero coefficients are
// never stored, so equality is structural.
struct QuotientPolynomial {
  AlgebraParams params;
  std::map<Monomial, Rat, MonomialDescLex> terms;

  QuotientPolynomial() = default;
  explicit QuotientPolynomial(AlgebraParams p) : params(p) {}

  bool is_zero() const { return terms.empty(); }
  void add_term(const Monomial& m, const Rat& c);

  QuotientPolynomial& operator+=(const QuotientPolynomial& rhs);
  QuotientPolynomial& operator-=(const QuotientPolynomial& rhs);
  QuotientPolynomial& operator*=(const Rat& c);

  bool operator==(const QuotientPolynomial& rhs) const {
    return params == rhs.params && terms == rhs.terms;
  }
};

QuotientPolynomial make_monomial(AlgebraParams p, const Monomial& m, const Rat& c = Rat(1));

// Lowering operator: multiplication by x_1 + ... + x_n; exponents that reach d
// vanish in the quotient.
QuotientPolynomial apply_F(const QuotientPolynomial& p);

// Raising operator: E(x^a) = sum_k a_k (d - a_k) x^a / x_k.
QuotientPolynomial apply_E(const QuotientPolynomial& p);

// H = E.F - F.E; acts on the degree-j component as n(d-1) - 2j.
QuotientPolynomial apply_H(const QuotientPolynomial& p);

// All monomials of total degree j, descending lexicographic.
std::vector<Monomial> monomial_basis(AlgebraParams p, int j);

// dim of the degree-j component (counts monomials without enumerating them).
long long algebra_dim(AlgebraParams p, int j);

}  // namespace amci
