#include "amci/s3_action.hpp"

#include <stdexcept>

namespace amci {

int PermutationS3::sign() const {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      if (image[i] > image[k]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

PermutationS3 PermutationS3::transposition(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2 || i == j)
    throw std::invalid_argument("transposition needs distinct indices in 0..2");
  PermutationS3 s;
  std::swap(s.image[i], s.image[j]);
  return s;
}

const std::array<PermutationS3, 6>& PermutationS3::all() {
  static const std::array<PermutationS3, 6> elems = {
      PermutationS3{{0, 1, 2}}, PermutationS3{{0, 2, 1}}, PermutationS3{{1, 0, 2}},
      PermutationS3{{1, 2, 0}}, PermutationS3{{2, 0, 1}}, PermutationS3{{2, 1, 0}}};
  return elems;
}

PermutationS3 compose(const PermutationS3& outer, const PermutationS3& inner) {
  PermutationS3 out;
  for (int i = 0; i < 3; ++i) out.image[i] = outer.image[inner.image[i]];
  return out;
}

QuotientPolynomial apply_permutation(const PermutationS3& s, const QuotientPolynomial& p) {
  if (p.params.n != 3)
    throw std::invalid_argument("permutation action needs three variables");
  QuotientPolynomial out(p.params);
  for (const auto& [m, c] : p.terms) {
    Monomial im(3);
    for (int i = 0; i < 3; ++i) im[s.image[i]] = m[i];
    out.add_term(im, c);
  }
  return out;
}

namespace {

Monomial dominant_monomial(const Partition& lam, int d) {
  if (lam.parts[0] < lam.parts[1] || lam.parts[1] < lam.parts[2] || lam.parts[2] < 0)
    throw std::invalid_argument("not a partition");
  if (lam.parts[0] > d - 1)
    throw std::invalid_argument("partition part exceeds d-1");
  return Monomial{lam.parts[0], lam.parts[1], lam.parts[2]};
}

}  // namespace

QuotientPolynomial orbit_sum(const Partition& lam, int d) {
  AlgebraParams p{3, d};
  Monomial m = dominant_monomial(lam, d);
  QuotientPolynomial out(p);
  for (const auto& s : PermutationS3::all()) {
    Monomial im(3);
    for (int i = 0; i < 3; ++i) im[s.image[i]] = m[i];
    out.terms.emplace(im, Rat(1));  // set semantics: each distinct monomial once
  }
  return out;
}

QuotientPolynomial signed_orbit_sum(const Partition& lam, int d) {
  AlgebraParams p{3, d};
  Monomial m = dominant_monomial(lam, d);
  QuotientPolynomial out(p);
  for (const auto& s : PermutationS3::all()) {
    Monomial im(3);
    for (int i = 0; i < 3; ++i) im[s.image[i]] = m[i];
    out.add_term(im, Rat(s.sign()));  // repeated parts cancel pairwise
  }
  return out;
}

long long fixed_count(const PermutationS3& s, int d, int j) {
  if (d < 1) throw std::invalid_argument("fixed_count needs d >= 1");
  if (j < 0) return 0;
  int fixed_vars = 0;
  for (int i = 0; i < 3; ++i)
    if (s.image[i] == i) ++fixed_vars;
  if (fixed_vars == 3) return algebra_dim(AlgebraParams{3, d}, j);
  if (fixed_vars == 1) {
    // monomials x^(a,a,c) up to relabeling: 2a + c = j
    long long count = 0;
    for (int a = 0; a <= d - 1; ++a) {
      int c = j - 2 * a;
      if (c >= 0 && c <= d - 1) ++count;
    }
    return count;
  }
  // 3-cycle: only x^(a,a,a) survives
  return (j % 3 == 0 && j / 3 <= d - 1) ? 1 : 0;
}

MultiplicityTriple character_multiplicities(int d, int j) {
  require_multiplicity_domain(d, j);
  auto tau = PermutationS3::transposition(0, 1);
  auto rho = PermutationS3{{1, 2, 0}};

  // permutation character of A_j minus A_{j-1}, one value per conjugacy class
  long long te = fixed_count(PermutationS3::identity(), d, j) -
                 fixed_count(PermutationS3::identity(), d, j - 1);
  long long tt = fixed_count(tau, d, j) - fixed_count(tau, d, j - 1);
  long long tr = fixed_count(rho, d, j) - fixed_count(rho, d, j - 1);

  long long six_triv = te + 3 * tt + 2 * tr;
  long long six_sign = te - 3 * tt + 2 * tr;
  long long six_st = 2 * te - 2 * tr;
  if (six_triv % 6 != 0 || six_sign % 6 != 0 || six_st % 6 != 0)
    throw std::logic_error("character pairing produced a non-integer multiplicity");

  MultiplicityTriple t{six_triv / 6, six_sign / 6, six_st / 6};
  if (t.triv < 0 || t.sign < 0 || t.st < 0)
    throw std::logic_error("character pairing produced a negative multiplicity");
  return t;
}

}  // namespace amci
