#include "amci/kernel_bases.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "amci/multiplicities.hpp"

namespace amci {

namespace {

Monomial dominant(const Partition& p) {
  return Monomial{p.parts[0], p.parts[1], p.parts[2]};
}

Rat coeff_of(const QuotientPolynomial& p, const Monomial& m) {
  auto it = p.terms.find(m);
  return it == p.terms.end() ? Rat(0) : it->second;
}

Int integer_coeff(const QuotientPolynomial& p, const Monomial& m) {
  Rat c = coeff_of(p, m);
  if (c.get_den() != 1)
    throw std::logic_error("raising an integer polynomial left a denominator behind");
  return c.get_num();
}

std::vector<Rat> coords(const QuotientPolynomial& p, const std::vector<Monomial>& basis) {
  std::vector<Rat> v;
  v.reserve(basis.size());
  for (const auto& m : basis) v.push_back(coeff_of(p, m));
  return v;
}

bool jointly_independent(const std::vector<QuotientPolynomial>& polys, AlgebraParams ap,
                         int j) {
  if (polys.empty()) return true;
  auto basis = monomial_basis(ap, j);
  QMatrix m;
  for (const auto& p : polys) m.push_back(coords(p, basis));
  return rank_rational(m) == static_cast<long>(polys.size());
}

QMatrix to_rational(const IMatrix& a) {
  QMatrix q;
  q.reserve(a.size());
  for (const auto& row : a) {
    std::vector<Rat> r;
    r.reserve(row.size());
    for (const auto& e : row) r.emplace_back(e);
    q.push_back(std::move(r));
  }
  return q;
}

// common construction for the trivial and sign slices: solve C v = 0 and
// assemble v back into orbit sums
BasisReport orbit_basis(int d, int j, PartitionClass cls) {
  BasisReport out;
  out.d = d;
  out.j = j;
  out.rep = cls == PartitionClass::Plain ? RepType::Trivial : RepType::Sign;
  AlgebraParams ap{3, d};

  auto expected = by_partitions(d, j);
  long long want = cls == PartitionClass::Plain ? expected.triv : expected.sign;

  if (j == 0) {
    if (cls == PartitionClass::Plain)
      out.polys.push_back(make_monomial(ap, Monomial{0, 0, 0}));
  } else {
    CoefficientMatrix c = build_C(d, j, cls);
    auto vectors = nullspace(to_rational(c.entries), static_cast<int>(c.cols.size()));
    for (const auto& v : vectors) {
      QuotientPolynomial p(ap);
      for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        QuotientPolynomial s = cls == PartitionClass::Plain
                                   ? orbit_sum(c.cols[k], d)
                                   : signed_orbit_sum(c.cols[k], d);
        s *= v[k];
        p += s;
      }
      out.polys.push_back(std::move(p));
    }
  }

  if (static_cast<long long>(out.polys.size()) != want)
    throw std::logic_error("orbit nullspace count disagrees with the counting pipelines");

  for (const auto& p : out.polys) {
    BasisElementCert cert;
    cert.in_kernel = apply_E(p).is_zero();
    cert.transforms_correctly = !p.is_zero();
    for (const auto& s : PermutationS3::all()) {
      QuotientPolynomial want_img = p;
      if (cls == PartitionClass::Strict && s.sign() < 0) want_img *= Rat(-1);
      if (!(apply_permutation(s, p) == want_img)) cert.transforms_correctly = false;
    }
    out.certs.push_back(cert);
  }
  out.independent = jointly_independent(out.polys, ap, j);
  return out;
}

}  // namespace

CoefficientMatrix build_C(int d, int j, PartitionClass cls) {
  require_multiplicity_domain(d, j);
  if (j < 1) throw std::out_of_range("coefficient matrix needs j >= 1");
  if (cls == PartitionClass::TwoStrict)
    throw std::invalid_argument("coefficient matrix takes the plain or strict class");

  CoefficientMatrix c;
  c.d = d;
  c.j = j;
  c.cls = cls;
  c.rows = enumerate_partitions(3, d - 1, j - 1, cls);
  c.cols = enumerate_partitions(3, d - 1, j, cls);
  c.entries.assign(c.rows.size(), std::vector<Int>(c.cols.size(), Int(0)));

  for (size_t col = 0; col < c.cols.size(); ++col) {
    QuotientPolynomial sum = cls == PartitionClass::Plain
                                 ? orbit_sum(c.cols[col], d)
                                 : signed_orbit_sum(c.cols[col], d);
    QuotientPolynomial raised = apply_E(sum);
    for (size_t row = 0; row < c.rows.size(); ++row)
      c.entries[row][col] = integer_coeff(raised, dominant(c.rows[row]));
  }
  return c;
}

EchelonReport echelon_certify(const CoefficientMatrix& c) {
  EchelonReport r;
  r.rank = rank_bareiss(c.entries);
  r.full_row_rank = r.rank == static_cast<long>(c.rows.size());

  // support must sit inside the cover relation: column = row + one box
  r.sparsity_ok = true;
  for (size_t i = 0; i < c.rows.size(); ++i)
    for (size_t k = 0; k < c.cols.size(); ++k) {
      if (c.entries[i][k] == 0) continue;
      int ones = 0, other = 0;
      for (int t = 0; t < 3; ++t) {
        int diff = c.cols[k].parts[t] - c.rows[i].parts[t];
        if (diff == 1)
          ++ones;
        else if (diff != 0)
          ++other;
      }
      if (ones != 1 || other != 0) r.sparsity_ok = false;
    }

  // leading entries step right within each run of rows sharing a first part
  r.staircase_ok = true;
  long prev_lead = -1;
  for (size_t i = 0; i < c.rows.size(); ++i) {
    long lead = -1;
    for (size_t k = 0; k < c.cols.size(); ++k)
      if (c.entries[i][k] != 0) {
        lead = static_cast<long>(k);
        break;
      }
    if (lead < 0) {
      r.staircase_ok = false;
      continue;
    }
    if (i > 0 && c.rows[i].parts[0] == c.rows[i - 1].parts[0] && lead <= prev_lead)
      r.staircase_ok = false;
    prev_lead = lead;
  }
  return r;
}

bool BasisReport::certified() const {
  size_t count = rep == RepType::Standard ? pairs.size() : polys.size();
  if (!independent || certs.size() != count) return false;
  for (const auto& c : certs)
    if (!c.ok()) return false;
  return true;
}

BasisReport trivial_basis(int d, int j) {
  require_multiplicity_domain(d, j);
  return orbit_basis(d, j, PartitionClass::Plain);
}

BasisReport sign_basis(int d, int j) {
  require_multiplicity_domain(d, j);
  return orbit_basis(d, j, PartitionClass::Strict);
}

BasisReport standard_basis(int d, int j) {
  require_multiplicity_domain(d, j);
  BasisReport out;
  out.d = d;
  out.j = j;
  out.rep = RepType::Standard;
  AlgebraParams ap{3, d};
  long long want = by_partitions(d, j).st;

  auto t01 = PermutationS3::transposition(0, 1);
  auto t02 = PermutationS3::transposition(0, 2);
  auto rot = compose(t01, t02);  // exponents (a,b,c) -> (b,c,a)

  // basis of the subspace antisymmetric under swapping x_1, x_2
  std::vector<QuotientPolynomial> pair_units;
  for (const auto& m : monomial_basis(ap, j)) {
    if (m[0] <= m[1]) continue;
    QuotientPolynomial u = make_monomial(ap, m);
    Monomial swapped{m[1], m[0], m[2]};
    u.add_term(swapped, Rat(-1));
    pair_units.push_back(std::move(u));
  }

  if (!pair_units.empty()) {
    // stack two linear conditions on the antisymmetric coordinates: the
    // raising operator kills the element, and the three conjugates sum to zero
    auto domain = monomial_basis(ap, j);
    auto lowered = monomial_basis(ap, j - 1);
    QMatrix system(lowered.size() + domain.size(),
                   std::vector<Rat>(pair_units.size(), Rat(0)));
    for (size_t i = 0; i < pair_units.size(); ++i) {
      auto raised = coords(apply_E(pair_units[i]), lowered);
      QuotientPolynomial symm = pair_units[i];
      symm -= apply_permutation(t02, pair_units[i]);
      symm += apply_permutation(rot, pair_units[i]);
      auto folded = coords(symm, domain);
      for (size_t r = 0; r < lowered.size(); ++r) system[r][i] = raised[r];
      for (size_t r = 0; r < domain.size(); ++r) system[lowered.size() + r][i] = folded[r];
    }

    for (const auto& v : nullspace(system, static_cast<int>(pair_units.size()))) {
      QuotientPolynomial p1(ap);
      for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        QuotientPolynomial u = pair_units[k];
        u *= v[k];
        p1 += u;
      }
      QuotientPolynomial p2 = apply_permutation(t02, p1);
      p2 *= Rat(-1);
      out.pairs.push_back(StandardPair{std::move(p1), std::move(p2)});
    }
  }

  if (static_cast<long long>(out.pairs.size()) != want)
    throw std::logic_error("antisymmetric nullspace count disagrees with the counting pipelines");

  std::vector<QuotientPolynomial> all_members;
  for (const auto& pr : out.pairs) {
    BasisElementCert cert;
    cert.in_kernel = apply_E(pr.p1).is_zero() && apply_E(pr.p2).is_zero();
    QuotientPolynomial flipped = apply_permutation(t01, pr.p1);
    flipped += pr.p1;  // (1 2) p1 = -p1
    QuotientPolynomial closing = pr.p1;
    closing += pr.p2;
    closing += apply_permutation(rot, pr.p1);  // p1 + p2 + p3 = 0
    cert.transforms_correctly = !pr.p1.is_zero() && flipped.is_zero() && closing.is_zero();
    out.certs.push_back(cert);
    all_members.push_back(pr.p1);
    all_members.push_back(pr.p2);
  }
  out.independent = jointly_independent(all_members, ap, j);
  return out;
}

long long kernel_dim_bruteforce(int d, int j) {
  if (d < 1) throw std::invalid_argument("quotient algebra needs d >= 1");
  AlgebraParams ap{3, d};
  if (j < 0 || j > ap.socle_degree()) return 0;
  if (algebra_dim(ap, j) > 5000)
    throw std::out_of_range("brute-force kernel restricted to components of dim <= 5000");

  auto domain = monomial_basis(ap, j);
  auto lowered = monomial_basis(ap, j - 1);
  std::map<Monomial, size_t, MonomialDescLex> row_of;
  for (size_t r = 0; r < lowered.size(); ++r) row_of.emplace(lowered[r], r);

  IMatrix m(lowered.size(), std::vector<Int>(domain.size(), Int(0)));
  for (size_t c = 0; c < domain.size(); ++c) {
    auto raised = apply_E(make_monomial(ap, domain[c]));
    for (const auto& [mon, coef] : raised.terms) m[row_of.at(mon)][c] = coef.get_num();
  }
  return static_cast<long long>(domain.size()) - rank_bareiss(m);
}

}  // namespace amci
