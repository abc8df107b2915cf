#pragma once

#include "amci/exact_linalg.hpp"
#include "amci/partitions.hpp"
#include "amci/quotient_algebra.hpp"
#include "amci/s3_action.hpp"

#include <vector>

namespace amci {

// Matrix of the raising operator restricted to one isotypic slice, written in
// the orbit-sum basis (plain partitions for the trivial slice, signed orbit
// sums over strict partitions for the sign slice).  Entry (mu, lambda) is the
// coefficient of the dominant monomial x^mu in E applied to the column's
// orbit sum.  Rows are partitions of j-1, columns partitions of j, both in
// descending lexicographic order.
struct CoefficientMatrix {
  int d = 0;
  int j = 0;
  PartitionClass cls = PartitionClass::Plain;
  std::vector<Partition> rows;
  std::vector<Partition> cols;
  IMatrix entries;
};

// Requires d >= 3 and 1 <= j <= max_valid_j(d); Plain or Strict only.
CoefficientMatrix build_C(int d, int j, PartitionClass cls);

// Structural certificate for a coefficient matrix: full row rank by exact
// elimination, support contained in the one-step cover relation, and leading
// entries forming a staircase inside each block of rows sharing a first part.
struct EchelonReport {
  long rank = 0;
  bool full_row_rank = false;
  bool sparsity_ok = false;
  bool staircase_ok = false;

  bool ok() const { return full_row_rank && sparsity_ok && staircase_ok; }
};

EchelonReport echelon_certify(const CoefficientMatrix& c);

enum class RepType { Trivial, Sign, Standard };

// A standard-representation member is stored as the pair (P1, P2) with
// P1 antisymmetric under swapping x_1, x_2 and P2 = -(P1 with x_1, x_3
// swapped); the third vector P3 = -P1 - P2 is implicit.
struct StandardPair {
  QuotientPolynomial p1;
  QuotientPolynomial p2;
};

struct BasisElementCert {
  bool in_kernel = false;
  bool transforms_correctly = false;

  bool ok() const { return in_kernel && transforms_correctly; }
};

struct BasisReport {
  int d = 0;
  int j = 0;
  RepType rep = RepType::Trivial;
  std::vector<QuotientPolynomial> polys;  // trivial / sign members
  std::vector<StandardPair> pairs;        // standard members
  std::vector<BasisElementCert> certs;    // one per member
  bool independent = false;

  long long multiplicity() const {
    return rep == RepType::Standard ? static_cast<long long>(pairs.size())
                                    : static_cast<long long>(polys.size());
  }
  bool certified() const;
};

// Explicit homogeneous bases of the isotypic components of Ker E in degree j,
// with per-element certificates recomputed from scratch (kernel membership by
// applying E, equivariance by applying all six permutations, independence by
// an exact rank computation).  Throw logic_error if the element count ever
// disagrees with the counting pipelines.
BasisReport trivial_basis(int d, int j);
BasisReport sign_basis(int d, int j);
BasisReport standard_basis(int d, int j);

// dim Ker(E : A_j -> A_{j-1}) straight from the monomial matrix of E, with no
// representation theory involved.  Guarded to dim A_j <= 5000.
long long kernel_dim_bruteforce(int d, int j);

}  // namespace amci
