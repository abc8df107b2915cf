#pragma once

#include "amci/multiplicities.hpp"
#include "amci/partitions.hpp"
#include "amci/quotient_algebra.hpp"

#include <array>

namespace amci {

// Permutation of the three variables; variable i is sent to image[i].
struct PermutationS3 {
  std::array<int, 3> image{0, 1, 2};

  int sign() const;
  bool operator==(const PermutationS3&) const = default;

  static PermutationS3 identity() { return {}; }
  static PermutationS3 transposition(int i, int j);
  static const std::array<PermutationS3, 6>& all();
};

// Apply inner first, then outer.
PermutationS3 compose(const PermutationS3& outer, const PermutationS3& inner);

QuotientPolynomial apply_permutation(const PermutationS3& s, const QuotientPolynomial& p);

// Sum of the distinct monomials in the orbit of x^lam (coefficients 1).
QuotientPolynomial orbit_sum(const Partition& lam, int d);

// Alternating sum over all six permutations; cancels to zero unless lam is
// strict, in which case all six monomials are distinct.
QuotientPolynomial signed_orbit_sum(const Partition& lam, int d);

// Number of degree-j monomials of A(3,d) fixed by s (0 for j < 0).
long long fixed_count(const PermutationS3& s, int d, int j);

// Fourth multiplicity pipeline: the permutation character of A_j minus that
// of A_{j-1}, paired against the three irreducible S3 characters.
MultiplicityTriple character_multiplicities(int d, int j);

}  // namespace amci
