#pragma once

#include "amci/quotient_algebra.hpp"

#include <map>
#include <vector>

namespace amci {

// Graded dimensions of A(n,d): coefficients of (1 + t + ... + t^{d-1})^n.
std::vector<long long> hilbert(int n, int d);

// Irreducible sl2 content of A(n,d) read off the Hilbert function:
// the multiplicity of V(m-2j) is dim A_j - dim A_{j-1}, m = n(d-1).
struct Sl2Decomposition {
  int n = 0, d = 0;
  std::vector<long long> mults;  // mults[j] = multiplicity of V(m-2j)

  int socle_degree() const { return n * (d - 1); }
  long long total_dim() const;
};
Sl2Decomposition sl2_decompose(int n, int d);

// V(m) (x) V(k) = V(m+k) (+) V(m+k-2) (+) ... (+) V(m-k); requires m >= k.
std::vector<int> clebsch_gordan(int m, int k);

// Decomposition of V(d-1)^{(x)n} by iterated Clebsch-Gordan expansion,
// as highest weight -> multiplicity.  Must agree with sl2_decompose.
std::map<int, long long> iterated_tensor_mults(int n, int d);

// Rank of F^(m-2j): A_j -> A_{m-j} for every j in the lower half; the strong
// Lefschetz property holds iff every one of these maps is bijective.
struct LefschetzEntry {
  int j = 0;
  long long rank = 0;
  long long expected = 0;
};
struct LefschetzReport {
  int n = 0, d = 0;
  std::vector<LefschetzEntry> entries;
  bool all_bijective() const;
};
LefschetzReport lefschetz_check(int n, int d);

}  // namespace amci
