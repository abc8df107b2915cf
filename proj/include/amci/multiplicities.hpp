#pragma once

#include <vector>

namespace amci {

// Isotypic multiplicities (trivial, sign, standard) of the kernel of the
// raising operator in one graded piece of A(3,d).
struct MultiplicityTriple {
  long long triv = 0;
  long long sign = 0;
  long long st = 0;

  bool operator==(const MultiplicityTriple&) const = default;
};

// Largest j in the lower half of the grading, floor(3(d-1)/2).
int max_valid_j(int d);

// Throws for d < 3 or j outside [0, max_valid_j(d)].
void require_multiplicity_domain(int d, int j);

// dim(Ker E cap A_j): j+1 up to degree d-1, then 3d-2-2j.
long long mult_total(int d, int j);

// Three independent pipelines for the same triple.
MultiplicityTriple by_partitions(int d, int j);   // partition count differences
MultiplicityTriple by_recursion(int d, int j);    // descent (d,j) -> (d-2,j-3)
MultiplicityTriple by_closed_form(int d, int j);  // explicit floor formulas

struct TableCell {
  int j = 0;
  long long mult = 0;
  MultiplicityTriple partitions, recursion, closed_form, character;
  bool agree = false;
};

// All four pipelines equal and consistent with the total dimension.
bool cell_agrees(const TableCell& cell);

struct MultiplicityTable {
  int d = 0;
  std::vector<TableCell> cells;  // j = 0 .. max_valid_j(d)
  bool all_agree() const;
};

MultiplicityTable multiplicity_table(int d);

// Tables for every 3 <= d <= dmax; disagreements are flagged per cell.
std::vector<MultiplicityTable> cross_validate(int dmax);

}  // namespace amci
