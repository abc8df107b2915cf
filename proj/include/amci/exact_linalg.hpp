#pragma once

#include "amci/rational.hpp"

#include <vector>

namespace amci {

using IMatrix = std::vector<std::vector<Int>>;
using QMatrix = std::vector<std::vector<Rat>>;

// Rank by fraction-free (Bareiss) elimination; all intermediates stay integral.
long rank_bareiss(IMatrix a);

// Rank by rational Gauss-Jordan; used to cross-check the fraction-free route.
long rank_rational(QMatrix a);

// Reduce to reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMatrix& a);

// Scale to coprime integer entries with the first nonzero entry positive.
void normalize_primitive(std::vector<Rat>& v);

// Basis of the right nullspace of an (possibly row-empty) matrix with ncols
// columns, one normalized vector per free column of the RREF.
std::vector<std::vector<Rat>> nullspace(QMatrix a, int ncols);

}  // namespace amci
