#include "amci/multiplicities.hpp"

#include "amci/partitions.hpp"
#include "amci/s3_action.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace amci {

int max_valid_j(int d) { return (3 * (d - 1)) / 2; }

void require_multiplicity_domain(int d, int j) {
  if (d < 3) throw std::invalid_argument("multiplicities need d >= 3");
  if (j < 0 || j > max_valid_j(d))
    throw std::out_of_range("j outside [0, floor(3(d-1)/2)]");
}

long long mult_total(int d, int j) {
  require_multiplicity_domain(d, j);
  return j <= d - 1 ? j + 1 : 3LL * d - 2 - 2LL * j;
}

MultiplicityTriple by_partitions(int d, int j) {
  require_multiplicity_domain(d, j);
  const int l = d - 1;
  MultiplicityTriple t;
  t.triv = count_partitions(3, l, j) - count_partitions(3, l, j - 1);
  t.sign = count_partitions(3, l, j, PartitionClass::Strict) -
           count_partitions(3, l, j - 1, PartitionClass::Strict);
  long long twice = mult_total(d, j) - t.triv - t.sign;
  if (twice < 0 || twice % 2 != 0)
    throw std::logic_error("standard multiplicity parity violated");
  t.st = twice / 2;
  return t;
}

namespace {

long long sign_rec(int d, int j);

// Total extensions of the descent (d,j) -> (d-2,j-3): zero below j = 0.
// j = 1 is a base case: the descent's counting argument needs a partition
// (1,1,-1) that does not exist, and the degree-1 kernel is the standard
// representation alone.
long long triv_rec(int d, int j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (j == 1) return 0;
  thread_local std::map<std::pair<int, int>, long long> cache;
  auto key = std::make_pair(d, j);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  long long v = sign_rec(d - 2, j - 3) + (j <= d - 1 ? 1 : 0);
  cache.emplace(key, v);
  return v;
}

long long sign_rec(int d, int j) {
  if (j <= 0) return 0;
  thread_local std::map<std::pair<int, int>, long long> cache;
  auto key = std::make_pair(d, j);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  long long v = triv_rec(d - 2, j - 3);
  cache.emplace(key, v);
  return v;
}

long long st_rec(int d, int j) {
  if (j <= 0) return 0;
  thread_local std::map<std::pair<int, int>, long long> cache;
  auto key = std::make_pair(d, j);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  long long v = st_rec(d - 2, j - 3) + (j <= d - 1 ? 1 : 0);
  cache.emplace(key, v);
  return v;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

MultiplicityTriple by_recursion(int d, int j) {
  require_multiplicity_domain(d, j);
  return {triv_rec(d, j), sign_rec(d, j), st_rec(d, j)};
}

MultiplicityTriple by_closed_form(int d, int j) {
  require_multiplicity_domain(d, j);
  MultiplicityTriple t;
  if (j >= d) {
    if (d % 2 == 1) {
      long long base = floor_div(3LL * d - 2 * j - 3, 6);
      if ((j - d) % 2 == 0) {
        t.triv = base;
        t.sign = base + 1;
      } else {
        t.triv = base + 1;
        t.sign = base;
      }
    } else {
      t.triv = t.sign = floor_div(3LL * d - 2 * j, 6);
    }
    t.st = floor_div(3LL * d - 2 * j - 1, 3);
  } else {
    const int r = d - j;  // >= 1
    if (d % 2 == 1) {
      long long base = floor_div(3LL * d - 2 * j - 3, 6);
      if (r % 2 == 0) {
        t.triv = t.sign = base - (r - 2) / 2;
      } else {
        t.triv = base - (r - 3) / 2;
        t.sign = base - (r - 1) / 2;
      }
    } else {
      long long base = floor_div(3LL * d - 2 * j, 6);
      if (r % 2 == 0) {
        t.triv = base - (r - 2) / 2;
        t.sign = base - r / 2;
      } else {
        t.triv = t.sign = base - (r - 1) / 2;
      }
    }
    t.st = floor_div(3LL * d - 2 * j - 1, 3) - (d - j - 1);
  }
  return t;
}

bool cell_agrees(const TableCell& cell) {
  const auto& p = cell.partitions;
  if (!(p == cell.recursion && p == cell.closed_form && p == cell.character))
    return false;
  if (p.triv < 0 || p.sign < 0 || p.st < 0) return false;
  return p.triv + p.sign + 2 * p.st == cell.mult;
}

bool MultiplicityTable::all_agree() const {
  for (const auto& cell : cells)
    if (!cell.agree) return false;
  return !cells.empty();
}

MultiplicityTable multiplicity_table(int d) {
  require_multiplicity_domain(d, 0);
  MultiplicityTable table;
  table.d = d;
  for (int j = 0; j <= max_valid_j(d); ++j) {
    TableCell cell;
    cell.j = j;
    cell.mult = mult_total(d, j);
    cell.partitions = by_partitions(d, j);
    cell.recursion = by_recursion(d, j);
    cell.closed_form = by_closed_form(d, j);
    cell.character = character_multiplicities(d, j);
    cell.agree = cell_agrees(cell);
    table.cells.push_back(cell);
  }
  return table;
}

std::vector<MultiplicityTable> cross_validate(int dmax) {
  if (dmax < 3) throw std::invalid_argument("cross_validate needs dmax >= 3");
  std::vector<MultiplicityTable> tables;
  for (int d = 3; d <= dmax; ++d) tables.push_back(multiplicity_table(d));
  return tables;
}

}  // namespace amci
