#include "amci/exact_linalg.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace amci;

namespace {

IMatrix to_int(const std::vector<std::vector<long>>& m) {
  IMatrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (long x : row) out.back().emplace_back(x);
  }
  return out;
}

QMatrix to_rat(const std::vector<std::vector<long>>& m) {
  QMatrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (long x : row) out.back().emplace_back(x);
  }
  return out;
}

bool is_zero_product(const QMatrix& a, const std::vector<Rat>& v) {
  for (const auto& row : a) {
    Rat s(0);
    for (size_t k = 0; k < row.size(); ++k) s += row[k] * v[k];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank goldens") {
  CHECK(rank_bareiss(to_int({{4, 0}, {4, 2}})) == 2);
  CHECK(rank_bareiss(to_int({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_bareiss(to_int({{0, 0}, {0, 0}})) == 0);
  CHECK(rank_bareiss(IMatrix{}) == 0);
  CHECK(rank_rational(to_rat({{4, 0}, {4, 2}})) == 2);
  CHECK(rank_rational(to_rat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(rank_bareiss(to_int({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("rref golden") {
  QMatrix a = to_rat({{2, 4}, {1, 2}});
  auto pivots = rref(a);
  CHECK(pivots == std::vector<int>{0});
  CHECK(a[0][0] == 1);
  CHECK(a[0][1] == 2);
  CHECK(a[1][0] == 0);
  CHECK(a[1][1] == 0);
}

TEST_CASE("nullspace goldens and normalization") {
  auto ns = nullspace(to_rat({{1, 2}}), 2);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<Rat>{Rat(2), Rat(-1)});

  CHECK(nullspace(to_rat({{1, 0}, {0, 1}}), 2).empty());

  // empty matrix: whole space
  auto full = nullspace(QMatrix{}, 3);
  REQUIRE(full.size() == 3);
  CHECK(full[0] == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(full[2] == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});

  auto ns2 = nullspace(to_rat({{0, 3, 6}}), 3);
  REQUIRE(ns2.size() == 2);
  CHECK(ns2[0] == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(ns2[1] == std::vector<Rat>{Rat(0), Rat(2), Rat(-1)});
}

TEST_CASE("normalize_primitive clears denominators and fixes sign") {
  std::vector<Rat> v{Rat(-5, 2), Rat(10, 7), Rat(0), Rat(1)};
  normalize_primitive(v);
  CHECK(v == std::vector<Rat>{Rat(35), Rat(-20), Rat(0), Rat(-14)});
}

TEST_CASE("fraction-free and rational ranks agree on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int iter = 0; iter < 200; ++iter) {
    int rows = dim(rng), cols = dim(rng);
    // random low-rank product to hit deficient cases
    int inner = 1 + iter % 4;
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols, 0));
    std::vector<std::vector<long>> u(rows, std::vector<long>(inner));
    std::vector<std::vector<long>> w(inner, std::vector<long>(cols));
    for (auto& r : u)
      for (auto& x : r) x = entry(rng);
    for (auto& r : w)
      for (auto& x : r) x = entry(rng);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < inner; ++k)
        for (int j = 0; j < cols; ++j) m[i][j] += u[i][k] * w[k][j];
    long rb = rank_bareiss(to_int(m));
    long rr = rank_rational(to_rat(m));
    CHECK(rb == rr);
    CHECK(rb <= inner);

    auto ns = nullspace(to_rat(m), cols);
    CHECK(static_cast<long>(ns.size()) == cols - rb);
    for (const auto& v : ns) {
      CHECK(is_zero_product(to_rat(m), v));
      // normalized: integer entries, first nonzero positive
      Rat first(0);
      for (const auto& q : v) {
        CHECK(q.get_den() == 1);
        if (first == 0) first = q;
      }
      CHECK(first > 0);
    }
  }
}

TEST_CASE("bareiss handles pivot growth beyond 64 bits") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-1000, 1000);
  std::vector<std::vector<long>> m(14, std::vector<long>(14));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  long rb = rank_bareiss(to_int(m));
  long rr = rank_rational(to_rat(m));
  CHECK(rb == rr);
}
