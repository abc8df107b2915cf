#include "amci/s3_action.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace amci;

namespace {

Partition mk(int a, int b, int c) { return Partition{{a, b, c}}; }

QuotientPolynomial from_terms(AlgebraParams p,
                              const std::vector<std::pair<Monomial, long>>& ts) {
  QuotientPolynomial q(p);
  for (const auto& [m, c] : ts) q.add_term(m, Rat(c));
  return q;
}

QuotientPolynomial random_poly(AlgebraParams p, int degree, std::mt19937& rng) {
  auto basis = monomial_basis(p, degree);
  std::uniform_int_distribution<long> coeff(-4, 4);
  QuotientPolynomial q(p);
  for (const auto& m : basis) q.add_term(m, Rat(coeff(rng)));
  return q;
}

}  // namespace

TEST_CASE("permutation group structure") {
  auto& all = PermutationS3::all();
  std::set<std::array<int, 3>> seen;
  int plus = 0, minus = 0;
  for (const auto& s : all) {
    seen.insert(s.image);
    (s.sign() == 1 ? plus : minus)++;
  }
  CHECK(seen.size() == 6);
  CHECK(plus == 3);
  CHECK(minus == 3);
  CHECK(PermutationS3::identity().sign() == 1);
  CHECK(PermutationS3::transposition(0, 1).sign() == -1);

  // closure and sign homomorphism
  for (const auto& s : all)
    for (const auto& t : all) {
      auto st = compose(s, t);
      CHECK(seen.count(st.image) == 1);
      CHECK(st.sign() == s.sign() * t.sign());
    }
}

TEST_CASE("apply_permutation golden and composition law") {
  AlgebraParams p{3, 3};
  auto t12 = PermutationS3::transposition(0, 1);
  CHECK(apply_permutation(t12, make_monomial(p, {2, 0, 1})) ==
        make_monomial(p, {0, 2, 1}));

  std::mt19937 rng(555);
  auto q = random_poly(p, 3, rng);
  for (const auto& s : PermutationS3::all())
    for (const auto& t : PermutationS3::all())
      CHECK(apply_permutation(s, apply_permutation(t, q)) ==
            apply_permutation(compose(s, t), q));
}

TEST_CASE("E and F commute with the permutation action") {
  std::mt19937 rng(556);
  AlgebraParams p{3, 4};
  for (int deg = 1; deg <= 6; ++deg) {
    auto q = random_poly(p, deg, rng);
    for (const auto& s : PermutationS3::all()) {
      CHECK(apply_E(apply_permutation(s, q)) == apply_permutation(s, apply_E(q)));
      CHECK(apply_F(apply_permutation(s, q)) == apply_permutation(s, apply_F(q)));
    }
  }
}

TEST_CASE("orbit_sum goldens") {
  AlgebraParams p3{3, 3};
  CHECK(orbit_sum(mk(1, 1, 1), 3) == from_terms(p3, {{{1, 1, 1}, 1}}));
  CHECK(orbit_sum(mk(3, 0, 0), 4) ==
        from_terms(AlgebraParams{3, 4},
                   {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}}));
  CHECK(orbit_sum(mk(2, 1, 0), 3) ==
        from_terms(p3, {{{2, 1, 0}, 1},
                        {{2, 0, 1}, 1},
                        {{1, 2, 0}, 1},
                        {{1, 0, 2}, 1},
                        {{0, 2, 1}, 1},
                        {{0, 1, 2}, 1}}));
  CHECK_THROWS_AS(orbit_sum(mk(3, 0, 0), 3), std::invalid_argument);
  CHECK_THROWS_AS(orbit_sum(mk(1, 2, 0), 3), std::invalid_argument);
}

TEST_CASE("signed_orbit_sum goldens") {
  AlgebraParams p3{3, 3};
  CHECK(signed_orbit_sum(mk(2, 1, 0), 3) ==
        from_terms(p3, {{{2, 1, 0}, 1},
                        {{2, 0, 1}, -1},
                        {{1, 2, 0}, -1},
                        {{1, 0, 2}, 1},
                        {{0, 2, 1}, 1},
                        {{0, 1, 2}, -1}}));
  CHECK(signed_orbit_sum(mk(2, 2, 0), 3).is_zero());
  CHECK(signed_orbit_sum(mk(1, 1, 1), 3).is_zero());
  CHECK(signed_orbit_sum(mk(3, 0, 0), 4).is_zero());
}

TEST_CASE("orbit sums transform as expected") {
  for (int d = 3; d <= 6; ++d) {
    for (int j = 0; j <= max_valid_j(d); ++j) {
      for (const auto& lam : enumerate_partitions(3, d - 1, j)) {
        auto orb = orbit_sum(lam, d);
        for (const auto& s : PermutationS3::all())
          CHECK(apply_permutation(s, orb) == orb);
      }
      for (const auto& lam : enumerate_partitions(3, d - 1, j, PartitionClass::Strict)) {
        auto alt = signed_orbit_sum(lam, d);
        CHECK(!alt.is_zero());
        for (const auto& s : PermutationS3::all()) {
          auto expect = alt;
          expect *= Rat(s.sign());
          CHECK(apply_permutation(s, alt) == expect);
        }
      }
    }
  }
}

TEST_CASE("fixed_count goldens and brute force") {
  CHECK(fixed_count(PermutationS3::transposition(0, 1), 3, 2) == 2);
  CHECK(fixed_count(PermutationS3::identity(), 3, 2) == 6);
  auto rho = compose(PermutationS3::transposition(0, 1), PermutationS3::transposition(1, 2));
  CHECK(rho.sign() == 1);
  CHECK(fixed_count(rho, 3, 3) == 1);
  CHECK(fixed_count(rho, 3, 4) == 0);
  CHECK(fixed_count(PermutationS3::identity(), 4, -1) == 0);

  for (int d = 3; d <= 6; ++d) {
    AlgebraParams p{3, d};
    for (int j = 0; j <= p.socle_degree(); ++j) {
      for (const auto& s : PermutationS3::all()) {
        long long brute = 0;
        for (const auto& m : monomial_basis(p, j)) {
          Monomial im(3);
          for (int i = 0; i < 3; ++i) im[s.image[i]] = m[i];
          if (im == m) ++brute;
        }
        CHECK(fixed_count(s, d, j) == brute);
      }
    }
  }
}

TEST_CASE("character_multiplicities goldens") {
  CHECK(character_multiplicities(9, 8) == MultiplicityTriple{2, 1, 3});
  CHECK(character_multiplicities(3, 2) == MultiplicityTriple{1, 0, 1});
  CHECK(character_multiplicities(3, 3) == MultiplicityTriple{0, 1, 0});
  CHECK(character_multiplicities(10, 12) == MultiplicityTriple{1, 1, 1});
  for (int d = 3; d <= 12; ++d)
    CHECK(character_multiplicities(d, 0) == MultiplicityTriple{1, 0, 0});

  CHECK_THROWS_AS(character_multiplicities(9, 13), std::out_of_range);
  CHECK_THROWS_AS(character_multiplicities(2, 1), std::invalid_argument);
}

TEST_CASE("character triple adds up to the kernel dimension") {
  for (int d = 3; d <= 15; ++d) {
    for (int j = 0; j <= max_valid_j(d); ++j) {
      auto t = character_multiplicities(d, j);
      CHECK(t.triv >= 0);
      CHECK(t.sign >= 0);
      CHECK(t.st >= 0);
      CHECK(t.triv + t.sign + 2 * t.st == mult_total(d, j));
    }
  }
}
