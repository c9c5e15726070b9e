#include <random>

#include <doctest.h>

#include "cubic_orbit/errors.hpp"
#include "cubic_orbit/matrix_power.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cubic_orbit;

namespace {

Mat2 m(int a, int b, int c, int d) { return {a, b, c, d}; }

}  // namespace

TEST_CASE("classification") {
  CHECK(classify({1, 1, 1, 1}) == CaseTag::RankDeficient);
  CHECK(classify({3, 1, -1, 1}) == CaseTag::Repeated);
  CHECK(classify({1, 1, 1, -1}) == CaseTag::AntiTraceDistinct);
  CHECK(classify({2, 1, 1, 2}) == CaseTag::Distinct);
  CHECK(classify({0, 1, -1, 0}) == CaseTag::AntiTraceDistinct);
  CHECK(classify({2, 0, 0, 2}) == CaseTag::Repeated);
  CHECK(to_string(CaseTag::AntiTraceDistinct) == "antitrace-distinct");
}

TEST_CASE("classification matches the defining conditions on the grid") {
  for (const auto& p : testgen::full_grid()) {
    const bool det0 = p.determinant().is_zero();
    const bool disc0 = p.discriminant().is_zero();
    const bool trace0 = p.trace().is_zero();
    const CaseTag tag = classify(p);
    CHECK((tag == CaseTag::RankDeficient) == det0);
    CHECK((tag == CaseTag::Repeated) == (!det0 && disc0));
    CHECK((tag == CaseTag::AntiTraceDistinct) == (!det0 && !disc0 && trace0));
    CHECK((tag == CaseTag::Distinct) == (!det0 && !disc0 && !trace0));
  }
}

TEST_CASE("eigenvalue examples") {
  const Eigenpair e1 = eigenvalues({2, 1, 1, 2});
  REQUIRE(e1.rational());
  CHECK(std::get<Rational>(e1.lambda1) == Rational(3));
  CHECK(std::get<Rational>(e1.lambda2) == Rational(1));
  CHECK(e1.discriminant == Rational(4));

  const Eigenpair e2 = eigenvalues({1, 1, 1, -1});
  REQUIRE_FALSE(e2.rational());
  const auto& l1 = std::get<QuadScalar>(e2.lambda1);
  const auto& l2 = std::get<QuadScalar>(e2.lambda2);
  CHECK(l1.radicand() == Rational(8));
  CHECK(l1 == QuadScalar(0, Rational(mpz_class(1), mpz_class(2)), 8));
  CHECK(l2 == -l1);
  CHECK(l1 * l1 == QuadScalar(2, 0, 8));

  const Eigenpair e3 = eigenvalues({3, 1, -1, 1});
  CHECK(std::get<Rational>(e3.lambda1) == Rational(2));
  CHECK(std::get<Rational>(e3.lambda2) == Rational(2));
}

TEST_CASE("eigenpair sum and product on the grid") {
  for (const auto& p : testgen::full_grid()) {
    const Eigenpair e = eigenvalues(p);
    if (e.rational()) {
      const auto& l1 = std::get<Rational>(e.lambda1);
      const auto& l2 = std::get<Rational>(e.lambda2);
      CHECK(l1 + l2 == p.trace());
      CHECK(l1 * l2 == p.determinant());
      CHECK((l1 - l2) * (l1 - l2) == p.discriminant());
    } else {
      const auto& l1 = std::get<QuadScalar>(e.lambda1);
      const auto& l2 = std::get<QuadScalar>(e.lambda2);
      CHECK(l1 + l2 == QuadScalar::embed(p.trace(), e.discriminant));
      CHECK(l1 * l2 == QuadScalar::embed(p.determinant(), e.discriminant));
      CHECK(l1 - l2 == QuadScalar::root(e.discriminant));
    }
  }
}

TEST_CASE("power examples") {
  CHECK(power_rank_deficient({1, 1, 1, 1}, 3) == m(4, 4, 4, 4));
  CHECK(power_rank_deficient({1, 1, -1, -1}, 2) == Mat2::zero());
  CHECK(power_rank_deficient({1, 1, -1, -1}, 1) == m(1, 1, -1, -1));
  CHECK(power_rank_deficient({1, 1, 1, 1}, 0) == Mat2::identity());
  CHECK(power_distinct({2, 1, 1, 2}, 2) == m(5, 4, 4, 5));
  CHECK(power_distinct({2, 1, 1, 2}, 0) == Mat2::identity());
  CHECK(power_distinct({0, 1, -1, 0}, 2) == m(-1, 0, 0, -1));
  CHECK(power_distinct({1, 1, 1, -1}, 5) == m(4, 4, 4, -4));
  CHECK(power_repeated({3, 1, -1, 1}, 2) == m(8, 4, -4, 0));
  CHECK(power_repeated({3, 1, -1, 1}, 1) == m(3, 1, -1, 1));
  CHECK(power_repeated({2, 0, 0, 2}, 3) == m(8, 0, 0, 8));
  CHECK(power_antitrace({1, 1, 1, -1}, 2) == m(2, 0, 0, 2));
  CHECK(power_antitrace({1, 1, 1, -1}, 3) == m(2, 2, 2, -2));
  CHECK(power_antitrace({1, 1, 1, -1}, 0) == Mat2::identity());
  CHECK(power({1, 1, 1, 1}, 4) == m(8, 8, 8, 8));
  CHECK(power({2, 1, 1, 2}, 0) == Mat2::identity());
  CHECK(testgen::equals(power({3, 1, -1, 1}, 5), oracle::repeated_power({3, 1, -1, 1}, 5)));
}

TEST_CASE("case-specific power routines reject other cases") {
  CHECK_THROWS_AS(power_rank_deficient({2, 1, 1, 2}, 2), CaseMismatch);
  CHECK_THROWS_AS(power_repeated({2, 1, 1, 2}, 2), CaseMismatch);
  CHECK_THROWS_AS(power_distinct({3, 1, -1, 1}, 2), CaseMismatch);
  CHECK_THROWS_AS(power_antitrace({2, 1, 1, 2}, 2), CaseMismatch);
}

TEST_CASE("power equals repeated multiplication on the full grid for n <= 12") {
  std::size_t mismatches = 0;
  for (const auto& p : testgen::full_grid()) {
    const oracle::Mat a = testgen::mat(p);
    oracle::Mat acc = oracle::identity();
    for (std::uint64_t n = 0; n <= 12; ++n) {
      if (!testgen::equals(power(p, n), acc)) ++mismatches;
      acc = oracle::multiply(acc, a);
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("power with non-integer entries") {
  const SystemParams p{Rational(mpz_class(1), mpz_class(2)), Rational(mpz_class(-2), mpz_class(3)), 3,
                       Rational(mpz_class(5), mpz_class(4))};
  CHECK(testgen::equals(power(p, 9), oracle::repeated_power(testgen::mat(p), 9)));
}

TEST_CASE("extended power has no radical component") {
  for (const auto& p : testgen::grid_for(CaseTag::Distinct)) {
    if (rational_sqrt(p.discriminant())) continue;
    for (std::uint64_t n = 0; n <= 8; ++n) {
      const QuadMat2 q = power_distinct_extended(p, n);
      CHECK(q.m11.q().is_zero());
      CHECK(q.m12.q().is_zero());
      CHECK(q.m21.q().is_zero());
      CHECK(q.m22.q().is_zero());
      CHECK(Mat2{q.m11.to_rational(), q.m12.to_rational(), q.m21.to_rational(), q.m22.to_rational()} ==
            power(p, n));
    }
  }
}

TEST_CASE("semigroup law") {
  std::mt19937_64 rng(3);
  const auto grid = testgen::full_grid();
  for (int i = 0; i < 300; ++i) {
    const auto& p = testgen::pick(grid, rng);
    const auto a = std::uniform_int_distribution<std::uint64_t>(0, 6)(rng);
    const auto b = std::uniform_int_distribution<std::uint64_t>(0, 6)(rng);
    CHECK(power(p, a + b) == power(p, a) * power(p, b));
  }
}

TEST_CASE("Cayley-Hamilton") {
  for (const auto& p : testgen::full_grid()) {
    const Mat2 a = coefficient_matrix(p);
    const Mat2 a2 = power(p, 2);
    const Mat2 ta = a.scaled(p.trace());
    const Mat2 di = Mat2::identity().scaled(p.determinant());
    const Mat2 sum{a2.m11 - ta.m11 + di.m11, a2.m12 - ta.m12 + di.m12, a2.m21 - ta.m21 + di.m21,
                   a2.m22 - ta.m22 + di.m22};
    CHECK(sum == Mat2::zero());
  }
}
