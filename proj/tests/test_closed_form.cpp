#include <random>

#include <doctest.h>

#include "cubic_orbit/closed_form.hpp"
#include "cubic_orbit/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cubic_orbit;

namespace {

Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

bool same(const OrbitTerm& t, const Rational& x, const Rational& y) {
  return factored_equal(t.x, x) && factored_equal(t.y, y);
}

/// Random init outside the zero set, or nullopt after a few tries.
std::optional<InitialPair> outside_zero_set(const SystemParams& p, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const InitialPair init = testgen::random_init(rng);
    if (zero_set_member(p, init).status == ZeroSetStatus::NonMember) return init;
  }
  return std::nullopt;
}

OrbitTerm case_solver(const SystemParams& p, const InitialPair& init, std::uint64_t n) {
  return solve_case(p, init, n);
}

}  // namespace

TEST_CASE("direct iteration examples") {
  const auto t = iterate_direct({1, 1, 1, 1}, {1, 1}, 2);
  REQUIRE(t.size() == 3);
  CHECK(same(t[1], 2, 2));
  CHECK(same(t[2], 16, 16));

  const auto z = iterate_direct({2, 1, 1, 2}, {0, 5}, 2);
  CHECK(z[0].x.is_zero());
  CHECK(same(z[1], 0, 0));
  CHECK(same(z[2], 0, 0));

  const auto o = oracle::iterate({1, 1, 1, -1}, 1, 2, 2);
  const auto a = iterate_direct({1, 1, 1, -1}, {1, 2}, 2);
  CHECK(same(a[2], Rational(o[2].first), Rational(o[2].second)));
  CHECK(same(a[2], -48, -96));

  CHECK_THROWS_AS(iterate_direct({2, 1, 1, 2}, {1, 2}, 30), DigitBudgetExceeded);
}

TEST_CASE("cubic coefficient equation") {
  CHECK(factored_equal(cubic_coeff_solve(CoeffSequence({}), 5, 0), Rational(5)));
  CHECK(factored_equal(cubic_coeff_solve(CoeffSequence({2, 2}), 1, 2), Rational(16)));
  CHECK(factored_equal(cubic_coeff_solve(CoeffSequence({2, 3}), 1, 2), Rational(24)));
  CHECK(factored_equal(cubic_coeff_solve(CoeffSequence({q(1, 2), -3, 2}), q(2, 3), 3),
                       [] {
                         mpq_class x(2, 3);
                         const mpq_class c[] = {mpq_class(1, 2), -3, 2};
                         for (const auto& k : c) x = k * x * x * x;
                         return Rational(x);
                       }()));
  CHECK_THROWS(CoeffSequence({1, 0}));
  CHECK_THROWS(cubic_coeff_solve(CoeffSequence({2}), 1, 2));
}

TEST_CASE("case solver examples") {
  CHECK(same(solve_rank_deficient({1, 1, 1, 1}, {1, 1}, 2), 16, 16));
  CHECK(same(solve_rank_deficient({1, 1, 1, 1}, {1, 1}, 1), 2, 2));
  CHECK(same(solve_rank_deficient({1, 1, 1, 1}, {3, 4}, 0), 3, 4));
  CHECK_THROWS_AS(solve_rank_deficient({1, 1, 1, 1}, {1, -1}, 3), TrivialSolutionEncountered);
  CHECK_THROWS_AS(solve_rank_deficient({1, 1, -1, -1}, {1, 2}, 3), TrivialSolutionEncountered);

  CHECK(same(solve_distinct({2, 1, 1, 2}, {1, 2}, 1), 8, 10));
  CHECK(same(solve_distinct({2, 1, 1, 2}, {1, 2}, 2), 2080, 2240));
  CHECK(same(solve_distinct({2, 1, 1, 2}, {1, 2}, 0), 1, 2));

  CHECK(same(solve_repeated({3, 1, -1, 1}, {1, 2}, 1), 10, 2));
  const auto direct = oracle::iterate({3, 1, -1, 1}, 1, 2, 2);
  CHECK(same(solve_repeated({3, 1, -1, 1}, {1, 2}, 2), Rational(direct[2].first), Rational(direct[2].second)));
  CHECK(same(solve_repeated({3, 1, -1, 1}, {1, 2}, 0), 1, 2));

  CHECK(same(solve_antitrace({1, 1, 1, -1}, {1, 2}, 1), 6, -2));
  CHECK(same(solve_antitrace({1, 1, 1, -1}, {1, 2}, 2), -48, -96));
  CHECK(same(solve_antitrace({1, 1, 1, -1}, {1, 2}, 0), 1, 2));
  CHECK_THROWS_AS(solve_antitrace({1, 1, 1, -1}, {1, 1}, 2), TrivialSolutionEncountered);

  CHECK_THROWS_AS(solve_distinct({1, 1, 1, 1}, {1, 2}, 1), CaseMismatch);
  CHECK_THROWS_AS(solve_repeated({2, 1, 1, 2}, {1, 2}, 1), CaseMismatch);
  CHECK_THROWS_AS(solve_antitrace({2, 1, 1, 2}, {1, 2}, 1), CaseMismatch);
  CHECK_THROWS_AS(solve_rank_deficient({2, 1, 1, 2}, {1, 2}, 1), CaseMismatch);
}

TEST_CASE("solve dispatch") {
  const SolveResult r = solve({1, 1, 1, -1}, {1, 1}, 4);
  REQUIRE(std::holds_alternative<TrivialReport>(r));
  CHECK(std::get<TrivialReport>(r).witness == 1);

  const SolveResult s = solve({2, 1, 1, 2}, {1, 2}, 3);
  REQUIRE(std::holds_alternative<OrbitTerm>(s));
  const auto direct = iterate_direct({2, 1, 1, 2}, {1, 2}, 3);
  CHECK(factored_equal(std::get<OrbitTerm>(s).x, direct[3].x));
  CHECK(factored_equal(std::get<OrbitTerm>(s).y, direct[3].y));

  CHECK_THROWS_AS(solve({0, 0, 1, 1}, {1, 1}, 2), DegenerateParameters);
  // Unknown verdicts only matter once n reaches the horizon.
  CHECK(std::holds_alternative<OrbitTerm>(solve({1, -2, 1, 1}, {1, 1}, 3, 10)));
  CHECK_THROWS_AS(solve({1, -2, 1, 1}, {1, 1}, 12, 10), UnknownWithinHorizon);
}

TEST_CASE("reconstruction examples") {
  CHECK(same(reconstruct_general({2, 1, 1, 2}, {1, 2}, 2), 2080, 2240));
  CHECK(same(reconstruct_general({2, 1, 1, 2}, {3, 5}, 0), 3, 5));
  const OrbitTerm a = reconstruct_general({3, 1, -1, 1}, {1, 2}, 3);
  const OrbitTerm b = solve_repeated({3, 1, -1, 1}, {1, 2}, 3);
  CHECK(factored_equal(a.x, b.x));
  CHECK(factored_equal(a.y, b.y));
  CHECK_THROWS_AS(reconstruct_general({1, 1, 1, -1}, {1, 1}, 3), TrivialSolutionEncountered);
}

TEST_CASE("verification reports") {
  const auto r1 = verify({1, 1, 1, 1}, {1, 1}, 4);
  CHECK(r1.all_agree());
  CHECK(r1.rows.size() == 5);
  for (const auto& row : r1.rows) {
    CHECK(row.closed_form == true);
    CHECK(row.reconstruct == true);
  }

  const auto r2 = verify({1, 1, 1, -1}, {1, 1}, 4);
  REQUIRE(r2.verdict.has_value());
  CHECK(r2.verdict->member());
  CHECK(r2.verdict->witness == 1u);
  CHECK(r2.all_agree());

  const auto r3 = verify({2, 1, 1, 2}, {0, 1}, 2);
  CHECK(r3.verdict->witness == 0u);
  CHECK(r3.all_agree());

  const auto r4 = verify({0, 0, 1, 1}, {1, 1}, 3);
  CHECK(r4.degenerate);
  CHECK(r4.all_agree());

  const auto deep = verify({2, 1, 1, 2}, {1, 2}, 10);
  CHECK(deep.all_agree());
  CHECK(deep.rows.back().expanded == false);
}

TEST_CASE("verify_all keeps input order") {
  std::vector<VerifyJob> jobs;
  std::mt19937_64 rng(43);
  const auto grid = testgen::grid_for(CaseTag::Distinct);
  for (int i = 0; i < 24; ++i) jobs.push_back({testgen::pick(grid, rng), testgen::random_init(rng), 4});
  const auto reports = verify_all(jobs, {}, 4);
  REQUIRE(reports.size() == jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CHECK(reports[i].params == jobs[i].params);
    CHECK(reports[i].init == jobs[i].init);
    CHECK(reports[i].all_agree());
  }
}

TEST_CASE("closed forms match the recurrence for every case") {
  std::mt19937_64 rng(47);
  for (CaseTag tag : testgen::kAllCases) {
    const auto grid = testgen::grid_for(tag);
    std::size_t checked = 0;
    for (int i = 0; i < 40; ++i) {
      const auto& p = testgen::pick(grid, rng);
      const auto init = outside_zero_set(p, rng);
      if (!init) continue;
      const auto direct = oracle::iterate(testgen::coeffs(p), init->x0.get(), init->y0.get(), 5);
      for (std::uint64_t n = 0; n <= 5; ++n) {
        const OrbitTerm t = case_solver(p, *init, n);
        CHECK(same(t, Rational(direct[n].first), Rational(direct[n].second)));
        const OrbitTerm r = reconstruct_general(p, *init, n);
        CHECK(factored_equal(r.x, t.x));
        CHECK(factored_equal(r.y, t.y));
      }
      ++checked;
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("ratio identity y_n / x_n = v_n / u_n") {
  std::mt19937_64 rng(53);
  for (CaseTag tag : testgen::kAllCases) {
    const auto grid = testgen::grid_for(tag);
    for (int i = 0; i < 20; ++i) {
      const auto& p = testgen::pick(grid, rng);
      const auto init = outside_zero_set(p, rng);
      if (!init) continue;
      for (std::uint64_t n = 0; n <= 8; ++n) {
        const OrbitTerm t = case_solver(p, *init, n);
        const LinearState s = linear_orbit(p, *init, n);
        CHECK(factored_equal(t.y * s.u, t.x * s.v));
      }
    }
  }
}

TEST_CASE("homogeneity and swap symmetry") {
  std::mt19937_64 rng(59);
  const Rational scales[] = {-2, q(-1, 2), 3};
  for (CaseTag tag : testgen::kAllCases) {
    const auto grid = testgen::grid_for(tag);
    for (int i = 0; i < 15; ++i) {
      const auto& p = testgen::pick(grid, rng);
      const auto init = outside_zero_set(p, rng);
      if (!init) continue;
      const SystemParams swapped{p.d, p.c, p.b, p.a};
      for (std::uint64_t n = 0; n <= 5; ++n) {
        const OrbitTerm base = case_solver(p, *init, n);
        for (const auto& t : scales) {
          const OrbitTerm scaled = case_solver(p, {t * init->x0, t * init->y0}, n);
          const FactoredValue factor = FactoredValue::power(t, three_pow(n));
          CHECK(factored_equal(scaled.x, base.x * factor));
          CHECK(factored_equal(scaled.y, base.y * factor));
        }
        const OrbitTerm mirror = case_solver(swapped, {init->y0, init->x0}, n);
        CHECK(factored_equal(mirror.x, base.y));
        CHECK(factored_equal(mirror.y, base.x));
      }
    }
  }
}

TEST_CASE("constant-coefficient collapse") {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      if (a + b == 0 || (a == 0 && b == 0)) continue;
      const SystemParams p{a, b, a, b};
      for (const Rational x0 : {Rational(2), q(-1, 3)}) {
        for (std::uint64_t n = 0; n <= 6; ++n) {
          const OrbitTerm t = case_solver(p, {x0, x0}, n);
          const FactoredValue expected = cubic_coeff_solve(CoeffSequence(std::vector<Rational>(n, a + b)), x0, n);
          CHECK(factored_equal(t.x, expected));
          CHECK(factored_equal(t.y, expected));
        }
      }
    }
  }
}
