#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "common/fixtures.hpp"
#include "plumbing/contfrac.hpp"
#include "plumbing/errors.hpp"
#include "plumbing/lattice.hpp"
#include "plumbing/seifert.hpp"

using namespace plumbing;

TEST_SUITE("lattice") {

TEST_CASE("canonical vector follows declaration order") {
  auto g = fixtures::twin_minus_one();
  IntVector expect{0, 1, -1, 11, -1, 0, 1};
  CHECK(canonical_vector(g) == expect);
  CHECK(canonical_vector(fixtures::two_branch()) == IntVector{0, 2, 0, 0, 2, 0, 0, 0});
}

TEST_CASE("dense theta on the reference graphs") {
  CHECK(theta_oracle(fixtures::two_branch()) == Rational(2, 3));
  CHECK(theta_oracle(fixtures::twin_minus_one()) == -10);
  CHECK(theta_oracle(fixtures::twin_star()) == -18);
  CHECK_THROWS_AS(theta_oracle(fixtures::star(-2, 5)), MathError);
}

TEST_CASE("leg closed form, frozen small chains") {
  auto leg = [](std::initializer_list<long long> t) {
    return HJExpansion(std::vector<Integer>(t.begin(), t.end()));
  };
  CHECK(leg_closed_form(leg({2})) == std::pair<Rational, Rational>(0, 0));
  CHECK(leg_oracle(leg({2})) == std::pair<Rational, Rational>(0, 0));
  CHECK(leg_closed_form(leg({3})) == std::pair<Rational, Rational>(Rational(-1, 3), Rational(-1, 3)));
  CHECK(leg_closed_form(leg({4})) == std::pair<Rational, Rational>(-1, Rational(-1, 2)));
  CHECK(leg_oracle(leg({4})) == std::pair<Rational, Rational>(-1, Rational(-1, 2)));
}

TEST_CASE("leg closed form equals the tridiagonal oracle up to p = 60") {
  for (long long p = 2; p <= 60; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto e = hj_expand(CoprimePair(p, q));
      CHECK(leg_closed_form(e) == leg_oracle(e));
    }
}

TEST_CASE("first column of the chain inverse is -q/p") {
  std::mt19937 rng(1618);
  std::uniform_int_distribution<int> pd(2, 40);
  for (int rep = 0; rep < 40; ++rep) {
    long long p = pd(rng);
    long long q;
    do {
      q = std::uniform_int_distribution<int>(1, static_cast<int>(p) - 1)(rng);
    } while (std::gcd(p, q) != 1);
    auto e = hj_expand(CoprimePair(p, q));
    std::vector<long long> w;
    for (const auto& a : e.terms) w.push_back(-a.convert_to<long long>());
    auto g = fixtures::chain(w);
    RatVector b(g.size(), 0);
    b[0] = 1;
    CHECK(solve(intersection_matrix(g), b)[0] == Rational(-q, p));
  }
}

TEST_CASE("schur assembly matches the dense quadratic form on random stars") {
  std::mt19937 rng(7919);
  std::uniform_int_distribution<int> e0d(1, 8), kd(1, 4), pd(2, 12), zd(-3, 3);
  int built = 0;
  while (built < 25) {
    Integer e0 = -e0d(rng);
    int k = kd(rng);
    std::vector<SchurLeg> legs;
    std::vector<long long> weights{e0.convert_to<long long>()};
    std::vector<std::pair<int, int>> edges;
    IntVector z;
    long long z0 = zd(rng);
    z.push_back(z0);
    for (int i = 0; i < k; ++i) {
      long long p = pd(rng), q;
      do {
        q = std::uniform_int_distribution<int>(1, static_cast<int>(p) - 1)(rng);
      } while (std::gcd(p, q) != 1);
      auto e = hj_expand(CoprimePair(p, q));
      SchurLeg leg{e, RatVector(e.terms.size())};
      int prev = 0;
      for (std::size_t j = 0; j < e.terms.size(); ++j) {
        long long zj = zd(rng);
        leg.z[j] = zj;
        z.push_back(zj);
        weights.push_back(-e.terms[j].convert_to<long long>());
        edges.push_back({prev, static_cast<int>(weights.size()) - 1});
        prev = static_cast<int>(weights.size()) - 1;
      }
      legs.push_back(std::move(leg));
    }
    auto g = PlumbingGraph::from_weights(weights, edges);
    Rational delta = Rational(e0);
    for (const auto& leg : legs) {
      auto pq = hj_eval(leg.expansion);
      delta += Rational(pq.q, pq.p);
    }
    if (delta == 0) continue;  // the degenerate case is tested separately
    CHECK(schur_decompose(e0, legs, Rational(z0)) == quad_form_inv(intersection_matrix(g), z));
    ++built;
  }
}

TEST_CASE("schur rejects a vanishing euler term") {
  // e0 = -2 with four 1/2 legs: delta = 0
  std::vector<SchurLeg> legs(4, SchurLeg{hj_expand(CoprimePair(2, 1)), RatVector{1}});
  CHECK_THROWS_AS(schur_decompose(-2, legs, 1), MathError);
  // three legs leave delta = -1/2
  legs.pop_back();
  CHECK_NOTHROW(schur_decompose(-2, legs, 1));
}

TEST_CASE("stieltjes positivity on the reference graphs") {
  CHECK(stieltjes_positive(fixtures::two_branch()));
  CHECK(stieltjes_positive(fixtures::twin_minus_one()));
  CHECK(stieltjes_positive(fixtures::twin_star()));
  CHECK(stieltjes_positive(fixtures::chain({-2, -2})));
}

TEST_CASE("embedding verification accepts the standard examples") {
  auto single = [](long long w) { return fixtures::chain({w}); };
  CHECK(verify_ssw_embedding(single(-1), {IntVector{1}}));
  CHECK(verify_ssw_embedding(single(-4), {IntVector{-2}}));

  auto g = fixtures::chain({-5, -2});
  std::vector<IntVector> phi{{-2, -1}, {1, -1}};
  std::vector<std::string> failures;
  CHECK(verify_ssw_embedding(g, phi, &failures));
  CHECK(failures.empty());
}

TEST_CASE("embedding verification pinpoints failures") {
  auto g = fixtures::chain({-5, -2});
  std::vector<std::string> failures;
  // flipped sign in the second row: the off-diagonal pairing and the
  // adjunction relation both break
  CHECK_FALSE(verify_ssw_embedding(g, {{-2, -1}, {1, 1}}, &failures));
  CHECK(!failures.empty());
  // a wrong number of rows is reported, not scored
  failures.clear();
  CHECK_FALSE(verify_ssw_embedding(g, {IntVector{-2, -1}}, &failures));
  REQUIRE(failures.size() == 1);
  CHECK(failures[0] == "embedding has 1 rows, expected 2");
}

}  // TEST_SUITE
