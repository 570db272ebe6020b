#include "doctest.h"

#include <set>

#include "pospart/arrange.hpp"
#include "pospart/oracle.hpp"
#include "support.hpp"

using namespace pospart;
namespace pt = pospart::testing;

namespace {

FinitePointSet fixture_points(const pt::Fixture &f) {
  const auto &pts = f.doc["input"]["points"];
  const std::size_t d = pts[0].size();
  FinitePointSet e(d);
  for (const auto &p : pts)
    e.insert(pt::to_point(p.get<pt::Vec>()));
  return e;
}

Arrangement fixture_arrangement(const pt::Fixture &f) {
  std::vector<LatticePoint> normals;
  for (const auto &n : f.doc["input"]["normals"])
    normals.push_back(pt::to_point(n.get<pt::Vec>()));
  return Arrangement(f.doc["input"]["rank"].get<std::size_t>(), normals);
}

} // namespace

TEST_CASE("gordan_bruteforce examples") {
  auto a = oracle::gordan_bruteforce(FinitePointSet(2, {LatticePoint{1, 0}, LatticePoint{-1, 0}}), 3);
  REQUIRE(a);
  CHECK(a->indices == std::vector<std::size_t>{0, 1});
  CHECK(a->multipliers == std::vector<Integer>{1, 1});

  CHECK_FALSE(oracle::gordan_bruteforce(FinitePointSet(2, {LatticePoint{1, 0}, LatticePoint{0, 1}}), 12));

  auto c = oracle::gordan_bruteforce(
      FinitePointSet(2, {LatticePoint{2, -1}, LatticePoint{-1, 2}, LatticePoint{-1, -1}}), 2);
  REQUIRE(c);
  CHECK(c->multipliers == std::vector<Integer>{1, 1, 1});

  auto w = oracle::gordan_bruteforce(
      FinitePointSet(2, {LatticePoint{2, 0}, LatticePoint{-1, 0}}), 3);
  REQUIRE(w);
  CHECK(w->multipliers == std::vector<Integer>{1, 2});
}

TEST_CASE("gordan_bruteforce guards") {
  FinitePointSet nine(1);
  for (long i = 1; i <= 9; ++i)
    nine.insert(LatticePoint{i});
  try {
    oracle::gordan_bruteforce(nine, 2);
    FAIL("expected GuardExceeded");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::GuardExceeded);
  }
  CHECK_THROWS_AS(oracle::gordan_bruteforce(FinitePointSet(1, {LatticePoint{1}}), 13), Error);
  CHECK_THROWS_AS(oracle::gordan_bruteforce(FinitePointSet(1, {LatticePoint{1}}), 0), Error);
}

TEST_CASE("membership_oracle examples") {
  std::vector<Covector> lex{Covector{1, 0}, Covector{0, 1}};
  CHECK(oracle::membership_oracle(lex, LatticePoint{0, 0}));
  CHECK_FALSE(oracle::membership_oracle(lex, LatticePoint{0, -1}));
}

TEST_CASE("generators are deterministic") {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    auto a = oracle::random_positive_part(seed, 3, 3);
    auto b = oracle::random_positive_part(seed, 3, 3);
    CHECK(a == b);
    CHECK(a.forms() == b.forms());
    CHECK(oracle::random_point(seed, 4, 9) == oracle::random_point(seed, 4, 9));
  }
  std::set<std::vector<Covector>> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto x = oracle::random_positive_part(seed, 1, 3);
    CHECK(x.ambient_rank() == 1);
    seen.insert(x.forms());
  }
  CHECK(seen == std::set<std::vector<Covector>>{{}, {Covector{1}}, {Covector{-1}}});
}

TEST_CASE("U_classify agrees with bounded search on the Gordan corpus") {
  const auto fixtures = pt::load_fixtures("gordan_");
  REQUIRE(fixtures.size() >= 48);
  for (const auto &fx : fixtures) {
    CAPTURE(fx.name);
    const auto e = fixture_points(fx);
    const auto verdict = U_classify(e);
    const auto brute = oracle::gordan_bruteforce(e, 12);
    CHECK(verdict.empty() == brute.has_value());
    if (brute)
      CHECK(verify_certificate(e.points(), *brute, e.ambient_rank()));
    if (fx.doc.contains("certificate_bound") && verdict.empty())
      CHECK(oracle::gordan_bruteforce(e, fx.doc["certificate_bound"].get<long>()));
    if (fx.name.rfind("gordan_open", 0) == 0)
      CHECK_FALSE(verdict.empty());
    if (fx.name.rfind("gordan_empty", 0) == 0)
      CHECK(verdict.empty());
  }
}

TEST_CASE("realizable agrees with bounded search on projected sign systems") {
  for (const auto &fx : pt::load_fixtures("arrangement_")) {
    CAPTURE(fx.name);
    const auto a = fixture_arrangement(fx);
    SignVector s(a.size(), -1);
    for (;;) {
      const auto split = split_signs(s, a);
      const auto q = quotient_lattice(split.zero_normals);
      const auto projected = split.excluded.image(q.projection);
      const bool brute = oracle::gordan_bruteforce(projected, 12).has_value();
      CHECK(realizable(s, a).has_value() == !brute);
      std::size_t i = 0;
      while (i < s.size() && s[i] == 1)
        s[i++] = -1;
      if (i == s.size())
        break;
      ++s[i];
    }
  }
}
