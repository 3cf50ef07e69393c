#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "tempdual/ktheory.hpp"

using namespace tempdual;

TEST_CASE("bott periodicity") {
  CHECK(k_of_euclidean(0) == KRanks{1, 0});
  CHECK(k_of_euclidean(1) == KRanks{0, 1});
  CHECK(k_of_euclidean(2) == KRanks{1, 0});
  CHECK(k_of_euclidean(7) == KRanks{0, 1});
  CHECK_THROWS_AS(k_of_euclidean(-1), std::domain_error);
}

TEST_CASE("k of components") {
  CHECK(k_of_component(Component(SigmaOrbit({}, {0, 0}))) == KRanks{0, 0});
  CHECK(k_of_component(Component(SigmaOrbit({1}, {0, 1}))) == KRanks{0, 1});
  // Cone of dimension 5 with isotropy S2 x S2.
  Component cone(SigmaOrbit({1, 1}, {0, 0, 1}));
  REQUIRE(cone.dimension() == 5);
  REQUIRE(cone.isotropy().multiplicities == std::vector<int>{2, 2});
  CHECK(k_of_component(cone) == KRanks{0, 0});
  CHECK(k_of_component(ComplexComponent({0, 0})) == KRanks{0, 0});
  CHECK(k_of_component(ComplexComponent({-1, 1})) == KRanks{1, 0});
}

TEST_CASE("k_real: worked examples") {
  SUBCASE("n = 1") {
    for (int cutoff = 1; cutoff <= 6; ++cutoff) {
      auto k = k_real(1, cutoff);
      CHECK(k.k0.rank() == 0);
      CHECK(k.k1.rank() == 2);
    }
  }
  SUBCASE("n = 3, cutoff 4") {
    auto brute = oracle::free_counts_real(3, 4);
    REQUIRE(brute.deg0 == 8);
    REQUIRE(brute.deg1 == 0);
    auto k = k_real(3, 4);
    CHECK(k.k0.rank() == 8);
    CHECK(k.k1.rank() == 0);
  }
  SUBCASE("n = 4, cutoff 5") {
    auto brute = oracle::free_counts_real(4, 5);
    REQUIRE(brute.deg0 == 10);
    REQUIRE(brute.deg1 == 5);
    auto k = k_real(4, 5);
    CHECK(k.k0.rank() == 10);
    CHECK(k.k1.rank() == 5);
  }
  SUBCASE("cutoff below q") {
    CHECK_THROWS_AS(k_real(4, 1), std::domain_error);
    CHECK_THROWS_AS(k_real(1, 0), std::domain_error);
    CHECK_THROWS_AS(k_real(0, 3), std::domain_error);
    CHECK_NOTHROW(k_real(4, 2));
  }
}

TEST_CASE("k_complex: worked examples") {
  auto brute = oracle::free_counts_complex(2, 1);
  REQUIRE(brute.deg0 == 3);
  auto k = k_complex(2, 1);
  CHECK(k.k0.rank() == 3);
  CHECK(k.k1.rank() == 0);

  k = k_complex(1, 2);
  CHECK(k.k1.rank() == 5);
  CHECK(k.k0.rank() == 0);

  k = k_complex(3, 1);
  CHECK(k.k1.rank() == 1);
  CHECK(k.k1.generators == std::vector<std::string>{"labels:-1,0,1"});
  CHECK(k.k0.rank() == 0);

  CHECK_THROWS_AS(k_complex(4, 1), std::domain_error);
  CHECK_THROWS_AS(k_complex(0, 1), std::domain_error);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  for (int n = 1; n <= 6; ++n)
    for (int cutoff = std::max(1, n / 2); cutoff <= 4; ++cutoff) {
      auto brute = oracle::free_counts_real(n, cutoff);
      auto k = k_real(n, cutoff);
      CHECK(k.k0.rank() == brute.deg0);
      CHECK(k.k1.rank() == brute.deg1);
    }
  for (int n = 1; n <= 5; ++n)
    for (int cutoff = 1; cutoff <= 3; ++cutoff) {
      if (2 * cutoff + 1 < n)
        continue;
      auto brute = oracle::free_counts_complex(n, cutoff);
      auto k = k_complex(n, cutoff);
      CHECK(k.k0.rank() == brute.deg0);
      CHECK(k.k1.rank() == brute.deg1);
    }
}

TEST_CASE("closed forms") {
  using K = IndexFamily::Kind;
  auto cf = closed_form_real(6);
  CHECK(cf.deg1 == IndexFamily{K::Subsets, 3});
  CHECK(cf.deg0 == IndexFamily{K::Subsets, 2});
  CHECK(cf.deg1.describe() == "3-subsets of N");

  cf = closed_form_real(1);
  CHECK(cf.deg1 == IndexFamily{K::FixedRank, 2});
  CHECK(cf.deg0 == IndexFamily{K::FixedRank, 0});

  cf = closed_form_real(2);
  CHECK(cf.deg1 == IndexFamily{K::Subsets, 1});
  CHECK(cf.deg0 == IndexFamily{K::FixedRank, 1});

  cf = closed_form_real(3);
  CHECK(cf.deg0 == IndexFamily{K::SubsetsTimesZ2, 1});
  CHECK(cf.deg0.describe() == "1-subsets of N x Z/2");
  CHECK(cf.deg1.count_at(5) == 0);

  cf = closed_form_complex(4);
  CHECK(cf.deg0 == IndexFamily{K::IntegerSubsets, 4});
  CHECK(cf.deg0.count_at(2) == 5);
  CHECK(cf.deg1.count_at(2) == 0);
}

TEST_CASE("property: enumeration matches closed forms, n <= 10, L <= 8") {
  for (int n = 1; n <= 10; ++n) {
    int q = n / 2;
    auto cf = closed_form_real(n);
    for (int cutoff = std::max(1, q); cutoff <= 8; ++cutoff) {
      auto k = k_real(n, cutoff);
      CHECK(k.k0.rank() == cf.deg0.count_at(cutoff));
      CHECK(k.k1.rank() == cf.deg1.count_at(cutoff));
      // Both degrees nonzero only for even n.
      if (n % 2 == 1)
        CHECK((k.k0.rank() == 0 || k.k1.rank() == 0));
    }
  }
}

TEST_CASE("property: generators are free, parity-correct, unique and stable under larger cutoffs") {
  for (int n = 1; n <= 7; ++n) {
    KGroups prev;
    bool have_prev = false;
    for (int cutoff = std::max(1, n / 2); cutoff <= 6; ++cutoff) {
      auto k = k_real(n, cutoff);
      std::set<std::string> keys;
      for (const auto& c : real_components(n, cutoff)) {
        auto ranks = k_of_component(c);
        CHECK((ranks == KRanks{0, 0}) == !c.is_free());
        if (c.is_free()) {
          CHECK(k[c.dimension() % 2].has_generator(c.key()));
          CHECK_FALSE(k[(c.dimension() + 1) % 2].has_generator(c.key()));
        }
      }
      for (int d : {0, 1}) {
        std::set<std::string> unique(k[d].generators.begin(), k[d].generators.end());
        CHECK(unique.size() == k[d].generators.size());
        if (have_prev) {
          CHECK(k[d].rank() >= prev[d].rank());
          for (const auto& g : prev[d].generators)
            CHECK(k[d].has_generator(g));
        }
      }
      prev = k;
      have_prev = true;
    }
  }
}

TEST_CASE("complex side concentrated in degree n mod 2") {
  for (int n = 1; n <= 6; ++n)
    for (int cutoff = 1; cutoff <= 4; ++cutoff) {
      if (2 * cutoff + 1 < n)
        continue;
      auto k = k_complex(n, cutoff);
      CHECK(k[n % 2].rank() == binomial(2 * cutoff + 1, n));
      CHECK(k[(n + 1) % 2].rank() == 0);
    }
}

TEST_CASE("k classes") {
  auto k = k_real(2, 3);
  const auto& g = k.k1;
  REQUIRE(g.rank() == 3);
  auto g1 = KClass::generator(g, g.generators[0]);
  auto g2 = KClass::generator(g, g.generators[1]);

  CHECK((g1 + (-1) * g1).is_zero());
  auto sum = g1 + g2;
  CHECK(sum.coefficients().size() == 2);
  CHECK(sum.coefficient(g.generators[0]) == 1);
  CHECK(sum.coefficient(g.generators[1]) == 1);
  CHECK(sum.coefficient(g.generators[2]) == 0);

  auto three = 3 * g1;
  CHECK((2 * three).coefficient(g.generators[0]) == 6);
  CHECK((0 * three).is_zero());

  CHECK_THROWS_AS(KClass::generator(g, "labels:0"), std::invalid_argument);
  auto other = KClass::generator(k.k0, k.k0.generators[0]);
  CHECK_THROWS_AS(g1 + other, std::invalid_argument);
  auto different_cutoff = KClass::generator(k_real(2, 4).k1, g.generators[0]);
  CHECK_THROWS_AS(kclass_add(g1, different_cutoff), std::invalid_argument);
}
