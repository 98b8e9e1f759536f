#include "doctest.h"
#include "tcolor/error.hpp"
#include "tcolor/ff.hpp"

using namespace tcolor;

TEST_SUITE("ff") {
  TEST_CASE("select_prime picks the smallest prime at or above the bound") {
    CHECK(select_prime(1, 1).value == 5);
    CHECK(select_prime(2, 2).value == 29);
    CHECK(select_prime(3, 2).value == 59);
    CHECK(select_prime(3, 2).source == PrimeSource::PaperBound);
    CHECK(select_prime(3, 2).paper_bound == 54);
  }

  TEST_CASE("select_prime override") {
    const Prime q = select_prime(2, 2, 7);
    CHECK(q.value == 7);
    CHECK(q.source == PrimeSource::Override);
    CHECK(q.below_paper_bound());
    CHECK_FALSE(select_prime(1, 1, 11).below_paper_bound());
    CHECK_THROWS_AS(select_prime(2, 2, 9), Error);
    try {
      select_prime(2, 2, 9);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPrime);
    }
    CHECK_THROWS_AS(select_prime(0, 1), Error);
  }

  TEST_CASE("select_prime is monotone in the bound") {
    std::uint64_t last = 0;
    for (std::uint64_t m = 1; m <= 8; ++m) {
      for (std::uint64_t d = 1; d <= 5; ++d) {
        const Prime q = select_prime(m, d);
        CHECK(is_prime(q.value));
        CHECK(q.value >= paper_prime_bound(m, d));
        for (std::uint64_t x = paper_prime_bound(m, d); x < q.value; ++x) CHECK_FALSE(is_prime(x));
      }
      const auto v = select_prime(m, 3).value;
      CHECK(v >= last);
      last = v;
    }
  }

  TEST_CASE("inverse") {
    CHECK(inv(Fe{1}, 7) == Fe{1});
    CHECK(inv(Fe{2}, 5) == Fe{3});
    CHECK(inv(Fe{4}, 7) == Fe{2});
    try {
      inv(Fe{0}, 7);
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 97u}) {
      const Zp F(p);
      for (std::uint32_t a = 1; a < p; ++a) CHECK(F.mul(Fe{a}, F.inv(Fe{a})) == Fe{1});
    }
  }

  TEST_CASE("pow_mod and Fermat") {
    CHECK(pow_mod(Fe{3}, 5, 5) == Fe{3});
    CHECK(pow_mod(Fe{4}, 0, 7) == Fe{1});
    CHECK(pow_mod(Fe{2}, 10, 7) == Fe{2});
    for (std::uint32_t p = 2; p <= 100; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint32_t a = 0; a < p; ++a) {
        CHECK(pow_mod(Fe{a}, p, p) == Fe{a});
        if (a > 0) CHECK(pow_mod(Fe{a}, p - 1, p) == Fe{1});
      }
    }
  }

  TEST_CASE("Zp rejects composite moduli") { CHECK_THROWS_AS(Zp(15), Error); }

  TEST_CASE("from_int handles negatives") {
    const Zp F(7);
    CHECK(F.from_int(-1) == Fe{6});
    CHECK(F.from_int(-14) == Fe{0});
    CHECK(F.sub(Fe{2}, Fe{5}) == Fe{4});
  }
}
