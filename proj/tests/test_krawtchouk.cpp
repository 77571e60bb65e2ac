#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jch/krawtchouk.hpp"
#include "oracles.hpp"

namespace kw = jch::krawtchouk;

TEST_CASE("degree zero and argument zero are identically one") {
  for (int big_n : {1, 5, 12}) {
    for (int x = 0; x <= big_n; ++x) CHECK(kw::krawtchouk(0, x, 0.3, big_n) == 1.0);
    for (int n = 0; n <= big_n; ++n) CHECK(kw::krawtchouk(n, 0, 0.7, big_n) == 1.0);
  }
}

TEST_CASE("degree one at p = 1/2 is the two-term line 1 - 2x/N") {
  const int big_n = 9;
  for (int x = 0; x <= big_n; ++x) {
    CHECK(std::abs(kw::krawtchouk(1, x, 0.5, big_n) - (1.0 - 2.0 * x / big_n)) < 1e-15);
  }
}

TEST_CASE("argument invariants are enforced") {
  CHECK_THROWS_AS((void)kw::krawtchouk(3, 1, 0.5, 2), std::domain_error);
  CHECK_THROWS_AS((void)kw::krawtchouk(1, -1, 0.5, 2), std::domain_error);
  CHECK_THROWS_AS((void)kw::krawtchouk(1, 1, 0.0, 2), std::domain_error);
  CHECK_THROWS_AS((void)kw::krawtchouk(1, 1, 1.0, 2), std::domain_error);
  CHECK_THROWS_AS((void)kw::normalized_krawtchouk(1, 1, 0.5, 65), std::overflow_error);
  CHECK_NOTHROW((void)kw::normalized_krawtchouk(1, 1, 0.5, 64));
}

TEST_CASE("normalized values, hand-checkable seeds") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // 𝔑=1: w(0)=w(1)=1/2, d_0=1
  CHECK(std::abs(kw::normalized_krawtchouk(0, 0, 0.5, 1) - inv_sqrt2) < 1e-15);
  CHECK(std::abs(kw::normalized_krawtchouk(0, 1, 0.5, 1) - inv_sqrt2) < 1e-15);
  // 𝔑=2: w(0)=1/4, d_1=1/2, K_1(0)=1
  CHECK(std::abs(kw::normalized_krawtchouk(1, 0, 0.5, 2) - inv_sqrt2) < 1e-15);
}

TEST_CASE("discrete orthonormality at 𝔑 = 10") {
  const int big_n = 10;
  for (int n = 0; n <= big_n; ++n) {
    for (int m = 0; m <= big_n; ++m) {
      double s = 0.0;
      for (int x = 0; x <= big_n; ++x) {
        s += kw::normalized_krawtchouk(n, x, 0.5, big_n) *
             kw::normalized_krawtchouk(m, x, 0.5, big_n);
      }
      CHECK(std::abs(s - (n == m ? 1.0 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("recurrence evaluation matches the exact-rational sum up to 𝔑 = 64") {
  for (int big_n : {1, 2, 7, 16, 33, 52, 64}) {
    double worst = 0.0;
    for (int n = 0; n <= big_n; ++n) {
      for (int x = 0; x <= big_n; x += (big_n > 20 ? 3 : 1)) {
        const double got = kw::normalized_krawtchouk(n, x, 0.5, big_n);
        const double want = oracles::normalized_krawtchouk_exact(n, x, big_n);
        worst = std::max(worst, std::abs(got - want));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("exact-rational spot check at machine precision for 𝔑 <= 12") {
  for (int big_n = 1; big_n <= 12; ++big_n) {
    for (int n = 0; n <= big_n; ++n) {
      for (int x = 0; x <= big_n; ++x) {
        const double got = kw::normalized_krawtchouk(n, x, 0.5, big_n);
        const double want = oracles::normalized_krawtchouk_exact(n, x, big_n);
        CHECK(std::abs(got - want) < 1e-14);
      }
    }
  }
}

TEST_CASE("terminating-sum path agrees with recurrence path where it is conditioned") {
  for (int big_n : {2, 6, 11, 16}) {
    for (int n = 0; n <= big_n; ++n) {
      for (int x = 0; x <= big_n; ++x) {
        const double a = kw::normalized_krawtchouk(n, x, 0.5, big_n);
        const double b = kw::normalized_krawtchouk_direct(n, x, 0.5, big_n);
        CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(a)));
      }
    }
  }
}

TEST_CASE("general p evaluation against the exact-rational oracle") {
  for (const auto& [num, den] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{1, 10}}) {
    const double p = static_cast<double>(num) / den;
    for (int big_n : {3, 8, 14}) {
      for (int n = 0; n <= big_n; ++n) {
        for (int x = 0; x <= big_n; ++x) {
          const double got = kw::normalized_krawtchouk(n, x, p, big_n);
          const double want = oracles::normalized_krawtchouk_exact_p(n, x, big_n, num, den);
          CHECK(std::abs(got - want) < 1e-11);
        }
      }
    }
  }
}

TEST_CASE("self-duality at p = 1/2") {
  for (int big_n : {5, 17, 40}) {
    for (int n = 0; n <= big_n; ++n) {
      for (int x = 0; x < n; ++x) {
        CHECK(std::abs(kw::normalized_krawtchouk(n, x, 0.5, big_n) -
                       kw::normalized_krawtchouk(x, n, 0.5, big_n)) < 1e-12);
      }
    }
  }
}

TEST_CASE("parity identities") {
  // 𝔑=2, l=1, j=0: K~_0(1) = -K~_2(1)
  CHECK(kw::normalized_krawtchouk(0, 1, 0.5, 2) ==
        doctest::Approx(-kw::normalized_krawtchouk(2, 1, 0.5, 2)).epsilon(1e-14));
  CHECK(kw::parity_check(1, 0, 2));
  // l = 0 carries sign +1
  for (int j = 0; j <= 4; ++j) CHECK(kw::parity_check(0, j, 4));
  // full sweep at 𝔑 = 6
  for (int l = 0; l <= 6; ++l) {
    for (int j = 0; j <= 6; ++j) CHECK(kw::parity_check(l, j, 6));
  }
}
