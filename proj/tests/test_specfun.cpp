#include "robin/specfun.hpp"
#include "robin/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace robin::specfun;

namespace {
constexpr double kPi = 3.14159265358979323846;

// series-bisection roots, frozen from the oracle (see matching CHECKs below)
constexpr double kJ01 = 2.404825557695773;      // first zero of J_0
constexpr double kJp11 = 1.841183781340659;     // first zero of J'_1
constexpr double kKappa01 = 1.2557837117945935; // first zero of x J'_0 + J_0
constexpr double kAp1 = -1.0187929716474711;    // first zero of Ai'
} // namespace

TEST_CASE("bessel_j matches the series oracle at spot values")
{
    CHECK(bessel_j(0, 0) == 1.0);
    CHECK(bessel_j(2, 0) == 0.0);
    CHECK(bessel_j(0, 1) == doctest::Approx(test_oracle::j_series(0, 1)).epsilon(1e-13));
    CHECK(bessel_j(7, 19.25) == doctest::Approx(test_oracle::j_series(7, 19.25)).epsilon(1e-12));
    CHECK(bessel_j(20, 50) == doctest::Approx(test_oracle::j_series(20, 50)).epsilon(1e-11));

    // the quadrature path against the series oracle on a mixed grid
    for (int nu : {0, 3, 11}) {
        for (int i = 0; i < 200; ++i) {
            const double x = 0.5 + i * (49.5 / 199.0);
            const double q = detail::bessel_j_quadrature(nu, x);
            const double s = test_oracle::j_series(nu, x);
            CHECK(std::fabs(q - s) <= 1e-12 + 1e-10 * std::fabs(s));
        }
    }
}

TEST_CASE("bessel_j rejects bad input")
{
    CHECK_THROWS_AS(bessel_j(-1, 1), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, -1), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(bessel_j(2100, 1), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, 2.5e4), std::domain_error);
}

TEST_CASE("half-integer order reduces to elementary functions")
{
    // J_{1/2}(x) = sqrt(2/(pi x)) sin x exercises the non-integer tail
    for (double x : {0.5, 2.0, 7.0, 16.0, 31.5}) {
        const double want = std::sqrt(2.0 / (kPi * x)) * std::sin(x);
        CHECK(bessel_j(0.5, x) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("bessel_j_prime via recurrence")
{
    CHECK(bessel_j_prime(0, 0) == 0.0);
    CHECK(bessel_j_prime(1, 0) == 0.5);
    CHECK(bessel_j_prime(3, 0) == 0.0);
    CHECK(bessel_j_prime(0, 10)
          == doctest::Approx(test_oracle::jp_series(0, 10)).epsilon(1e-12));
    CHECK(bessel_j_prime(4, 9.5)
          == doctest::Approx(test_oracle::jp_series(4, 9.5)).epsilon(1e-12));

    // oracle root of J'_1 on (1,3)
    const double root = test_oracle::bisect([](double x) { return test_oracle::jp_series(1, x); },
                                            1.0, 3.0, 1e-13);
    CHECK(root == doctest::Approx(kJp11).epsilon(1e-12));
    CHECK(std::fabs(bessel_j_prime(1, kJp11)) < 1e-8);

    // leading stationary-phase form of J'_0; the residual is O(1/x)
    const double x = 10.0;
    const double amp = std::sqrt(2.0 / kPi) * std::pow(x * x, 0.25) / x;
    const double lead = -amp * std::sin(kPi * x * g(0.0) - kPi / 4);
    CHECK(std::fabs(bessel_j_prime(0, x) - lead) < 1.0 / x * amp);
}

TEST_CASE("phi combines J and its derivative")
{
    for (double x : {0.7, 3.0, 9.25})
        CHECK(phi(0, x, 0.0) == bessel_j_prime(0, x));

    // oracle root of J_0(x) - x J_1(x) = x (J'_0 + J_0/x) on (1,2)
    const double root = test_oracle::bisect(
        [](double x) { return test_oracle::j_series(0, x) - x * test_oracle::j_series(1, x); },
        1.0, 2.0, 1e-13);
    CHECK(root == doctest::Approx(kKappa01).epsilon(1e-12));
    CHECK(std::fabs(phi(0, kKappa01, 1.0)) < 1e-8);
    CHECK_THROWS_AS(phi(0, 0.0, 1.0), std::domain_error);

    // large-x asymptotics: phi = -A (sin(pi x g(nu/x) - pi/4) + O(1/x))
    double cfit = 0.0;
    for (double x : {25.0, 50.0, 100.0, 200.0, 400.0}) {
        const double amp = std::sqrt(2.0 / kPi) * std::pow(x * x, 0.25) / x;
        const double eps = -phi(0, x, 1.0) / amp - std::sin(kPi * x * g(0.0) - kPi / 4);
        cfit = std::max(cfit, std::fabs(eps) * x);
    }
    CHECK(cfit < 1.0); // observed ~0.32 at sigma = 1
}

TEST_CASE("bessel zeros against frozen oracle roots")
{
    const double j01 = test_oracle::bisect([](double x) { return test_oracle::j_series(0, x); },
                                           2.0, 3.0, 1e-13);
    CHECK(j01 == doctest::Approx(kJ01).epsilon(1e-13));

    CHECK(bessel_zero(0, 1, ZeroKind::J) == doctest::Approx(kJ01).epsilon(1e-12));
    CHECK(bessel_zero(1, 1, ZeroKind::JPrime) == doctest::Approx(kJp11).epsilon(1e-12));
    CHECK(bessel_zero(0, 1, ZeroKind::JPrime) == 0.0);

    // zeros of J'_0 are zeros of J_1
    for (int k = 2; k <= 8; ++k)
        CHECK(bessel_zero(0, k, ZeroKind::JPrime)
              == doctest::Approx(bessel_zero(1, k - 1, ZeroKind::J)).epsilon(1e-11));

    // bracket property for an uncalibrated zero: sign change of J_5 across it
    const double z = bessel_zero(5, 3, ZeroKind::J);
    CHECK(z > 5.0);
    CHECK(bessel_j(5, z - 1e-3) * bessel_j(5, z + 1e-3) < 0.0);

    CHECK_THROWS_AS(bessel_zero(0, 0, ZeroKind::J), std::domain_error);
    CHECK_THROWS_AS(bessel_zero(0, 1, ZeroKind::RobinCombo), std::domain_error);
}

TEST_CASE("robin zeros sit inside the interlacing bracket")
{
    CHECK(robin_bessel_zero(0, 1, 0.0) == 0.0);
    CHECK(robin_bessel_zero(0, 1, 1.0) == doctest::Approx(kKappa01).epsilon(1e-12));

    // x J'_nu + nu J_nu = x J_{nu-1}: kappa_{nu,k}(sigma = nu) = j_{nu-1,k}
    for (int k = 1; k <= 5; ++k)
        CHECK(robin_bessel_zero(2, k, 2.0)
              == doctest::Approx(bessel_zero(1, k, ZeroKind::J)).epsilon(1e-11));

    for (double nu : {0.0, 3.0, 10.0}) {
        for (int k = 1; k <= 20; ++k) {
            const double jp = bessel_zero(nu, k, ZeroKind::JPrime);
            const double j = bessel_zero(nu, k, ZeroKind::J);
            CHECK(nu <= jp);
            CHECK(jp < j);
            for (double sigma : {0.5, 4.0}) {
                const double kap = robin_bessel_zero(nu, k, sigma);
                CHECK(jp < kap);
                CHECK(kap < j);
            }
        }
    }

    const ZeroBracket br = zero_bracket(3, 4, ZeroKind::RobinCombo, 1.0);
    CHECK(br.lo == doctest::Approx(bessel_zero(3, 4, ZeroKind::JPrime)));
    CHECK(br.hi == doctest::Approx(bessel_zero(3, 4, ZeroKind::J)));
}

TEST_CASE("zero brackets are increasing, disjoint, sign-changing")
{
    for (double nu : {0.0, 4.0, 33.0}) {
        for (ZeroKind kind : {ZeroKind::J, ZeroKind::JPrime}) {
            double prev_hi = 0.0;
            for (int k = 1; k <= 20; ++k) {
                const ZeroBracket br = zero_bracket(nu, k, kind);
                if (br.lo == br.hi)
                    continue; // conventional j'_{0,1} = 0
                CHECK(br.lo < br.hi);
                CHECK(br.lo >= prev_hi);
                const auto f = [&](double x) {
                    const JPair p = bessel_j_pair(nu, x);
                    return kind == ZeroKind::J ? p.j : p.jp;
                };
                CHECK(f(br.lo) * f(br.hi) < 0.0);
                prev_hi = br.hi;
            }
        }
    }
}

TEST_CASE("zero residuals stay small across a grid")
{
    for (double nu : {0.0, 1.0, 7.0, 25.0}) {
        for (int k : {1, 2, 5, 20, 50}) {
            const double j = bessel_zero(nu, k, ZeroKind::J);
            const JPair p = bessel_j_pair(nu, j);
            CHECK(std::fabs(p.j) <= 1e-8 * std::max(1.0, std::fabs(p.jp)));
        }
    }
}

TEST_CASE("ladder output agrees with one-shot zero finds")
{
    const double sigmas[] = {0.0, 0.7, 3.0};
    for (double nu : {0.0, 2.0, 9.0}) {
        const ZeroLadder lad = zero_ladder(nu, 12, 1e9, true, sigmas);
        REQUIRE(lad.j.size() == 12);
        REQUIRE(lad.jprime.size() == 12);
        for (int k = 1; k <= 12; ++k) {
            CHECK(lad.j[k - 1] == doctest::Approx(bessel_zero(nu, k, ZeroKind::J)).epsilon(1e-12));
            CHECK(lad.jprime[k - 1]
                  == doctest::Approx(bessel_zero(nu, k, ZeroKind::JPrime)).epsilon(1e-12));
            for (std::size_t s = 0; s < 3; ++s)
                CHECK(lad.robin[s][k - 1]
                      == doctest::Approx(robin_bessel_zero(nu, k, sigmas[s])).epsilon(1e-12));
        }
    }
}

TEST_CASE("airy derivative zeros")
{
    CHECK(airy_prime_zero(1) == doctest::Approx(kAp1).epsilon(1e-9));
    CHECK(std::fabs(airy_prime_zero(1) - kAp1) < 1e-6);

    // leading term at k = 1 for reference: -(3 pi/8)^(2/3)
    CHECK(-std::pow(3 * kPi / 8, 2.0 / 3.0) == doctest::Approx(-1.1154602372253558).epsilon(1e-12));

    // k >= 2 is the leading term by construction; the asymptotic error order
    // stays bounded on [10, 1000]
    for (int k : {10, 100, 1000}) {
        const double lead = -std::pow(1.5 * kPi * (k - 0.75), 2.0 / 3.0);
        CHECK(std::fabs(airy_prime_zero(k) - lead) * std::pow(k, 4.0 / 3.0) <= 1.0);
    }
    CHECK_THROWS_AS(airy_prime_zero(0), std::domain_error);
}

TEST_CASE("geometric map zeta/z and g")
{
    CHECK(zeta_of_z(1.0) == 0.0);
    CHECK(zeta_of_z(2.0) == doctest::Approx(-1.018104888567116).epsilon(1e-12));
    CHECK(z_of_zeta(0.0) == 1.0);
    CHECK(z_of_zeta(-1.018104888567116) == doctest::Approx(2.0).epsilon(1e-12));

    double prev = zeta_of_z(1.0);
    for (double z = 1.05; z <= 100.0; z += 0.95) {
        const double zz = zeta_of_z(z);
        CHECK(zz < prev);
        prev = zz;
    }
    for (int i = 0; i <= 200; ++i) {
        const double zeta = -50.0 + 50.0 * i / 200.0;
        CHECK(std::fabs(zeta_of_z(z_of_zeta(zeta)) - zeta) <= 1e-12);
    }
    CHECK_THROWS_AS(zeta_of_z(0.99), std::domain_error);
    CHECK_THROWS_AS(z_of_zeta(0.5), std::domain_error);

    CHECK(g(0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    CHECK(g(1.0) == 0.0);
    CHECK(g(-1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(g(1.5), std::domain_error);
}

TEST_CASE("F is homogeneous, one on the graph of g, symmetric")
{
    CHECK(F(0.0, 2.0) == doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(std::fabs(F(0.5, g(0.5)) - 1.0) <= 1e-10);
    CHECK(F(7 * 0.3, 7 * g(0.3)) == doctest::Approx(7.0).epsilon(1e-12));

    for (double x : {0.2, 1.0, 4.0}) {
        for (double y : {0.05, 0.8, 7.0}) {
            const double base = F(x, y);
            for (double t : {0.1, 3.7, 100.0})
                CHECK(std::fabs(F(t * x, t * y) - t * base) <= 1e-9 * t * base);
            CHECK(F(-x, y + x) == doctest::Approx(base).epsilon(1e-14));
        }
    }
    // continuity across x = 0: F -> pi y + pi x / 2
    CHECK(F(1e-9, 2.0) == doctest::Approx(2 * kPi).epsilon(1e-8));
    CHECK_THROWS_AS(F(2.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(F(-2.0, 1.0), std::domain_error);
}

TEST_CASE("uniform estimate tracks kappa at large order")
{
    // |kappa_{nu,k} - F(nu, k - 3/4)| k^{4/3} / nu^{1/3} stays bounded for
    // k <= nu/3 (scaled-error ceiling frozen from a reference run)
    for (double nu : {50.0, 120.0, 260.0, 500.0}) {
        for (int k : {1, 3, int(nu / 6), int(nu / 3)}) {
            const double kap = robin_bessel_zero(nu, k, 1.0);
            const double est = F(nu, k - 0.75);
            const double scaled = std::fabs(kap - est) * std::pow(k, 4.0 / 3.0) / std::cbrt(nu);
            CHECK(scaled < 2.0);
        }
    }
}

TEST_CASE("evaluation is reentrant and thread-count independent")
{
    std::vector<double> serial(64), parallel(64);
    for (int i = 0; i < 64; ++i) {
        const double x = 1.0 + 7.3 * i;
        serial[i] = bessel_j_pair(11, x).jp;
    }
#pragma omp parallel for num_threads(8) schedule(dynamic, 1)
    for (int i = 0; i < 64; ++i) {
        const double x = 1.0 + 7.3 * i;
        parallel[i] = bessel_j_pair(11, x).jp;
    }
    for (int i = 0; i < 64; ++i)
        CHECK(serial[i] == parallel[i]);
}
