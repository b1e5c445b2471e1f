//---------------------------------------------------------------------------//
// Copyright 2026 the bornscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/test_quadrature.cpp
//---------------------------------------------------------------------------//
#include "bornscat/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

using namespace bornscat;
using std::numbers::pi;

namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

// frozen reference constants
constexpr double sqrt_pi = 1.7724538509055160273;
constexpr double sqrt_pi_half = 0.88622692545275801365;
constexpr double runge_exact = 0.54936030677800634434;  // (2/5) atan 5
constexpr double gauss_cos_exact = 0.32602466608664609153;  // sqrt(pi)/2 e^-1
constexpr double two_k0_one = 0.84204887648141666667;
constexpr double gauss_sin_moment = 0.69019422352157148739;  // sqrt(pi)/2 e^-.25
}  // namespace

//---------------------------------------------------------------------------//
// golden honesty suite: every entry checks both the tolerance contract and
// est_err honesty (true error <= 10 x est_err)

namespace
{
struct Golden
{
    const char* name;
    double exact;
    QuadResult result;
};

void check_golden(const Golden& g, double tol)
{
    INFO(g.name);
    double true_err = std::abs(g.result.value - g.exact);
    CHECK(true_err
          <= std::max(tol * std::abs(g.result.value), 2e-14) * 1.000001);
    CHECK(true_err <= 10 * std::max(g.result.est_err, 1e-16));
    CHECK(g.result.est_err >= 0.0);
    CHECK(g.result.nodes >= 1);
}
}  // namespace

TEST_CASE("golden suite at two tolerances", "[quadrature][honesty]")
{
    QuadOptions sqrt_opt;
    sqrt_opt.transform = EndpointTransform::sqrt_left;

    for (double tol : {1e-6, 1e-10})
    {
        std::vector<Golden> suite;
        suite.push_back({"int_0^1 x^2 = 1/3",
                         1.0 / 3,
                         integrate_adaptive([](double x) { return x * x; },
                                            0.0, 1.0, tol)});
        suite.push_back(
            {"int_0^1 1/sqrt(x) = 2",
             2.0,
             integrate_adaptive([](double x) { return 1 / std::sqrt(x); },
                                0.0, 1.0, tol, sqrt_opt)});
        suite.push_back(
            {"int_0^1 ln x = -1",
             -1.0,
             integrate_adaptive([](double x) { return std::log(x); }, 0.0,
                                1.0, tol, sqrt_opt)});
        suite.push_back(
            {"int_0^inf e^-r = 1",
             1.0,
             integrate_adaptive([](double r) { return std::exp(-r); }, 0.0,
                                inf, tol)});
        suite.push_back(
            {"int_0^inf r e^-r = 1",
             1.0,
             integrate_adaptive([](double r) { return r * std::exp(-r); },
                                0.0, inf, tol)});
        suite.push_back(
            {"int_0^inf e^-r^2 = sqrt(pi)/2",
             sqrt_pi_half,
             integrate_adaptive([](double r) { return std::exp(-r * r); },
                                0.0, inf, tol)});
        suite.push_back({"runge bump on [-1,1]",
                         runge_exact,
                         integrate_adaptive(
                             [](double x) { return 1 / (1 + 25 * x * x); },
                             -1.0, 1.0, tol)});
        suite.push_back(
            {"int_0^pi sin = 2",
             2.0,
             integrate_adaptive([](double x) { return std::sin(x); }, 0.0, pi,
                                tol)});
        suite.push_back(
            {"full-line gaussian = sqrt(pi)",
             sqrt_pi,
             integrate_adaptive([](double x) { return std::exp(-x * x); },
                                -inf, inf, tol)});
        suite.push_back({"damped sine int_0^inf e^-x sin x = 1/2",
                         0.5,
                         integrate_oscillatory(
                             [](double x) { return std::exp(-x); }, 1.0,
                             OscKind::sine, OscDomain::half_line, tol)});
        suite.push_back({"dirichlet int_0^inf sin(x)/x = pi/2",
                         pi / 2,
                         integrate_oscillatory([](double x) { return 1 / x; },
                                               1.0, OscKind::sine,
                                               OscDomain::half_line, tol)});
        suite.push_back({"gaussian cosine moment",
                         gauss_cos_exact,
                         integrate_oscillatory(
                             [](double x) { return std::exp(-x * x); }, 2.0,
                             OscKind::cosine, OscDomain::half_line, tol)});
        suite.push_back({"full-line even fold e^-|x| cos x",
                         1.0,
                         integrate_oscillatory(
                             [](double x) { return std::exp(-std::abs(x)); },
                             1.0, OscKind::cosine, OscDomain::full_line,
                             tol)});
        suite.push_back({"full-line odd fold x e^-x^2 sin x",
                         gauss_sin_moment,
                         integrate_oscillatory(
                             [](double x) { return x * std::exp(-x * x); },
                             1.0, OscKind::sine, OscDomain::full_line, tol)});

        for (const auto& g : suite)
        {
            check_golden(g, tol);
        }
    }
}

TEST_CASE("semi-infinite truncation is reported and decays", "[quadrature]")
{
    auto r = integrate_adaptive([](double x) { return std::exp(-x); }, 0.0,
                                inf, 1e-10);
    CHECK(r.truncation_radius > 10.0);
    CHECK(r.truncation_radius < 1e4);
    CHECK(r.nodes >= 15);

    auto slow = integrate_adaptive(
        [](double x) { return 1 / ((1 + x) * (1 + x)); }, 0.0, inf, 1e-8);
    CHECK(slow.value == Catch::Approx(1.0).epsilon(1e-7));
    // algebraic tail needs a much larger horizon than the exponential one
    CHECK(slow.truncation_radius > r.truncation_radius);
}

TEST_CASE("adaptive engine failure modes", "[quadrature]")
{
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 1.0, 0.0,
                                       1e-10),
                    domain_error);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 0.0, 1.0,
                                       -1e-10),
                    domain_error);
    // a non-integrable interior singularity exhausts the subdivision budget
    QuadOptions tight;
    tight.max_intervals = 200;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1 / x; }, 0.0,
                                       1.0, 1e-12, tight),
                    convergence_error);
}

TEST_CASE("linearity within combined estimates", "[quadrature]")
{
    auto f = [](double x) { return std::exp(-x); };
    auto g = [](double x) { return std::exp(-x * x); };
    auto combo = [&](double x) { return 2 * f(x) - 3 * g(x); };
    auto rf = integrate_adaptive(f, 0.0, inf, 1e-11);
    auto rg = integrate_adaptive(g, 0.0, inf, 1e-11);
    auto rc = integrate_adaptive(combo, 0.0, inf, 1e-11);
    double gap = std::abs(rc.value - (2 * rf.value - 3 * rg.value));
    CHECK(gap <= rc.est_err + 2 * rf.est_err + 3 * rg.est_err);
}

//---------------------------------------------------------------------------//
// oscillatory engine

TEST_CASE("zero-frequency sine integral is identically zero", "[quadrature]")
{
    auto r = integrate_oscillatory([](double x) { return std::exp(-x * x); },
                                   0.0, OscKind::sine, OscDomain::half_line,
                                   1e-10);
    CHECK(r.value == 0.0);
    CHECK(r.est_err == 0.0);
}

TEST_CASE("zero-frequency cosine degrades to plain integration",
          "[quadrature]")
{
    auto r = integrate_oscillatory([](double x) { return std::exp(-x); }, 0.0,
                                   OscKind::cosine, OscDomain::half_line,
                                   1e-10);
    CHECK(r.value == Catch::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("full-line cosine fold reproduces 2 K0(1)", "[quadrature]")
{
    auto r = integrate_oscillatory(
        [](double z) { return 1 / std::sqrt(1 + z * z); }, 1.0,
        OscKind::cosine, OscDomain::full_line, 1e-9);
    CHECK(r.value == Catch::Approx(two_k0_one).epsilon(5e-9));
    CHECK(std::abs(r.value - two_k0_one) <= 10 * r.est_err);
}

TEST_CASE("damped sine tracks the laplace image up to q = 100",
          "[quadrature]")
{
    for (double q : {2.0, 10.0, 50.0, 100.0})
    {
        auto r = integrate_oscillatory([](double x) { return std::exp(-x); },
                                       q, OscKind::sine, OscDomain::half_line,
                                       1e-9);
        double exact = q / (1 + q * q);
        CHECK(r.value == Catch::Approx(exact).epsilon(1e-8));
    }
}

TEST_CASE("oscillatory preconditions", "[quadrature]")
{
    CHECK_THROWS_AS(integrate_oscillatory([](double x) { return x; }, -1.0,
                                          OscKind::sine, OscDomain::half_line,
                                          1e-8),
                    domain_error);
    CHECK_THROWS_AS(integrate_oscillatory([](double x) { return x; }, 1.0,
                                          OscKind::sine, OscDomain::half_line,
                                          0.0),
                    domain_error);
}

TEST_CASE("non-decaying amplitude trips the segment budget", "[quadrature]")
{
    QuadOptions opt;
    opt.max_periods = 64;
    CHECK_THROWS_AS(
        integrate_oscillatory([](double) { return 1.0; }, 1.0, OscKind::sine,
                              OscDomain::half_line, 1e-12, opt),
        convergence_error);
}

//---------------------------------------------------------------------------//
// extrapolation to lambda = 0

TEST_CASE("screened-shape ladder extrapolates through the rational path",
          "[quadrature][extrapolation]")
{
    // three rungs suffice: the data is exactly rational in lambda^2
    std::vector<std::pair<double, double>> s;
    for (double lam : {0.4, 0.2, 0.1})
    {
        s.push_back({lam, 1 / (1 + lam * lam)});
    }
    auto rep = extrapolate_to_zero(s);
    CHECK(std::abs(rep.extrapolated - 1.0) < 1e-9);
    CHECK(rep.samples.size() == 3);
}

TEST_CASE("constant samples extrapolate exactly", "[quadrature]")
{
    std::vector<std::pair<double, double>> s{
        {0.4, 3.5}, {0.2, 3.5}, {0.1, 3.5}, {0.05, 3.5}};
    auto rep = extrapolate_to_zero(s);
    CHECK(rep.extrapolated == 3.5);
}

TEST_CASE("polynomial-in-lambda^2 data lands on the polynomial path",
          "[quadrature]")
{
    std::vector<std::pair<double, double>> s;
    for (double lam : {0.4, 0.2, 0.1, 0.05})
    {
        double x = lam * lam;
        s.push_back({lam, 1 + x + x * x});
    }
    auto rep = extrapolate_to_zero(s);
    CHECK(std::abs(rep.extrapolated - 1.0) < 1e-10);
}

TEST_CASE("screened-coulomb ladders extrapolate to the unscreened value",
          "[quadrature][extrapolation]")
{
    for (double q : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0})
    {
        std::vector<std::pair<double, double>> s;
        double lam = 0.4;
        for (int k = 0; k < 5; ++k)
        {
            s.push_back({lam, -2 / (q * q + lam * lam)});
            lam *= 0.5;
        }
        auto rep = extrapolate_to_zero(s);
        double exact = -2 / (q * q);
        INFO("q = " << q);
        CHECK(std::abs(rep.extrapolated - exact) <= 1e-8 * std::abs(exact));
        CHECK(rep.order_used >= 2);
        CHECK(rep.est_err >= 0.0);
    }
}

TEST_CASE("extrapolation survives sample noise at the quadrature scale",
          "[quadrature]")
{
    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> noise(-1e-12, 1e-12);
    std::vector<std::pair<double, double>> s;
    double lam = 0.4;
    for (int k = 0; k < 5; ++k)
    {
        s.push_back({lam, -8.0 / (0.25 + lam * lam) * (1 + noise(rng))});
        lam *= 0.5;
    }
    auto rep = extrapolate_to_zero(s);
    CHECK(std::abs(rep.extrapolated - (-32.0)) <= 1e-9 * 32.0);
}

TEST_CASE("odd-powers model covers data smooth in lambda itself",
          "[quadrature]")
{
    std::vector<std::pair<double, double>> s;
    for (double lam : {0.4, 0.2, 0.1, 0.05})
    {
        s.push_back({lam, 1 + lam + lam * lam});
    }
    auto rep = extrapolate_to_zero(s, ExtrapolationModel::odd_powers);
    CHECK(std::abs(rep.extrapolated - 1.0) < 1e-10);
}

TEST_CASE("degenerate ladders are rejected", "[quadrature]")
{
    using V = std::vector<std::pair<double, double>>;
    CHECK_THROWS_AS(extrapolate_to_zero(V{{0.4, 1.0}, {0.2, 1.0}}),
                    domain_error);
    CHECK_THROWS_AS(
        extrapolate_to_zero(V{{0.4, 1.0}, {0.4, 1.0}, {0.1, 1.0}}),
        domain_error);
    CHECK_THROWS_AS(
        extrapolate_to_zero(V{{0.1, 1.0}, {0.2, 1.0}, {0.4, 1.0}}),
        domain_error);
    CHECK_THROWS_AS(
        extrapolate_to_zero(V{{0.4, 1.0}, {0.2, 1.0}, {0.0, 1.0}}),
        domain_error);
    CHECK_THROWS_AS(
        extrapolate_to_zero(
            V{{0.4, 1.0}, {0.2, std::numeric_limits<double>::quiet_NaN()},
              {0.1, 1.0}}),
        domain_error);
}
