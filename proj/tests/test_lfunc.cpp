#include <cmath>

#include <boost/math/special_functions/zeta.hpp>

#include "doctest.h"
#include "qtl/core/polynomials.hpp"
#include "qtl/lfunc/lfunc.hpp"

using namespace qtl;
using namespace qtl::lfunc;

TEST_CASE("direct evaluation")
{
    auto zeta = riemann_zeta_handle();
    CHECK(std::abs(l_direct(zeta, 2.0) - pi * pi / 6) <= 1e-10);
    CHECK(std::abs(l_direct(zeta, 3.5) - boost::math::zeta(3.5)) <= 1e-10);
    CHECK_THROWS_AS(l_direct(zeta, 0.5), Error);

    auto single = finite_series({{1.0, 4.0}});
    CHECK(std::abs(l_direct(single, 0.5) - 0.5) <= 1e-15);

    // b < 0 and b = 0 terms: at s = 0 the value is the plain sum of all coefficients
    auto mixed = finite_series({{-2.0, -0.5}, {3.0, 0.0}, {2.0, 5.0}, {1.0, 0.25}});
    CHECK(std::abs(l_direct(mixed, 0.0) - 4.0) <= 1e-15);
    CHECK(mixed.exceptional.size() == 1);
    CHECK(mixed.warnings.size() == 1);
    CHECK(std::abs(continuation_value(mixed, 0).value - 4.0) <= 1e-14);
}

TEST_CASE("Hurwitz special values from the expansion")
{
    for (Rational alpha : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
        auto h = hurwitz_handle(alpha);
        double a = alpha.get_d();
        auto l0 = continuation_value(h, 0);
        CHECK(l0.nature == Nature::regular);
        CHECK(std::abs(l0.value - (0.5 - a)) <= 1e-10);
        auto l1 = continuation_value(h, 1);
        CHECK(std::abs(l1.value + bernoulli_polynomial(2, a) / 2) <= 1e-10);
        for (int n = 2; n <= 6; ++n) {
            double want = -bernoulli_polynomial(n + 1, a) / (n + 1);
            CHECK(std::abs(continuation_value(h, n).value - want) <= 1e-10);
        }
        auto pole = continuation_value(h, -1);
        CHECK(pole.nature == Nature::residue_l);
        CHECK(std::abs(pole.value - 1.0) <= 1e-12);
        // no poles beyond the leading order
        CHECK(std::abs(continuation_value(h, -2).value) == 0.0);
    }
    auto zeta = riemann_zeta_handle();
    CHECK(std::abs(continuation_value(zeta, 1).value + 1.0 / 12) <= 1e-12);
    CHECK_THROWS_AS(continuation_value(zeta, 40), Error);
}

TEST_CASE("Euler-Maclaurin Hurwitz reference")
{
    for (double s : {-2.5, -1.5, -0.5, 0.5, 1.5, 2.0, 4.25})
        CHECK(std::abs(hurwitz_zeta(s, 1.0) - boost::math::zeta(s)) <= 1e-12 * std::max(1.0, std::abs(boost::math::zeta(s))));
    // zeta(s, 1/2) = (2^s - 1) zeta(s)
    for (double s : {-1.5, 0.5, 3.0})
        CHECK(std::abs(hurwitz_zeta(s, 0.5) - (std::pow(2.0, s) - 1) * boost::math::zeta(s)) <= 1e-12);
}

TEST_CASE("Mellin oracle agrees with the continuation")
{
    for (Rational alpha : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
        auto h = hurwitz_handle(alpha);
        for (double s : {-2.5, -1.5, -0.5, 0.5, 1.5}) {
            Complex m = mellin_oracle(h, s, 4);
            CHECK(std::abs(m - hurwitz_zeta(s, alpha.get_d())) <= 1e-8);
            CHECK(std::abs(m - mellin_oracle(h, s, 8)) <= 1e-8);
        }
    }
    auto zeta = riemann_zeta_handle();
    CHECK(std::abs(mellin_oracle(zeta, 2.0, 2) - pi * pi / 6) <= 1e-9);
    Complex near = mellin_oracle(zeta, -1.0 + 1e-3, 3);
    CHECK(std::abs(near + 1.0 / 12) <= 2e-3);
    CHECK(std::abs(near + 1.0 / 12) > 1e-6);
    // complex argument
    Complex s(0.5, 3.0);
    CHECK(std::abs(mellin_oracle(hurwitz_handle(Rational(1, 3)), s, 4) - hurwitz_zeta(s, 1.0 / 3)) <= 1e-8);

    auto poly = finite_series({{1.0, 1.0}, {-3.0, 2.5}, {0.5, 7.0}});
    double want = 1.0 - 3.0 / 6.25 + 0.5 / 49.0;
    CHECK(std::abs(mellin_oracle(poly, 2.0, 2) - want) <= 1e-10);

    CHECK_THROWS_AS(mellin_oracle(zeta, -1.0, 3), Error);
    CHECK_THROWS_AS(mellin_oracle(zeta, -1.5, 1), Error);
    CHECK_THROWS_AS(mellin_oracle(zeta, 0.5, 99), Error);
}

TEST_CASE("exceptional terms")
{
    auto h = finite_series({{1.5, -2.0}, {1.0, 3.0}});
    Complex minus = exceptional_value(h, 0.5);
    h.branch = Branch::plus;
    Complex plus = exceptional_value(h, 0.5);
    CHECK(std::abs(minus - std::conj(plus)) <= 1e-15);
    for (int n : {0, 1, 2, 3}) {
        h.branch = Branch::minus;
        Complex a = exceptional_value(h, -n);
        h.branch = Branch::plus;
        CHECK(std::abs(a - exceptional_value(h, -n)) <= 1e-12);
        CHECK(std::abs(a - 1.5 * std::pow(-2.0, n)) <= 1e-12);
    }
    // finite polynomial with a negative b: continuation at -n is sum a b^n
    CHECK(std::abs(continuation_value(h, 2).value - (1.5 * 4 + 9.0)) <= 1e-10);
    // Mellin oracle adds the exceptional part analytically
    h.branch = Branch::minus;
    Complex want = 1.5 * std::pow(2.0, -0.5) * std::exp(Complex(0, -pi * 0.5)) + std::pow(3.0, -0.5);
    CHECK(std::abs(mellin_oracle(h, 0.5, 2) - want) <= 1e-10);
}

TEST_CASE("gamma function and serialisation")
{
    for (double x : {0.3, 1.0, 2.5, 7.0, -0.5, -2.5})
        CHECK(std::abs(complex_gamma(x) - std::tgamma(x)) <= 1e-12 * std::abs(std::tgamma(x)));
    ContinuationValue v{Complex(-1), Complex(0.25, 0), Nature::regular, 1e-12};
    CHECK(v.to_json() == R"({"s":[-1.0,0.0],"value":[0.25,0.0],"nature":"regular","error":1e-12})");
}
