#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "doctest.h"
#include "qtl/asymptotics/asymptotics.hpp"
#include "qtl/core/polynomials.hpp"

using namespace qtl;
using namespace qtl::asymptotics;

namespace {

WeightFunction alternating()
{
    WeightFunction F(1);
    F.add_congruence(Rational(1), {0}, {2});
    F.add_congruence(Rational(-1), {1}, {2});
    return F;
}

Polynomial gaussian1() { return {{{2}, Rational(1)}}; }

}  // namespace

TEST_CASE("phi of the indicator is a Bernoulli generating function")
{
    for (Rational alpha : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1), Rational(-7, 5)}) {
        auto phi = phi_series(indicator(1), {alpha}, 10);
        CHECK(phi.lo()[0] == -1);
        CHECK(phi.coeff({-1}) == -1);
        for (int m = 0; m <= 10; ++m)
            CHECK(phi.coeff({m}) == -bernoulli_polynomial(m + 1, alpha) / Rational(factorial(m + 1)));
    }
}

TEST_CASE("phi of the alternating weight is an Euler generating function")
{
    for (Rational alpha : {Rational(0), Rational(1, 3), Rational(3, 4)}) {
        auto phi = phi_series(alternating(), {alpha}, 9);
        CHECK(phi.coeff({-1}) == 0);
        for (int m = 0; m <= 9; ++m)
            CHECK(phi.coeff({m}) == euler_polynomial(m, alpha) / Rational(2 * factorial(m)));
    }
}

TEST_CASE("point mass gives a single exponential")
{
    WeightFunction F(1);
    F.add_term({Rational(1), {0}, {3}, {0}});
    auto phi = phi_series(F, {Rational(0)}, 8);
    Rational p = 1;
    for (int m = 0; m <= 8; ++m) {
        CHECK(phi.coeff({m}) == p / Rational(factorial(m)));
        p *= 3;
    }
}

TEST_CASE("prefix stability and truncation errors")
{
    WeightFunction F(1);
    F.add_term({Rational(2), {2}, {1}, {3}});
    F.add_congruence(Rational(-1, 2), {0}, {5});
    auto a = phi_series(F, {Rational(1, 7)}, 6);
    auto b = phi_series(F, {Rational(1, 7)}, 11);
    CHECK(a.lo()[0] == -3);
    for (int m = -3; m <= 6; ++m) CHECK(a.coeff({m}) == b.coeff({m}));
    CHECK_THROWS_AS(phi_series(F, {Rational(0)}, -4), Error);
    CHECK_THROWS_AS(a.coeff({7}), Error);
}

TEST_CASE("product weights factor into one-dimensional series")
{
    WeightFunction F(2);
    F.add_term({Rational(1), {1, 0}, {1, 0}, {2, 3}});
    auto phi = phi_series(F, {Rational(1, 2), Rational(1, 3)}, MultiIndex{5, 5});
    auto x = phi_factor(1, 1, 2, 0, Rational(1, 2), 5);
    auto y = phi_factor(0, 0, 3, 0, Rational(1, 3), 5);
    for (int i = -2; i <= 5; ++i)
        for (int j = -1; j <= 5; ++j) CHECK(phi.coeff({i, j}) == x.coeff({i}) * y.coeff({j}));
}

TEST_CASE("hadamard product basics")
{
    ExpPolynomialProbe ex(1, {{{1}, Rational(1)}});
    auto one = TruncatedLaurent<Rational>::constant(1, Rational(1), {3});
    auto h = hadamard_product(one, ex, 3);
    CHECK(h.coefficient(0).real() == doctest::Approx(1.0));
    CHECK(std::abs(h.coefficient(1)) == 0.0);

    TruncatedLaurent<Rational> inv({-1}, {0});
    inv.at({-1}) = 1;
    auto g = hadamard_product(inv, ex, 0);
    CHECK(g.coefficient(-1).real() == doctest::Approx(-1.0).epsilon(1e-13));

    TruncatedLaurent<Rational> short_series({-1}, {1});
    CHECK_THROWS_AS(hadamard_product(short_series, ex, 3), Error);
}

TEST_CASE("expansion of 1/(e^t - 1)")
{
    ExpPolynomialProbe ex(1, {{{1}, Rational(1)}});
    auto a = asymptotic_coefficients(indicator(1), {Rational(1)}, ex, 8);
    // Laurent coefficients of 1/(e^t - 1) = sum B_n t^{n-1}/n!
    for (int m = -1; m <= 8; ++m) {
        double want = Rational(bernoulli_number(m + 1) / Rational(factorial(m + 1))).get_d();
        CHECK(a.coefficient(m).real() == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK_THROWS_AS(a.coefficient(9), Error);
}

TEST_CASE("probe derivatives")
{
    ExpPolynomialProbe g(1, gaussian1());
    CHECK(g.exact_derivative({4}) == 12);
    CHECK(g.exact_derivative({3}) == 0);
    CHECK(g.derivative({-1}) == doctest::Approx(-std::sqrt(pi) / 2).epsilon(1e-14));
    // two-fold antiderivative: int_0^infty u e^{-u^2} du = 1/2
    CHECK(g.derivative({-2}) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(abs(g.derivative_hp({-1}) + sqrt(boost::math::constants::pi<Real>()) / 2) < Real("1e-40"));

    ExpPolynomialProbe q(2, {{{2, 0}, Rational(1)}, {{1, 1}, Rational(1)}, {{0, 2}, Rational(1)}});
    // d/dy at y = 0 of -int_0^infty e^{-x^2 - xy} dx = int x e^{-x^2} = 1/2
    CHECK(q.derivative({-1, 1}) == doctest::Approx(0.5).epsilon(1e-12));
    // int int_{R_+^2} e^{-(x^2+xy+y^2)} = pi/(3 sqrt 3)
    CHECK(q.derivative({-1, -1}) == doctest::Approx(pi / (3 * std::sqrt(3.0))).epsilon(1e-10));
    CHECK_THROWS_AS(q.derivative({0}), Error);
}

TEST_CASE("direct summation oracle")
{
    auto ex = [](const std::vector<double>& x) { return std::exp(-x[0]); };
    auto s = direct_sum_oracle(indicator(1), {0.0}, ex, 1.0);
    CHECK(s.real() == doctest::Approx(1.0 / (1.0 - std::exp(-1.0))).epsilon(1e-14));
    CHECK_THROWS_AS(direct_sum_oracle(indicator(1), {0.0}, ex, 0.0), Error);

    auto q = [](const std::vector<double>& x) { return std::exp(-(x[0] * x[0] + x[1] * x[1])); };
    auto e2 = direct_sum_oracle(indicator(2), {0.5, 0.5}, q, 1.0);
    double brute = 0;
    for (int a = 0; a < 40; ++a)
        for (int b = 0; b < 40; ++b) brute += std::exp(-((a + 0.5) * (a + 0.5) + (b + 0.5) * (b + 0.5)));
    CHECK(std::abs(e2.real() - brute) <= 1e-12);

    auto grow = [](const std::vector<double>&) { return 1.0; };
    CHECK_THROWS_AS(direct_sum_oracle(indicator(1), {0.0}, grow, 1.0, 1e-15, 1024), Error);
}

TEST_CASE("expansion matches direct summation")
{
    ExpPolynomialProbe g(1, gaussian1());
    auto f = [](const std::vector<double>& x) { return std::exp(-x[0] * x[0]); };
    for (Rational alpha : {Rational(1, 3), Rational(1, 2)}) {
        auto a = asymptotic_coefficients(indicator(1), {alpha}, g, 8);
        for (double t : {0.1, 0.05, 0.025}) {
            auto s = direct_sum_oracle(indicator(1), {alpha.get_d()}, f, t);
            CHECK(std::abs(s - a.evaluate(t, 8)) <= 1e-11);
        }
    }
    // alternating weight: no pole
    auto alt = asymptotic_coefficients(alternating(), {Rational(1, 3)}, g, 8);
    CHECK(std::abs(alt.coefficient(-1)) == 0.0);
    auto s = direct_sum_oracle(alternating(), {1.0 / 3}, f, 0.05);
    CHECK(std::abs(s - alt.evaluate(0.05, 8)) <= 1e-12);
}

TEST_CASE("two-dimensional expansion matches direct summation")
{
    ExpPolynomialProbe q(2, {{{2, 0}, Rational(1)}, {{1, 1}, Rational(1)}, {{0, 2}, Rational(1)}});
    auto f = [](const std::vector<double>& x) { return std::exp(-(x[0] * x[0] + x[0] * x[1] + x[1] * x[1])); };
    auto a = asymptotic_coefficients(indicator(2), {Rational(1, 2), Rational(1, 2)}, q, 4);
    for (double t : {0.1, 0.05}) {
        auto s = direct_sum_oracle(indicator(2), {0.5, 0.5}, f, t, 1e-14);
        CHECK(std::abs(s - a.evaluate(t, 4)) <= 50 * std::pow(t, 5));
    }
}

TEST_CASE("remainder ratio test in extended precision")
{
    ExpPolynomialProbe g(1, gaussian1());
    const int M = 6;
    auto a = asymptotic_coefficients_hp(indicator(1), {Rational(1, 3)}, g, M);
    auto f = [](const std::vector<Real>& x) { return exp(-x[0] * x[0]); };
    std::vector<double> rem;
    for (double t : {0.1, 0.05, 0.025, 0.0125}) {
        Real s = direct_sum_oracle_hp(indicator(1), {Rational(1, 3)}, f, Real(t), Real("1e-45"));
        rem.push_back(abs(s - a.evaluate(Real(t), M)).convert_to<double>());
    }
    for (size_t i = 0; i + 1 < rem.size(); ++i) {
        double slope = std::log2(rem[i] / rem[i + 1]);
        CHECK(std::abs(slope - (M + 1)) <= 0.15 * (M + 1));
    }
}

TEST_CASE("a corrupted Bernoulli value is detected by the oracle")
{
    ExpPolynomialProbe g(1, gaussian1());
    auto phi = phi_series(indicator(1), {Rational(1, 3)}, 8);
    phi.at({2}) += Rational(1, 1000);
    auto bad = hadamard_product(phi, g, 8);
    auto f = [](const std::vector<double>& x) { return std::exp(-x[0] * x[0]); };
    auto s = direct_sum_oracle(indicator(1), {1.0 / 3}, f, 0.05);
    CHECK(std::abs(s - bad.evaluate(0.05, 8)) > 1e-8);
}
