#include <cmath>

#include "doctest.h"
#include "qtl/bernoulli/relations.hpp"
#include "qtl/core/polynomials.hpp"

using namespace qtl;
using namespace qtl::bernoulli;
using asymptotics::indicator;

namespace {

const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};

WeightForm epstein() { return make_weight_form(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}); }
WeightForm cubic() { return make_weight_form(2, {{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}}); }

}  // namespace

TEST_CASE("weight forms")
{
    CHECK(epstein().degree == 2);
    CHECK(cubic().degree == 3);
    CHECK_THROWS_AS(make_weight_form(2, {{{2, 0}, 1}, {{1, 0}, 1}, {{0, 2}, 1}}), Error);
    CHECK_THROWS_AS(make_weight_form(2, {{{2, 0}, 1}}), Error);
    CHECK_THROWS_AS(make_weight_form(2, {{{2, 0}, -1}, {{0, 2}, 1}}), Error);
    try {
        enumerate_points(indicator(2), {0, 0}, make_weight_form(2, {{{2, 0}, 1}, {{0, 2}, 1}}), 10,
                         [](const std::vector<long>&, double) {});
        FAIL("expected a positivity error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::positivity);
        CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
    }
}

TEST_CASE("multi-variable L by direct evaluation")
{
    const double z2 = pi * pi / 6;
    CHECK(std::abs(multi_l_direct(indicator(1), {1}, {2.0}) - z2) <= 1e-12);
    CHECK(std::abs(multi_l_direct(indicator(2), {1, 1}, {2.0, 2.0}) - z2 * z2) <= 1e-12);

    // brute-force double sum with the integral tail of each axis
    const long X = 2000;
    long double box = 0, axis = 0;
    for (long a = 0; a < X; ++a) axis += std::pow(a + 0.5L, -3);
    for (long a = 0; a < X; ++a) {
        long double row = 0;
        for (long b = 0; b < X; ++b) row += std::pow(a + 0.5L, -3) * std::pow(b + 0.5L, -3);
        box += row;
    }
    double tail = 0.5 / (X * double(X));
    double brute = static_cast<double>(box + 2 * axis * tail + tail * tail);
    CHECK(std::abs(multi_l_direct(indicator(2), half, {3.0, 3.0}) - brute) <= 1e-10);

    // polynomial and congruence weights: sum over odd y of y (y + 1/3)^{-4}
    asymptotics::WeightFunction F(1);
    F.add_term({Rational(1), {1}, {1}, {2}});
    double s = 0;
    for (long y = 1; y < 2000001; y += 2) s += y * std::pow(y + 1.0 / 3, -4);
    s += 0.25 / (2000001.0 * 2000001.0);
    CHECK(std::abs(multi_l_direct(F, {Rational(1, 3)}, {4.0}) - s) <= 1e-10);
    CHECK_THROWS_AS(multi_l_direct(F, {Rational(1, 3)}, {2.0}), Error);
}

TEST_CASE("iterated residues")
{
    CHECK(multi_residue(indicator(1), {Rational(1, 3)}, {-1}) == 1);
    CHECK(multi_residue(indicator(1), {Rational(1, 3)}, {0}) == Rational(1, 6));
    auto h = lfunc::hurwitz_handle(Rational(1, 3));
    CHECK(std::abs(lfunc::gamma_residue(h, 0).value - 1.0 / 6) <= 1e-12);
    for (int m = 1; m <= 5; ++m) {
        double want = lfunc::gamma_residue(h, m).value.real();
        CHECK(std::abs(multi_residue(indicator(1), {Rational(1, 3)}, {m}).get_d() - want) <= 1e-12);
    }
    for (int a = -1; a <= 3; ++a)
        for (int b = -1; b <= 3; ++b)
            CHECK(multi_residue(indicator(2), {Rational(1, 3), Rational(1, 5)}, {a, b}) ==
                  multi_residue(indicator(1), {Rational(1, 3)}, {a}) * multi_residue(indicator(1), {Rational(1, 5)}, {b}));
    CHECK_THROWS_AS(multi_residue(indicator(1), {Rational(1, 3)}, {-2}), Error);
}

TEST_CASE("weighted L by direct summation")
{
    auto circle = make_weight_form(2, {{{2, 0}, 1}, {{0, 2}, 1}});
    double brute = 0;
    const long X = 800;
    for (long a = 0; a < X; ++a)
        for (long b = 0; b < X; ++b) {
            double x = a + 0.5, y = b + 0.5;
            double r2 = x * x + y * y;
            if (r2 <= double(X) * X) brute += std::pow(r2, -3);
        }
    brute += pi / 2 / (4.0 * std::pow(double(X), 4));  // quarter-plane tail of r^{-6}
    CHECK(std::abs(weighted_l(indicator(2), half, circle, 3.0) - brute) <= 1e-10);

    for (double s : {3.0, 3.5}) {
        auto scaled = make_weight_form(2, {{{2, 0}, 3}, {{0, 2}, 3}});
        CHECK(std::abs(weighted_l(indicator(2), half, scaled, s) - std::pow(3.0, -s) * weighted_l(indicator(2), half, circle, s)) <=
              1e-11);
    }
}

TEST_CASE("Bernoulli side against the theta-sum expansion")
{
    auto w = epstein();
    auto probe = asymptotics::ExpPolynomialProbe(2, w.w);
    auto ex = asymptotics::asymptotic_coefficients(indicator(2), half, probe, 3);
    for (int M = -2; M <= 3; ++M) CHECK(std::abs(weighted_residue(indicator(2), half, w, M) - ex.coefficient(M)) <= 1e-12);
    // the pole at s = N/d = 1 has residue c_{-2}: area integral pi/(3 sqrt 3)
    CHECK(std::abs(weighted_residue(indicator(2), half, w, -2) - pi / (3 * std::sqrt(3.0))) <= 1e-10);
}

TEST_CASE("relation between the two L-functions")
{
    for (int M : {-1, 0, 1, 2}) {
        auto r = relation_check(indicator(2), half, epstein(), M);
        CHECK(r.abs_diff <= 1e-8);
        auto c = relation_check(indicator(2), half, cubic(), M);
        CHECK(c.abs_diff <= 1e-7);
    }
    auto linear = make_weight_form(1, {{{1}, 1}});
    auto h = relation_check(indicator(1), {Rational(1, 3)}, linear, 0);
    CHECK(std::abs(h.lhs - 1.0 / 6) <= 1e-10);
    CHECK(std::abs(h.rhs - 1.0 / 6) <= 1e-14);

    RelationReport rep{1, Complex(0.5, 0), Complex(0.25, 0), 0.25};
    CHECK(rep.to_json() == R"({"M":1,"lhs":[0.5,0.0],"rhs":[0.25,0.0],"abs_diff":0.25})");
}

TEST_CASE("a corrupted Bernoulli coefficient breaks the relation")
{
    auto w = epstein();
    auto fit = theta_fit(indicator(2), half, w);
    // perturb one multi-residue in the Bernoulli side by hand
    asymptotics::ExpPolynomialProbe probe(2, w.w);
    double rhs = 0;
    for (int a = -1; a <= 1; ++a) {
        int b = 0 - a;
        Rational r = multi_residue(indicator(2), half, {a, b});
        if (a == 1) r += Rational(1, 1000);
        rhs += probe.derivative({a, b}) * r.get_d();
    }
    CHECK(std::abs(fit.at(0).convert_to<double>() - rhs) > 1e-6);
}
