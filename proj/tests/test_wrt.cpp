#include <cmath>
#include <numbers>

#include "doctest.h"
#include "graphs.hpp"
#include "qtl/core/quadrature.hpp"
#include "qtl/wrt/wrt.hpp"

using namespace qtl;
using namespace qtl::wrt;
using plumbing::linking_data;
using plumbing::spinc_classes;

namespace {

// Independent oracle: SU(2) WRT invariant by surgery on the plumbing link, normalized by the
// unknot with framing -1, i.e. Z = F(graph) / F(single -1)^V with
// F = sum_{n in [1,k-1]^V} prod [n_I]^{2-deg} e(w_I (n_I^2-1)/(4k)) prod_edges [n_I n_J].
Complex surgery_wrt(const plumbing::PlumbingGraph& g, long k)
{
    auto F = [k](const std::vector<long>& w, const std::vector<std::pair<int, int>>& edges) {
        const int V = static_cast<int>(w.size());
        std::vector<int> deg(V, 0);
        for (auto& [a, b] : edges) ++deg[a], ++deg[b];
        auto br = [k](double n) { return std::sin(std::numbers::pi * n / k) / std::sin(std::numbers::pi / k); };
        std::vector<long> n(V, 1);
        Complex total = 0;
        for (;;) {
            Complex t = 1;
            for (int I = 0; I < V; ++I)
                t *= std::pow(br(n[I]), 2 - deg[I]) *
                     std::exp(Complex(0, 2 * std::numbers::pi * w[I] * (n[I] * n[I] - 1) / (4.0 * k)));
            for (auto& [a, b] : edges) t *= br(double(n[a] * n[b]));
            total += t;
            int i = V - 1;
            while (i >= 0 && ++n[i] > k - 1) n[i--] = 1;
            if (i < 0) break;
        }
        return total;
    };
    return F(g.weights, g.edges) / std::pow(F({-1}, {}), g.size());
}

Complex zeta_diff(long k) { return e(Rational(1, 2 * k)) - e(Rational(-1, 2 * k)); }

plumbing::PlumbingGraph star(std::vector<long> w)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < static_cast<int>(w.size()); ++i) e.emplace_back(0, i);
    return plumbing::make_graph(std::move(w), std::move(e));
}

}  // namespace

TEST_CASE("linking form")
{
    auto s3 = linking_data(testgraphs::single(-1));
    auto c = spinc_classes(s3);
    CHECK(linking_form(s3, c[0], c[0]).value == 0);

    auto l3 = linking_data(testgraphs::single(-3));
    auto cl = spinc_classes(l3);
    REQUIRE(cl.size() == 3);
    for (auto& a : cl)
        for (auto& b : cl) {
            Rational v = linking_form(l3, a, b).value;
            CHECK(v >= 0);
            CHECK(v < 1);
            // l^T B^{-1} l' = -l l'/3
            Rational expect(-a.representative[0] * b.representative[0], 3);
            expect.canonicalize();
            CHECK(v == frac(expect));
            // shifting a representative by 2Bv leaves the value unchanged
            for (long v2 : {-2L, 1L, 5L}) {
                std::vector<Integer> moved{a.representative[0] + 2 * (-3) * v2};
                CHECK(linking_form(l3, moved, b.representative).value == v);
            }
        }
    plumbing::SpincClass nonzero = cl[0].representative[0] != 0 ? cl[0] : cl[1];
    Rational self = linking_form(l3, nonzero, nonzero).value;
    CHECK((self == Rational(1, 3) || self == Rational(2, 3)));

    auto e8 = linking_data(testgraphs::e8());
    CHECK_THROWS_AS(linking_form(e8, cl[0], cl[0]), Error);
    CHECK_THROWS_AS(linking_form(e8, std::vector<Integer>{1}, std::vector<Integer>{1}), Error);
}

TEST_CASE("GPPV L-function of S^3")
{
    auto L = linking_data(testgraphs::single(-1));
    auto b = spinc_classes(L)[0];
    auto h = gppv_l_function(L, b, 3);
    REQUIRE(h.exceptional.size() == 1);
    CHECK(h.exceptional[0].b == doctest::Approx(-0.5));
    auto positive = lfunc::collect(h, 10);
    CHECK(positive.size() + h.exceptional.size() == 3);
    CHECK(h.max_b.has_value());
    Complex v = lfunc::continuation_value(h, 0).value;
    Complex expect = 2.0 * (e(Rational(1, 6)) - e(Rational(-1, 6)));
    CHECK(std::abs(v - expect) < 1e-12);
    // the two branches agree at integers
    auto h2 = h;
    h2.branch = lfunc::Branch::plus;
    CHECK(std::abs(lfunc::exceptional_value(h, -2.0) - lfunc::exceptional_value(h2, -2.0)) < 1e-12);
}

TEST_CASE("S^3 normalization")
{
    auto L = linking_data(testgraphs::single(-1));
    for (long k = 3; k <= 10; ++k) {
        Complex z = wrt_invariant(L, k);
        CHECK(std::abs(z - 1.0) < 1e-10);
    }
}

TEST_CASE("WRT against the surgery oracle")
{
    for (auto g : {testgraphs::single(-2), testgraphs::single(-3), testgraphs::single(-5), testgraphs::path({-2, -2}),
                   testgraphs::path({-3, -2}), testgraphs::path({-2, -3, -2}), testgraphs::path({-1, -3})})
        for (long k : {3, 4, 5, 6}) {
            auto L = linking_data(g);
            CHECK(std::abs(wrt_invariant(L, k) - surgery_wrt(g, k)) < 1e-9);
        }
    // plumbings with a trivalent vertex use the asymptotic expansion of the infinite series
    for (long k : {3, 5}) {
        auto g = testgraphs::e8();
        CHECK(std::abs(wrt_invariant(linking_data(g), k) - surgery_wrt(g, k)) < 1e-8);
    }
    for (auto g : {star({-2, -3, -2, -5}), star({-3, -2, -2, -2}), star({-2, -2, -3, -3}), star({-3, -2, -2, -2, -2})})
        for (long k : {3, 4}) CHECK(std::abs(wrt_invariant(linking_data(g), k) - surgery_wrt(g, k)) < 1e-8);
}

TEST_CASE("WRT against the radial extrapolation oracle")
{
    {
        auto L = linking_data(testgraphs::e8());
        auto b = spinc_classes(L)[0];
        Complex oracle = radial_limit_oracle(L, b, 5);
        auto c = combined_l(L, 5);
        // a single class: coefficient 1/2
        CHECK(std::abs(c.coefficients.at(0) - 0.5) < 1e-14);
        CHECK(std::abs(wrt_from_combined(c) - 0.5 * oracle / zeta_diff(5)) < 1e-4);
    }
    {
        auto L = linking_data(testgraphs::single(-2));
        Complex expect = 0;
        auto classes = spinc_classes(L);
        auto c = combined_l(L, 4);
        for (auto& [idx, coeff] : c.coefficients) expect += coeff * radial_limit_oracle(L, classes[idx], 4);
        CHECK(std::abs(wrt_from_combined(c) - expect / zeta_diff(4)) < 1e-6);
    }
}

TEST_CASE("s = 0 value equals the constant term of the radial expansion")
{
    for (auto g : {testgraphs::e8(), star({-2, -3, -2, -5}), testgraphs::single(-3)}) {
        auto L = linking_data(g);
        auto classes = spinc_classes(L);
        for (auto& b : classes) {
            auto h = gppv_l_function(L, b, 5);
            auto full = radial_expansion(L, b, 5);
            CHECK(std::abs(lfunc::continuation_value(h, 0).value - full.coefficient(0)) < 1e-9);
        }
    }
}

TEST_CASE("Mellin oracle agrees with direct integration for E8")
{
    auto L = linking_data(testgraphs::e8());
    auto b = spinc_classes(L)[0];
    auto h = gppv_l_function(L, b, 5);
    // the expansion is asymptotic with fast-growing coefficients, so it is only used very close to 0
    Complex mellin = lfunc::mellin_oracle(h, 1.0, 0, {1e-3, 1e-10});
    // independent path: integrate sum_{E > 0} a e^{-E t} over t from the enumerated q-series
    auto z = gppv::zhat_series(L, b, 200000);
    auto positive = [&](double t) {
        Complex s = 0;
        for (auto& [ex, c] : z.terms)
            if (ex > 0) s += c.get_d() * e(ex / Rational(5)) * std::exp(-ex.get_d() * t);
        return s;
    };
    const double t0 = 1.0 / 4096;
    auto re = integrate<double>([&](double t) { return positive(t).real(); }, t0, 60.0, 1e-11, 1e-11);
    auto im = integrate<double>([&](double t) { return positive(t).imag(); }, t0, 60.0, 1e-11, 1e-11);
    // [0, t0] by the midpoint rule; the integrand is smooth there
    Complex direct = Complex(re.value, im.value) + t0 * positive(t0 / 2);
    direct += lfunc::exceptional_value(h, 1.0);
    CHECK(std::abs(mellin - direct) < 1e-6);
}

TEST_CASE("entirety of the combined L-function")
{
    for (auto g : {testgraphs::single(-1), testgraphs::single(-3), testgraphs::e8(), star({-2, -3, -2, -5}),
                   star({-3, -2, -2, -2, -2})})
        for (long k : {3, 5}) {
            auto c = combined_l(linking_data(g), k);
            auto r = entirety_report(c.merged, 4);
            CHECK(r.entire(1e-8));
            bool saw_one = false, saw_two = false;
            for (auto& p : r.candidates) {
                saw_one |= p.s == 1.0 && p.l_pole;
                saw_two |= p.s == 2.0 && p.l_pole;
            }
            CHECK(saw_one);
            CHECK(saw_two);
        }

    // single vertex -3: the merged t^{-1} coefficient vanishes
    auto c3 = combined_l(linking_data(testgraphs::single(-3)), 4);
    CHECK(std::abs(c3.merged.expansion.coefficient(-2)) <= 1e-10);

    // negative control: one unweighted component of a manifold with |det B| > 1; a vertex of
    // degree 4 is needed, since a degree-3 vertex carries an odd weight with no polar part
    auto L = linking_data(star({-3, -2, -2, -2, -2}));
    REQUIRE(L.abs_det() > 1);
    double worst = 0;
    for (auto& b : spinc_classes(L)) worst = std::max(worst, entirety_report(gppv_l_function(L, b, 5), 4).max_l_residue);
    CHECK(worst > 1e-3);
}

TEST_CASE("orbit representatives and coefficient tables")
{
    auto L = linking_data(star({-2, -3, -2, -5}));
    auto classes = spinc_classes(L);
    // replacing b by -b leaves the handle unchanged
    for (auto& b : classes) {
        std::vector<Integer> neg;
        for (auto& x : b.representative) neg.push_back(-x);
        auto mb = plumbing::canonical_class(L, neg);
        auto h1 = radial_expansion(L, b, 4), h2 = radial_expansion(L, mb, 4);
        for (int m = -4; m <= 8; ++m)
            CHECK(std::abs(h1.coefficient(m) - h2.coefficient(m)) < 1e-10 * std::max(1.0, std::abs(h1.coefficient(m))));
    }

    auto zero = combined_l(L, 4, CoefficientRule::external_table, {{0, 0.0}});
    CHECK(zero.components.empty());
    CHECK(zero.merged.expansion.coefficients.empty());
    CHECK(lfunc::collect(zero.merged, 50).empty());
    CHECK_THROWS_AS(combined_l(L, 4, CoefficientRule::external_table, {{static_cast<int>(classes.size()), 1.0}}), Error);

    auto t = parse_coefficient_table(R"({"coeffs": [{"b": 0, "c": [1.5, -2]}, {"b": 2, "c": [0, 1]}]})");
    CHECK(t.size() == 2);
    CHECK(t.at(0) == Complex(1.5, -2));
    CHECK_THROWS_AS(parse_coefficient_table(R"({"coeffs": [{"b": 0}]})"), Error);

    // a table equal to the default S-matrix coefficients reproduces the invariant
    auto s = combined_l(L, 4);
    std::map<int, Complex> table;
    for (auto& [i, c] : s.coefficients) table[i] = c;
    auto tb = combined_l(L, 4, CoefficientRule::external_table, table);
    CHECK(std::abs(wrt_from_combined(tb) - wrt_from_combined(s)) < 1e-12);
}
