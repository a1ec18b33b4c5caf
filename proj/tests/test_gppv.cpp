#include <map>

#include "doctest.h"
#include "graphs.hpp"
#include "qtl/gppv/gppv.hpp"

using namespace qtl;
using namespace qtl::gppv;
using plumbing::linking_data;
using plumbing::spinc_classes;

TEST_CASE("vertex coefficients")
{
    CHECK(f_vertex(1, -1) == 1);
    CHECK(f_vertex(1, 1) == -1);
    CHECK(f_vertex(2, 0) == 1);
    CHECK(f_vertex(2, 2) == 0);
    CHECK(f_vertex(3, 1) == Rational(1, 2));
    CHECK(f_vertex(3, -1) == Rational(-1, 2));
    CHECK(f_vertex(3, 0) == 0);
    CHECK(f_vertex(4, 4) == 1);
    CHECK(f_vertex(5, -7) == Rational(-3, 1));
    CHECK(f_vertex(0, 0) == -2);
    CHECK(f_vertex(0, 2) == 1);
}

TEST_CASE("F_ell products and symmetry")
{
    auto s3 = linking_data(testgraphs::single(-1));
    CHECK(f_ell(s3, {0}) == -2);
    CHECK(f_ell(s3, {2}) == 1);

    auto star = linking_data(plumbing::make_graph({-2, -3, -2, -5, -2}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    for (long a = -9; a <= 9; ++a)
        for (long b = -1; b <= 1; ++b)
            for (long c = -1; c <= 1; ++c) {
                std::vector<Integer> l{a, b, c, 1, -1}, m{-a, -b, -c, -1, 1};
                CHECK(f_ell(star, l) == f_ell(star, m));
            }
}

TEST_CASE("zhat of S^3")
{
    auto L = linking_data(testgraphs::single(-1));
    auto b = spinc_classes(L)[0];
    auto z = zhat_series(L, b, 2);
    CHECK(z.prefactor_exponent == Rational(-1, 2));
    REQUIRE(z.terms.size() == 2);
    CHECK(z.terms.at(Rational(-1, 2)) == -2);
    CHECK(z.terms.at(Rational(1, 2)) == 2);
    CHECK(z.warnings.empty());
    CHECK(z.to_json() == R"({"emax":"2","prefactor_exponent":"-1/2","terms":[["-1/2","-2"],["1/2","2"]]})");

    auto empty = zhat_series(L, b, -1);
    CHECK(empty.terms.empty());
    CHECK(empty.warnings.size() == 1);
}

namespace {

// Independent oracle: box enumeration over the coset with F_ell read off a brute-force
// expansion of prod (x - 1/x)^{2-deg}.
std::map<Rational, Rational> brute_force_zhat(const plumbing::LinkingData& L, const plumbing::SpincClass& b,
                                              const Rational& emax, long box)
{
    const int n = L.size();
    auto coeff = [&](int d, long l) -> Rational {
        if (d <= 2) {
            // binomial expansion of the polynomial (x - 1/x)^{2-d}
            int p = 2 - d;
            if ((l + p) % 2 != 0 || std::labs(l) > p) return 0;
            long k = (p - l) / 2;  // number of -1/x factors
            Rational v(binomial(p, k));
            return (k % 2) ? -v : v;
        }
        long base = d - 2, a = std::labs(l);
        if (a < base || (a - base) % 2) return 0;
        Rational v(binomial((a - base) / 2 + d - 3, d - 3), 2);
        v.canonicalize();
        // half the sum of the expansions at 0 (positive powers) and at infinity (negative powers);
        // the (-1)^deg relating these to F_{I,l} cancels over the tree
        return (l > 0 && d % 2) ? -v : v;
    };
    std::map<Rational, Rational> out;
    // coordinates of degree <= 2 carry a polynomial of degree <= 2; only delta + 2Z^V is visited
    std::vector<long> lim(n), start(n);
    for (int i = 0; i < n; ++i) {
        lim[i] = L.delta()[i] <= 2 ? 2 : box;
        start[i] = ((lim[i] + L.delta()[i]) % 2 == 0) ? -lim[i] : -lim[i] + 1;
    }
    std::vector<long> l = start;
    for (;;) {
        std::vector<Integer> v(l.begin(), l.end());
        if (plumbing::canonical_class(L, v).key == b.key) {
            Rational c = 1;
            for (int i = 0; i < n; ++i) c *= coeff(L.delta()[i], l[i]);
            Rational ex = term_exponent(L, v);
            if (c != 0 && ex <= emax) {
                out[ex] += c;
                if (out[ex] == 0) out.erase(ex);
            }
        }
        int i = n - 1;
        while (i >= 0 && (l[i] += 2) > lim[i]) {
            l[i] = start[i];
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("zhat of E8 against a brute-force oracle")
{
    auto L = linking_data(testgraphs::e8());
    auto b = spinc_classes(L)[0];
    auto z = zhat_series(L, b, 10);
    CHECK(z.prefactor_exponent == -2);
    // known start of the series: q^{-3/2}(1 - q - q^3 - q^7 + q^8 + ...)
    CHECK(z.terms.at(Rational(-3, 2)) == 1);
    CHECK(z.terms.at(Rational(-1, 2)) == -1);
    CHECK(z.terms.at(Rational(3, 2)) == -1);
    CHECK(z.terms.at(Rational(11, 2)) == -1);
    CHECK(z.terms.at(Rational(13, 2)) == 1);
    // the legs force |ell_I| <= 4 off the centre; the centre is bounded by the ellipsoid
    auto oracle = brute_force_zhat(L, b, 10, 13);
    CHECK(z.terms == oracle);
}

TEST_CASE("zhat on lens spaces and paths matches brute force")
{
    for (auto g : {testgraphs::single(-3), testgraphs::single(-4), testgraphs::path({-2, -3}),
                   testgraphs::path({-2, -2, -2}), plumbing::make_graph({-2, -3, -2, -5}, {{0, 1}, {0, 2}, {0, 3}})}) {
        auto L = linking_data(g);
        for (auto& b : spinc_classes(L)) {
            auto z = zhat_series(L, b, 6);
            auto oracle = brute_force_zhat(L, b, 6, 14);
            CHECK(z.terms == oracle);

            // single class mod 1
            if (!z.terms.empty()) {
                Rational r = frac(z.terms.begin()->first);
                for (auto& [ex, c] : z.terms) CHECK(frac(ex) == r);
            }
            // doubling the window keeps the prefix
            auto z2 = zhat_series(L, b, 12);
            for (auto& [ex, c] : z.terms) CHECK(z2.terms.at(ex) == c);
        }
    }
}

TEST_CASE("generating identity")
{
    auto s3 = linking_data(testgraphs::single(-1));
    CHECK(generating_identity_check(s3, 6).holds);
    auto star = linking_data(plumbing::make_graph({-2, -2, -2, -2}, {{0, 1}, {0, 2}, {0, 3}}));
    auto r = generating_identity_check(star, 9);
    CHECK(r.holds);
    CHECK(r.monomials_checked == 19L * 19 * 19 * 19);
    auto four = linking_data(plumbing::make_graph({-3, -2, -2, -2, -2}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
    CHECK(generating_identity_check(four, 7).holds);

    VertexRule mutated = [](int d, long l) {
        if (d == 3 && l == 5) return Rational(2);
        return f_vertex(d, l);
    };
    auto bad = generating_identity_check(star, 9, mutated);
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.first_mismatch.size() == 4);
    CHECK(bad.first_mismatch[0] == 5);
}
