#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qtl/core/error.hpp"
#include "qtl/gppv/gppv.hpp"
#include "qtl/lie/lie.hpp"
#include "qtl/wrt/wrt.hpp"

using namespace qtl;
using namespace qtl::lie;

namespace {

const seifert::SeifertData& poincare()
{
    static const auto S = seifert::make_seifert({2, 3, 5});
    return S;
}

// Brute force over a generous box of chi-supported coordinates.
std::map<Rational, Rational> brute_block(const seifert::SeifertData& S, const RootSystemData& R,
                                         const std::vector<std::vector<long>>& roots, const Rational& emax, long box)
{
    const int N = static_cast<int>(roots.size());
    auto shift = block_shift(S, R);
    std::vector<std::pair<long, Integer>> support;
    for (long m = -S.P * S.n(); m <= box; ++m) {
        Integer c = seifert::chi_closed_form(S.p, m);
        if (c != 0) support.emplace_back(m, c);
    }
    std::map<Rational, Rational> out;
    std::vector<size_t> idx(N, 0);
    for (;;) {
        std::vector<long> v(R.rank, 0);
        Integer c = 1;
        for (int a = 0; a < N; ++a) {
            for (int i = 0; i < R.rank; ++i) v[i] += support[idx[a]].first * roots[a][i];
            c *= support[idx[a]].second;
        }
        Rational ex = ratio(R.inner(v, v), 8 * S.P) - shift;
        if (ex <= emax) {
            out[ex] += Rational(c);
            out[ex].canonicalize();
        }
        int a = N - 1;
        while (a >= 0 && ++idx[a] == support.size()) idx[a--] = 0;
        if (a < 0) break;
    }
    std::erase_if(out, [](auto& kv) { return kv.second == 0; });
    return out;
}

std::map<Rational, Rational> nonzero(const QSeries& q)
{
    std::map<Rational, Rational> out;
    for (auto& [e, c] : q.terms)
        if (c != 0) out[e] = c;
    return out;
}

}  // namespace

TEST_CASE("root system data")
{
    struct Want {
        const char* name;
        int positive;
        long index;
        long weyl;
        int dim;
        long coxeter;
    };
    for (auto w : {Want{"A1", 1, 2, 2, 3, 2}, Want{"A2", 3, 3, 6, 8, 3}, Want{"A3", 6, 4, 24, 15, 4},
                   Want{"D4", 12, 4, 192, 28, 6}}) {
        auto R = root_system(w.name);
        CHECK(R.name() == w.name);
        CHECK(R.num_positive() == w.positive);
        CHECK(R.index_xy == w.index);
        CHECK(R.weyl_order == w.weyl);
        CHECK(R.dim_g == w.dim);
        // |rho|^2 = h dim g / 12 for simply-laced types
        CHECK(R.rho_norm2() == ratio(w.coxeter * w.dim, 12));
        for (auto& a : R.positive_roots) CHECK(R.inner(a, a) == 2);
        for (int i = 0; i < R.rank; ++i) {
            std::vector<Rational> ai(R.rank, Rational(0));
            ai[i] = 1;
            CHECK(R.inner(R.rho, ai) == 1);
            for (int j = 0; j < R.rank; ++j) {
                std::vector<Rational> aj(R.rank, Rational(0));
                aj[j] = 1;
                CHECK(R.inner(R.fundamental_weights[i], aj) == (i == j ? 1 : 0));
            }
        }
    }
    auto A1 = root_system('A', 1);
    CHECK(A1.rho_norm2() == Rational(1, 2));
    CHECK_THROWS_AS(root_system('B', 2), Error);
    CHECK_THROWS_AS(root_system('A', 4), Error);
    CHECK_THROWS_AS(root_system("E8"), Error);
}

TEST_CASE("A1 block matches the plumbing block of the E8 graph")
{
    const auto& S = poincare();
    auto R = root_system("A1");
    auto blk = homological_block(S, R, Rational(20));
    CHECK(blk.series.prefactor_exponent == -Rational(3) * seifert::phi_rational(S) / 4);
    auto L = plumbing::linking_data(seifert::seifert_plumbing(S));
    auto z = gppv::zhat_series(L, plumbing::spinc_classes(L)[0], Rational(30));
    // Phi = q^{-phi/2} Zhat_0
    const Rational off = seifert::phi_rational(S) / 2;
    auto phi_terms = nonzero(blk.series);
    REQUIRE(phi_terms.size() >= 5);
    for (auto& [ex, c] : phi_terms) {
        Rational shifted = ex + off;
        shifted.canonicalize();
        auto it = z.terms.find(shifted);
        REQUIRE(it != z.terms.end());
        CHECK(it->second == c);
    }
    for (auto& [ex, c] : z.terms)
        if (ex - off <= Rational(20) && c != 0) CHECK(phi_terms.count(Rational(ex - off)) == 1);
}

TEST_CASE("A2 block against a brute-force convolution")
{
    const auto& S = poincare();
    auto R = root_system("A2");
    Rational emax = -block_shift(S, R) + 30;
    auto blk = homological_block(S, R, emax);
    auto want = brute_block(S, R, R.positive_roots, emax, 300);
    CHECK(nonzero(blk.series) == want);
    CHECK(!want.empty());
    for (auto& [ex, c] : blk.series.terms) {
        Rational q = (ex + block_shift(S, R)) * 8 * S.P;
        q.canonicalize();
        CHECK(q.get_den() == 1);
    }
}

TEST_CASE("empty window and bad positive systems")
{
    const auto& S = poincare();
    auto R = root_system("A2");
    auto blk = homological_block(S, R, -block_shift(S, R) - 1);
    CHECK(blk.series.terms.empty());
    CHECK(!blk.series.warnings.empty());
    std::vector<std::vector<long>> bad{{1, 0}, {0, 1}, {-1, -1}};
    CHECK_THROWS_AS(homological_block(S, R, Rational(0), bad), Error);
}

TEST_CASE("block is independent of the positive system")
{
    const auto& S = poincare();
    for (auto name : {"A2", "A3"}) {
        auto R = root_system(name);
        Rational emax = -block_shift(S, R) + (R.rank == 2 ? 40 : 12);
        auto base = nonzero(homological_block(S, R, emax).series);
        CHECK(!base.empty());
        for (int i = 0; i < R.rank; ++i)
            CHECK(nonzero(homological_block(S, R, emax, reflected_positive_roots(R, i)).series) == base);
    }
    auto R = root_system("A2");
    Rational emax = -block_shift(S, R) + 25;
    auto refl = reflected_positive_roots(R, 1);
    CHECK(nonzero(homological_block(S, R, emax, refl).series) == brute_block(S, R, refl, emax, 300));
}

TEST_CASE("A1 L-function: entire, s = 0 value, Mellin agreement")
{
    const auto& S = poincare();
    auto R = root_system("A1");
    auto h = lie_l_function(S, R, 5);
    auto rep = wrt::entirety_report(h, 3);
    CHECK(rep.entire(1e-8));
    for (int n : {1, 2}) CHECK(std::abs(lfunc::continuation_value(h, -n).value) <= 1e-8);
    Complex L0 = lfunc::continuation_value(h, 0).value;
    CHECK(std::abs(L0 - radial_limit_oracle(h)) <= 1e-5);
    Complex direct = lfunc::l_direct(h, 1.5, 1e-11);
    Complex mellin = lfunc::mellin_oracle(h, 1.5, 0, {1e-3, 1e-11});
    CHECK(std::abs(direct - mellin) <= 1e-7);
}

TEST_CASE("finite sum: exclusion counts and k = 1")
{
    const auto& S = poincare();
    auto A1 = root_system("A1");
    for (long k : {3L, 5L, 7L}) {
        auto r = radial_limit_finite_sum(S, A1, k);
        CHECK(r.cosets == 2 * k * S.P);
        long brute = 0;
        for (long x = 0; x < 2 * k * S.P; ++x) brute += (x % k == 0);
        CHECK(r.excluded == brute);
    }
    auto A2 = root_system("A2");
    auto r4 = radial_limit_finite_sum(S, A2, 4);
    CHECK(r4.cosets == 4 * 30 * 4 * 30 * 3);
    long brute = 0;
    // X / 120 Y for A2: x in Z^2 modulo 120 C Z^2; count through a fundamental box of Z^2 / 360 Z^2
    // scaled down by the index of 120 C Z^2 in 360 Z^2 (= 3)
    for (long a = 0; a < 360; ++a)
        for (long b = 0; b < 360; ++b)
            if (a % 4 == 0 || b % 4 == 0 || (a + b) % 4 == 0) ++brute;
    CHECK(r4.excluded * 3 == brute);
    for (auto name : {"A1", "A2", "D4"}) {
        auto R = root_system(name);
        auto r1 = radial_limit_finite_sum(S, R, 1);
        CHECK(r1.excluded == r1.cosets);
        CHECK(r1.value == Complex(0));
    }
    CHECK_THROWS_AS(radial_limit_finite_sum(S, A2, 4, MFilter::every_root), Error);
}

TEST_CASE("finite-sum terms depend only on the coset of kPY")
{
    const auto& S = poincare();
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50), z(-3, 3);
    for (auto name : {"A1", "A2", "A3"}) {
        auto R = root_system(name);
        const long k = 4;
        int tested = 0;
        while (tested < 20) {
            std::vector<long> x(R.rank);
            for (auto& v : x) v = d(rng);
            bool singular = false;
            for (auto& a : R.positive_roots) {
                long v = 0;
                for (int i = 0; i < R.rank; ++i) v += a[i] * x[i];
                singular |= v % k == 0;
            }
            if (singular) continue;
            // beta = C z in fundamental-weight coordinates
            std::vector<long> zz(R.rank), y = x;
            for (auto& v : zz) v = z(rng);
            for (int i = 0; i < R.rank; ++i)
                for (int j = 0; j < R.rank; ++j) y[i] += k * S.P * R.cartan[i][j] * zz[j];
            Complex a = finite_sum_term(S, R, k, x), b = finite_sum_term(S, R, k, y);
            CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
            ++tested;
        }
    }
}

TEST_CASE("A1 dual path and the SU(2) bridge")
{
    const auto& S = poincare();
    auto R = root_system("A1");
    for (long k : {3L, 5L, 7L}) {
        Complex a = wrt_g(S, R, k, LimitPath::finite_sum), b = wrt_g(S, R, k, LimitPath::l_value);
        CHECK(std::abs(a - b) <= 1e-6);
    }
    auto L = plumbing::linking_data(seifert::seifert_plumbing(S));
    Complex su2 = wrt::wrt_invariant(L, 5);
    CHECK(std::abs(wrt_g(S, R, 5) - su2_bridge(S, 5) * su2) <= 1e-4);
    // the bridge is frozen from k = 5; it keeps holding at other levels
    for (long k : {3L, 4L, 6L, 7L})
        CHECK(std::abs(wrt_g(S, R, k) - su2_bridge(S, k) * wrt::wrt_invariant(L, k)) <= 1e-6);
}

TEST_CASE("A2 dual path")
{
    const auto& S = poincare();
    auto R = root_system("A2");
    auto h = lie_l_function(S, R, 4, 0);
    for (int m = h.expansion.lowest(); m < 0; ++m) CHECK(std::abs(h.expansion.coefficient(m)) <= 1e-8);
    Complex viaL = lfunc::continuation_value(h, 0).value;
    Complex viaSum = radial_limit_finite_sum(S, R, 4).value;
    CHECK(std::abs(viaL - viaSum) <= 1e-5);
    CHECK(std::abs(viaSum) > 1e-3);
    Complex w = wrt_g(S, R, 4);
    CHECK(std::isfinite(std::abs(w)));
}
