#include "qtl/gppv/gppv.hpp"

#include <cmath>

#include "qtl/core/series.hpp"

namespace qtl::gppv {

using plumbing::LinkingData;
using plumbing::SpincClass;

Rational f_vertex(int degree, long ell)
{
    if (degree < 0) fail(ErrorCode::domain, "negative vertex degree");
    switch (degree) {
    case 0:
        if (ell == 0) return -2;
        return (ell == 2 || ell == -2) ? 1 : 0;
    case 1:
        return (ell == 1 || ell == -1) ? Rational(-ell) : Rational(0);
    case 2:
        return ell == 0 ? 1 : 0;
    default:
        break;
    }
    const long base = degree - 2;
    long a = ell >= 0 ? ell : -ell;
    if (a < base || (a - base) % 2 != 0) return 0;
    long m = (a - base) / 2;
    Rational v(binomial(m + degree - 3, degree - 3), 2);
    v.canonicalize();
    if (ell < 0 && degree % 2 == 1) v = -v;
    return v;
}

bool in_vertex_support(int degree, long ell) { return f_vertex(degree, ell) != 0; }

Rational f_ell(const LinkingData& L, const std::vector<Integer>& ell)
{
    if (static_cast<int>(ell.size()) != L.size()) fail(ErrorCode::invalid_input, "ell has the wrong length");
    Rational p = 1;
    for (int i = 0; i < L.size() && p != 0; ++i) {
        if (!ell[i].fits_slong_p()) return 0;
        p *= f_vertex(L.delta()[i], ell[i].get_si());
    }
    return p;
}

Rational prefactor_exponent(const LinkingData& L)
{
    Rational r(-(3 * Integer(L.size()) + L.trace()), 4);
    r.canonicalize();
    return r;
}

Rational term_exponent(const LinkingData& L, const std::vector<Integer>& ell)
{
    std::vector<Rational> l(ell.begin(), ell.end());
    return prefactor_exponent(L) - quadratic_form(L.B().inverse(), l) / 4;
}

std::vector<LatticeTerm> enumerate_terms(const LinkingData& L, const SpincClass& b, const Rational& emax)
{
    const int n = L.size();
    const Rational budget = 4 * (emax - prefactor_exponent(L));
    std::vector<LatticeTerm> out;
    if (budget < 0) return out;

    RatMatrix a = L.B().inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = -a(i, j);
    // a = L D L^T; quadratic = sum_j d_j (ell_j + sum_{i>j} L_ij ell_i)^2, fixed from the last index down
    LdlFactor f = ldl_decompose(a);

    std::vector<long> ell(n, 0);
    const RatMatrix& binv = L.B().inverse();
    auto in_coset = [&]() {
        for (int i = 0; i < n; ++i) {
            Rational s = 0;
            for (int j = 0; j < n; ++j) s += binv(i, j) * Rational(Integer(ell[j]) - b.representative[j]);
            s /= 2;
            if (s.get_den() != 1) return false;
        }
        return true;
    };

    std::function<void(int, const Rational&)> rec = [&](int j, const Rational& rem) {
        if (j < 0) {
            if (!in_coset()) return;
            std::vector<Integer> v(ell.begin(), ell.end());
            Rational c = f_ell(L, v);
            if (c == 0) return;
            Rational ex = emax - rem / 4;  // used budget = budget - rem
            out.push_back({std::move(v), ex, c});
            return;
        }
        Rational shift = 0;
        for (int i = j + 1; i < n; ++i) shift += f.L(i, j) * ell[i];
        const int deg = L.delta()[j];
        auto try_value = [&](long v) {
            if (!in_vertex_support(deg, v)) return;
            Rational y = shift + v;
            Rational used = f.d[j] * y * y;
            if (used > rem) return;
            ell[j] = v;
            rec(j - 1, rem - used);
        };
        if (deg <= 2) {
            for (long v = -2; v <= 2; ++v) try_value(v);
            return;
        }
        double r = std::sqrt(std::max(0.0, Rational(rem / f.d[j]).get_d()));
        double c = -shift.get_d();
        long lo = static_cast<long>(std::floor(c - r)) - 1;
        long hi = static_cast<long>(std::ceil(c + r)) + 1;
        for (long v = lo; v <= hi; ++v) try_value(v);
    };
    rec(n - 1, budget);
    // exponents were tracked from the budget; recompute exactly for safety of the bookkeeping
    for (auto& t : out) t.exponent = term_exponent(L, t.ell);
    return out;
}

QSeries zhat_series(const LinkingData& L, const SpincClass& b, const Rational& emax)
{
    QSeries s;
    s.prefactor_exponent = prefactor_exponent(L);
    s.emax = emax;
    for (auto& t : enumerate_terms(L, b, emax)) s.add(t.exponent, t.coeff);
    if (s.terms.empty())
        s.warnings.push_back("no terms with exponent <= " + to_string(emax) + " (minimal exponent is above the window)");
    return s;
}

namespace {

// Coefficients of (x - 1/x)^{2-deg} as a Laurent expansion around x = 0 (sign = +1)
// or of (1/x - x)^{2-deg} around 0 (sign = -1), on degrees [-window, window].
std::vector<Rational> expansion_at_zero(int degree, int window, int sign)
{
    using S = TruncatedLaurent<Rational>;
    const int hi = window + 4 * degree + 8;
    S h({-1}, {hi});
    h.at({-1}) = -sign;
    h.at({1}) = sign;
    S p = S::constant(1, 1, {hi});
    int power = std::abs(2 - degree);
    for (int i = 0; i < power; ++i) p = p * h;
    S g = degree <= 2 ? p : series_inverse(p);
    std::vector<Rational> out(2 * window + 1);
    for (int l = -window; l <= window; ++l) out[l + window] = g.coeff({l});
    return out;
}

}  // namespace

IdentityReport generating_identity_check(const LinkingData& L, int window, const VertexRule& rule)
{
    const int n = L.size();
    std::vector<std::vector<Rational>> expected(n);
    int high_degree = 0;
    for (int i = 0; i < n; ++i) {
        int d = L.delta()[i];
        auto zero = expansion_at_zero(d, window, 1);
        if (d >= 3) {
            ++high_degree;
            // expansion at infinity: coefficient of x^l equals that of x^{-l} in (1/y - y)^{2-d} at y = 0
            auto inf = expansion_at_zero(d, window, -1);
            for (int l = -window; l <= window; ++l) zero[l + window] += inf[-l + window];
        }
        expected[i] = zero;
    }
    const Rational scale(Integer(1) << high_degree);

    IdentityReport report;
    std::vector<long> ell(n, -window);
    for (;;) {
        Rational lhs = scale;
        Rational rhs = 1;
        for (int i = 0; i < n; ++i) {
            lhs *= rule(L.delta()[i], ell[i]);
            rhs *= expected[i][ell[i] + window];
        }
        ++report.monomials_checked;
        if (lhs != rhs && report.holds) {
            report.holds = false;
            report.first_mismatch = ell;
        }
        int i = n - 1;
        while (i >= 0 && ++ell[i] > window) ell[i--] = -window;
        if (i < 0) break;
    }
    return report;
}

}  // namespace qtl::gppv
