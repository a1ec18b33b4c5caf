#include "qtl/seifert/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>

#include <boost/math/constants/constants.hpp>

#include "json.hpp"
#include "qtl/asymptotics/asymptotics.hpp"
#include "qtl/core/quadrature.hpp"
#include "qtl/gppv/gppv.hpp"

namespace qtl::seifert {

namespace {

constexpr double pi = boost::math::constants::pi<double>();

void check_p_list(const std::vector<long>& p)
{
    if (p.size() < 3) fail(ErrorCode::invalid_input, "a Seifert homology sphere needs at least three exceptional fibres");
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 2) fail(ErrorCode::invalid_input, "p_i must be at least 2");
        for (size_t j = i + 1; j < p.size(); ++j)
            if (std::gcd(p[i], p[j]) != 1)
                fail(ErrorCode::invalid_input,
                     "p_" + std::to_string(i + 1) + " and p_" + std::to_string(j + 1) + " are not coprime");
    }
}

long product(const std::vector<long>& p)
{
    long P = 1;
    for (long x : p) {
        if (P > std::numeric_limits<long>::max() / x) fail(ErrorCode::invalid_input, "product of the p_i overflows");
        P *= x;
    }
    return P;
}

long inverse_mod(long a, long m)
{
    long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    long r = a1;
    while (r != 0) {
        long t = g / r;
        std::tie(g, r) = std::make_pair(r, g - t * r);
        std::tie(x, x1) = std::make_pair(x1, x - t * x1);
    }
    if (g != 1) fail(ErrorCode::invalid_input, "not invertible");
    return ((x % m) + m) % m;
}

// Truncated power series in u whose coefficients are polynomials in tau.
using Bi = std::vector<std::vector<Complex>>;  // [u degree][tau degree]

Bi bi_zero(int K) { return Bi(K + 1, std::vector<Complex>(K + 1, 0.0)); }

Bi bi_mul(const Bi& a, const Bi& b, int K)
{
    Bi c = bi_zero(K);
    for (int i = 0; i <= K; ++i)
        for (int j = 0; i + j <= K; ++j)
            for (int s = 0; s <= K; ++s) {
                if (a[i][s] == Complex(0)) continue;
                for (int t = 0; s + t <= K; ++t) c[i + j][s + t] += a[i][s] * b[j][t];
            }
    return c;
}

std::vector<Complex> series_mul(const std::vector<Complex>& a, const std::vector<Complex>& b, int K)
{
    std::vector<Complex> c(K + 1, 0.0);
    for (int i = 0; i <= K && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= K && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Complex> series_inv(const std::vector<Complex>& a, int K)
{
    std::vector<Complex> b(K + 1, 0.0);
    b[0] = 1.0 / a[0];
    for (int k = 1; k <= K; ++k) {
        Complex s = 0;
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) s += a[j] * b[k - j];
        b[k] = -s / a[0];
    }
    return b;
}

// sin(pi (m + u)/c) in u through degree K, with exact zeros of sin(pi m/c)
std::vector<Complex> sin_shift(long m, long c, int K)
{
    long r = ((m % (2 * c)) + 2 * c) % (2 * c);
    double sa = (r % c == 0) ? 0.0 : std::sin(pi * r / c);
    double ca = (r % c == 0) ? (r == 0 ? 1.0 : -1.0) : std::cos(pi * r / c);
    std::vector<Complex> out(K + 1, 0.0);
    double bk = 1;  // (pi/c)^k / k!
    for (int k = 0; k <= K; ++k) {
        double sign = ((k / 2) % 2) ? -1.0 : 1.0;
        out[k] = sign * bk * (k % 2 ? ca : sa);
        bk *= (pi / c) / (k + 1);
    }
    return out;
}

}  // namespace

std::vector<long> SeifertData::q_for(Relation r) const
{
    if (r == relation) return q;
    std::vector<long> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) out[i] = p[i] - q[i];
    return out;
}

SeifertData make_seifert(std::vector<long> p, std::vector<long> q, Relation r)
{
    check_p_list(p);
    if (q.size() != p.size()) fail(ErrorCode::invalid_input, "need one q_i per p_i");
    SeifertData S;
    S.P = product(p);
    for (size_t i = 0; i < p.size(); ++i)
        if (q[i] <= 0 || q[i] >= p[i] || std::gcd(p[i], q[i]) != 1)
            fail(ErrorCode::invalid_input, "q_" + std::to_string(i + 1) + " must be coprime to p_" + std::to_string(i + 1) +
                                               " with 0 < q < p");
    // sum q_i P/p_i = +-1 mod P
    long s = 0;
    for (size_t i = 0; i < p.size(); ++i) s = (s + q[i] % S.P * (S.P / p[i])) % S.P;
    long want = r == Relation::plus ? 1 % S.P : S.P - 1;
    if (s != want)
        fail(ErrorCode::invalid_input, std::string("Seifert relation fails: P sum q_i/p_i is not ") +
                                           (r == Relation::plus ? "1" : "-1") + " mod P");
    S.p = std::move(p);
    S.q = std::move(q);
    S.relation = r;
    return S;
}

SeifertData make_seifert(std::vector<long> p, Relation r)
{
    check_p_list(p);
    long P = product(p);
    std::vector<long> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        long e = r == Relation::plus ? 1 : p[i] - 1;
        q[i] = e * inverse_mod((P / p[i]) % p[i], p[i]) % p[i];
    }
    return make_seifert(std::move(p), std::move(q), r);
}

Real dedekind_sum(long q, long p)
{
    if (q < 1) fail(ErrorCode::invalid_input, "Dedekind sum needs q >= 1");
    if (std::gcd(p, q) != 1) fail(ErrorCode::invalid_input, "Dedekind sum arguments must be coprime");
    const Real pi_r = boost::math::constants::pi<Real>();
    Real s = 0;
    for (long j = 1; j < q; ++j) {
        long jp = ((j * (p % q)) % q + q) % q;
        s += 1 / tan(pi_r * j / q) / tan(pi_r * jp / q);
    }
    return s / (4 * q);
}

Rational dedekind_sum_rational(long q, long p)
{
    Real scaled = dedekind_sum(q, p) * 6 * q;
    Real r = round(scaled);
    if (abs(scaled - r) > Real("1e-30")) fail(ErrorCode::internal, "Dedekind sum failed rational reconstruction");
    Rational out(Integer(r.convert_to<long>()), Integer(6 * q));
    out.canonicalize();
    return out;
}

Real phi_invariant(const SeifertData& S)
{
    auto q = S.q_for(Relation::plus);
    Real s = 0;
    for (int i = 0; i < S.n(); ++i) s += dedekind_sum(S.p[i], q[i]);
    return 3 - Real(1) / S.P + 12 * s;
}

Rational phi_rational(const SeifertData& S)
{
    auto q = S.q_for(Relation::plus);
    Rational s = 0;
    for (int i = 0; i < S.n(); ++i) s += dedekind_sum_rational(S.p[i], q[i]);
    Rational out = Rational(3) - Rational(1, S.P) + 12 * s;
    out.canonicalize();
    return out;
}

Rational default_delta(const SeifertData& S)
{
    Rational d = phi_rational(S) / 4;
    d.canonicalize();
    return d;
}

std::vector<long> negative_continued_fraction(long p, long q)
{
    if (q <= 0) fail(ErrorCode::invalid_input, "continued fraction needs q > 0");
    if (q > p || std::gcd(p, q) != 1) fail(ErrorCode::invalid_input, "continued fraction needs 0 < q <= p coprime");
    std::vector<long> k;
    while (q != 0) {
        long c = (p + q - 1) / q;
        k.push_back(c);
        long r = c * q - p;
        p = q;
        q = r;
    }
    return k;
}

Rational evaluate_continued_fraction(const std::vector<long>& k)
{
    if (k.empty()) fail(ErrorCode::invalid_input, "empty continued fraction");
    Rational v(k.back());
    for (size_t i = k.size() - 1; i-- > 0;) {
        v = Rational(k[i]) - 1 / v;
        v.canonicalize();
    }
    return v;
}

plumbing::PlumbingGraph seifert_plumbing(const SeifertData& S)
{
    auto q = S.q_for(Relation::minus);
    Rational e = Rational(1, S.P);
    for (int i = 0; i < S.n(); ++i) e += Rational(q[i], S.p[i]);
    e.canonicalize();
    if (e.get_den() != 1) fail(ErrorCode::internal, "central weight is not an integer");
    std::vector<long> w{-to_long(Integer(e.get_num()))};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < S.n(); ++i) {
        int prev = 0;
        for (long k : negative_continued_fraction(S.p[i], q[i])) {
            w.push_back(-k);
            int cur = static_cast<int>(w.size()) - 1;
            edges.emplace_back(prev, cur);
            prev = cur;
        }
    }
    return plumbing::make_graph(std::move(w), std::move(edges));
}

Integer GSeriesData::coefficient(long m) const
{
    if (m > mmax) fail(ErrorCode::truncation_mismatch, "chi_" + std::to_string(m) + " is beyond the computed window");
    auto it = chi.find(m);
    return it == chi.end() ? Integer(0) : it->second;
}

GSeriesData g_series(const std::vector<long>& p, long mmax)
{
    check_p_list(p);
    GSeriesData g;
    g.p = p;
    g.P = product(p);
    const int n = static_cast<int>(p.size());
    g.m0 = g.P * (n - 2);
    for (long x : p) g.m0 -= g.P / x;
    g.mmax = mmax;
    if (mmax < g.m0) return g;
    const long len = mmax - g.m0 + 1;
    // prod_i (z^{2P/p_i} - 1)
    std::vector<Integer> poly{1};
    for (long x : p) {
        long s = 2 * g.P / x;
        std::vector<Integer> next(poly.size() + s, Integer(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] -= poly[i];
            next[i + s] += poly[i];
        }
        poly = std::move(next);
    }
    std::vector<Integer> c(len, Integer(0));
    const Integer sign = n % 2 ? -1 : 1;
    for (long j = 0; 2 * g.P * j < len; ++j) {
        Integer b = binomial(j + n - 3, n - 3) * sign;
        for (size_t i = 0; i < poly.size() && 2 * g.P * j + static_cast<long>(i) < len; ++i)
            if (poly[i] != 0) c[2 * g.P * j + i] += b * poly[i];
    }
    for (long e = 0; e < len; ++e)
        if (c[e] != 0) g.chi[g.m0 + e] = c[e];
    return g;
}

Integer chi_closed_form(const std::vector<long>& p, long m)
{
    check_p_list(p);
    const int n = static_cast<int>(p.size());
    const long P = product(p);
    Integer total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // m - P(sum eps_i/p_i + n - 2) = 2P m'
        long rest = m - P * (n - 2);
        int sign = n % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i) {
            int eps = (mask >> i) & 1 ? -1 : 1;
            rest -= eps * (P / p[i]);
            sign *= eps;
        }
        if (rest < 0 || rest % (2 * P) != 0) continue;
        total += sign * binomial(rest / (2 * P) + n - 3, n - 3);
    }
    return total;
}

Complex g_function(const std::vector<long>& p, Complex z)
{
    const long P = product(p);
    const int n = static_cast<int>(p.size());
    Complex v = std::pow(std::pow(z, static_cast<double>(P)) - std::pow(z, -static_cast<double>(P)), 2 - n);
    for (long x : p) v *= std::pow(z, static_cast<double>(P / x)) - std::pow(z, -static_cast<double>(P / x));
    return v;
}

std::set<Rational> cs_set(const std::vector<long>& p)
{
    check_p_list(p);
    const long P = product(p);
    const int n = static_cast<int>(p.size());
    std::set<Rational> out;
    for (long m = 0; m < 2 * P; ++m) {
        int divides = 0;
        for (long x : p) divides += (m % x == 0);
        if (divides > n - 3) continue;
        out.insert(frac(ratio(-m * m, 4 * P)));
    }
    return out;
}

ZStarResidue z_star_polynomial(const SeifertData& S, long m)
{
    const int n = S.n();
    ZStarResidue r;
    r.m = m;
    r.g.assign(n - 1, 0.0);
    int zeros = 0;
    for (long x : S.p) zeros += (m % x == 0);
    r.pole_order = n - 2 - zeros;
    r.pole = r.pole_order > 0;
    if (!r.pole) return r;

    // residue = [u^{n-3}] N(u) E(u, tau) / (c S(u)^{n-2}), with (2i sin(pi u))^{n-2} = c u^{n-2} S(u)^{n-2}
    const int K = n - 3;
    std::vector<Complex> num{Complex(1)};
    for (long x : S.p) {
        auto s = sin_shift(m, x, K);
        for (auto& v : s) v *= Complex(0, 2);
        num = series_mul(num, s, K);
    }
    std::vector<Complex> sinc(K + 1, 0.0);
    double f = 1;
    for (int k = 0; 2 * k <= K; ++k) {
        sinc[2 * k] = (k % 2 ? -1.0 : 1.0) * std::pow(pi, 2 * k) / f;
        f *= (2 * k + 2) * (2 * k + 3);
    }
    auto inv = series_inv(sinc, K);
    std::vector<Complex> den{Complex(1)};
    for (int i = 0; i < n - 2; ++i) den = series_mul(den, inv, K);
    Complex c = std::pow(Complex(0, 2 * pi) * (m % 2 ? -1.0 : 1.0), n - 2);
    auto base = series_mul(num, den, K);

    // E = exp(i pi tau (2 m u + u^2)/(2P))
    Bi arg = bi_zero(K);
    const Complex w = Complex(0, pi) / (2.0 * S.P);
    if (K >= 1) arg[1][1] = w * (2.0 * m);
    if (K >= 2) arg[2][1] = w;
    Bi E = bi_zero(K), term = bi_zero(K);
    E[0][0] = term[0][0] = 1;
    for (int j = 1; j <= K; ++j) {
        term = bi_mul(term, arg, K);
        for (auto& row : term)
            for (auto& v : row) v /= j;
        for (int i = 0; i <= K; ++i)
            for (int t = 0; t <= K; ++t) E[i][t] += term[i][t];
    }
    for (int i = 0; i <= K; ++i)
        for (int t = 0; t <= K; ++t) r.g[t] += base[K - i] * E[i][t] / c;
    return r;
}

Complex bessel_k(Complex nu, Complex z, double rel_tol)
{
    if ((z * z).real() <= 0 || z.real() <= 0) fail(ErrorCode::domain, "K-Bessel integral needs Re(z^2) > 0");
    // K_nu(z) = int_0^infty exp(-z cosh w) cosh(nu w) dw, trapezoid rule on the half line
    const double a = z.real(), b = std::abs(nu.real());
    double W = 1;
    while (a * std::cosh(W) - b * W < 50 + std::log1p(std::abs(z)) + std::abs(std::log(a))) W += 0.5;
    auto f = [&](double w) { return std::exp(-z * std::cosh(w)) * std::cosh(nu * w); };
    Complex prev = 0;
    for (int N = 64; N <= (1 << 20); N *= 2) {
        const double h = W / N;
        Complex s = 0.5 * (f(0) + f(W));
        for (int i = 1; i < N; ++i) s += f(i * h);
        s *= h;
        if (N > 64 && std::abs(s - prev) <= rel_tol * std::abs(s)) return s;
        prev = s;
    }
    fail(ErrorCode::convergence, "K-Bessel quadrature did not converge");
}

namespace {

struct ChiCache {
    std::vector<long> p;
    std::mutex mutex;
    GSeriesData g;
    const GSeriesData& upto(long mmax)
    {
        if (g.mmax < mmax || g.p.empty()) g = g_series(p, std::max(mmax, 2 * std::max(g.mmax, 64L)));
        return g;
    }
};

}  // namespace

lfunc::LSeriesHandle seifert_l_function(const SeifertData& S, const Rational& delta, int order)
{
    const int n = S.n();
    const long P = S.P;
    lfunc::LSeriesHandle h;
    h.expansion.step = 2;
    h.expansion.order = order;
    // binom(j + n - 3, n - 3) as a polynomial in j
    std::vector<Rational> poly{1};
    for (int i = 1; i <= n - 3; ++i) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (size_t a = 0; a < poly.size(); ++a) {
            next[a] += poly[a] * Rational(i);
            next[a + 1] += poly[a];
        }
        for (auto& x : next) x /= i, x.canonicalize();
        poly = std::move(next);
    }
    asymptotics::WeightFunction W(1);
    for (unsigned k = 0; k < poly.size(); ++k)
        if (poly[k] != 0) W.add_term({poly[k], {k}, {Integer(0)}, {Integer(1)}});
    asymptotics::ExpPolynomialProbe probe(1, {{{2}, Rational(P)}}, 1e-15);
    std::map<int, Complex> total;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        long me = P * (n - 2);
        int sign = n % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i) {
            int eps = (mask >> i) & 1 ? -1 : 1;
            me += eps * (P / S.p[i]);
            sign *= eps;
        }
        Rational alpha(me, 2 * P);
        alpha.canonicalize();
        auto e = asymptotics::asymptotic_coefficients(W, {alpha}, probe, order);
        for (auto& [m, v] : e.coefficients) total[m] += double(sign) * v;
    }
    const double d = delta.get_d();
    for (auto& [m, v] : total) {
        double w = 1;
        for (int j = 0; m + 2 * j <= order; ++j) {
            h.expansion.coefficients[m + 2 * j] += v * w;
            w *= -d / (j + 1);
        }
    }

    auto cache = std::make_shared<ChiCache>();
    cache->p = S.p;
    const long m0 = g_series(S.p, 0).m0;
    auto term_b = [P, delta](long m) { return Rational(ratio(m * m, 4 * P) + delta).get_d(); };
    // split off b <= 0
    for (long m = m0; term_b(m) <= 0 || m <= 0; ++m) {
        double b = term_b(m);
        if (b > 0) continue;
        Integer c = cache->upto(m).coefficient(m);
        if (c == 0) continue;
        double a = c.get_d();
        if (b == 0) h.constant += a;
        else h.exceptional.push_back({a, b});
        double w = 1;
        for (int j = 0; 2 * j <= order; ++j) {
            h.expansion.coefficients[2 * j] -= a * w;
            w *= -b / (j + 1);
        }
    }
    h.terms = [cache, m0, term_b, P, d](double lo, double hi, const lfunc::TermSink& sink) {
        if (hi <= d) return;
        long mmax = static_cast<long>(std::sqrt(4.0 * P * (hi - d))) + 2;
        std::vector<lfunc::DirichletTerm> chunk;
        {
            std::lock_guard lock(cache->mutex);
            const auto& g = cache->upto(mmax);
            for (auto it = g.chi.lower_bound(m0); it != g.chi.end() && it->first <= mmax; ++it) {
                double b = term_b(it->first);
                if (b > lo && b <= hi && b > 0) chunk.push_back({it->second.get_d(), b});
            }
        }
        std::sort(chunk.begin(), chunk.end(), [](auto& x, auto& y) { return x.b < y.b; });
        for (auto& t : chunk) sink(t);
    };
    double decay = 0;
    h.terms(0.0, d + 1e6, [&](const lfunc::DirichletTerm& t) {
        if (decay == 0 || t.b < decay) decay = t.b;
    });
    h.decay = decay;
    h.abscissa = (n - 2) / 2.0;
    return h;
}

AlignmentReport exponent_alignment(const SeifertData& S, const Rational& delta, const Rational& emax)
{
    auto L = plumbing::linking_data(seifert_plumbing(S));
    auto classes = plumbing::spinc_classes(L);
    AlignmentReport r;
    auto z = gppv::zhat_series(L, classes[0], emax);
    for (auto& [ex, c] : z.terms) {
        Rational v = (ex + delta) * 4 * S.P;
        v.canonicalize();
        bool ok = v.get_den() == 1 && v >= 0;
        if (ok) {
            Integer root = sqrt(Integer(v.get_num()));
            ok = root * root == v.get_num();
        }
        if (!ok) {
            r.aligned = false;
            r.offending.push_back(ex);
        }
    }
    return r;
}

std::string FeqReport::to_json() const
{
    nlohmann::json j;
    auto c = [](Complex x) { return nlohmann::json::array({x.real(), x.imag()}); };
    j["s"] = c(s);
    j["delta"] = to_string(delta);
    j["lhs"] = c(lhs);
    j["rhs"] = c(rhs);
    j["residue_sum"] = c(residue_sum);
    j["ray_integral"] = c(ray_integral);
    j["difference"] = difference;
    j["terms_used"] = terms_used;
    j["tail_change"] = tail_change;
    j["eps_variation"] = eps_variation;
    j["diagnostics"] = diagnostics;
    return j.dump();
}

FeqReport functional_equation_check(const SeifertData& S, const Rational& delta, Complex s, const FeqOptions& opt)
{
    if (s.real() <= -1) fail(ErrorCode::domain, "functional equation check needs Re(s) > -1");
    if (delta <= 0) fail(ErrorCode::domain, "Delta must be positive");
    FeqReport rep;
    rep.s = s;
    rep.delta = delta;
    auto align = exponent_alignment(S, delta);
    if (!align.aligned)
        fail(ErrorCode::domain, "exponent alignment failed: q^Delta Zhat_0 has exponent " +
                                    to_string(align.offending.front() + delta) + " not of the form m^2/4P");

    const double P = static_cast<double>(S.P), D = delta.get_d();
    const int n = S.n();

    auto h = seifert_l_function(S, delta);
    Complex L = lfunc::mellin_oracle(h, s, 0, {opt.t0, 1e-11});
    rep.lhs = pi * lfunc::complex_gamma(s) * L;

    // residue sum, truncated once K has decayed below the tolerance
    const double rate = 2 * pi * std::sqrt(D / P);
    long max_m = opt.max_m > 0 ? opt.max_m : static_cast<long>(-std::log(opt.bessel_tol * 1e-3) / rate) + 4 * S.P / 30 + 10;
    auto residue_sum = [&](long lo, long hi) {
        Complex sum = 0;
        for (long m = lo; m <= hi; ++m) {
            auto r = z_star_polynomial(S, m);
            if (!r.pole) continue;
            for (int d = 0; d <= n - 2; ++d) {
                if (r.g[d] == Complex(0)) continue;
                Complex nu = s - double(d) - 0.5;
                Complex Cd = -2 * std::pow(pi, 1.5) * std::pow(Complex(0, 2 * pi), d + 1) / std::sqrt(P);
                sum += Cd * std::pow(pi / std::sqrt(P * D), nu) * r.g[d] * std::pow(double(m), nu) * bessel_k(nu, rate * m);
            }
        }
        return sum;
    };
    rep.residue_sum = residue_sum(1, max_m);
    rep.terms_used = max_m;
    if (opt.self_check) rep.tail_change = std::abs(residue_sum(max_m + 1, 2 * max_m));

    // ray integral along e^{-i eps} [0, infty)
    auto ray_integral = [&](double eps) {
        const Complex dir = std::exp(Complex(0, -eps));
        auto integrand = [&](double r) -> Complex {
            if (r == 0) return 0;
            Complex x = r * dir;
            Complex z = std::exp(Complex(0, -1) * x / std::sqrt(P));
            return bessel_k(s - 0.5, 2 * std::sqrt(D) * x) * g_function(S.p, z) * std::pow(x, s - 0.5) * dir;
        };
        const double R = 60 / (2 * std::sqrt(D) * std::cos(eps)) + 10;
        Complex ray = 0;
        for (double a = 0, b = 0.5; a < R; a = b, b *= 2) {
            auto q = integrate<Complex>(integrand, a, std::min(b, R), 1e-13, 1e-12);
            if (!q.converged) rep.diagnostics.push_back("ray quadrature did not converge on a panel");
            ray += q.value;
        }
        return 4 * std::sqrt(pi) * std::pow(Complex(D), -s / 2.0 + 0.25) * ray;
    };
    rep.ray_integral = ray_integral(opt.eps);
    if (opt.self_check)
        for (double e : {0.05, 0.1, 0.2})
            if (e != opt.eps) rep.eps_variation = std::max(rep.eps_variation, std::abs(ray_integral(e) - rep.ray_integral));
    rep.rhs = rep.residue_sum + rep.ray_integral;
    rep.difference = std::abs(rep.lhs - rep.rhs);
    return rep;
}

}  // namespace qtl::seifert
