#include "qtl/lie/lie.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numbers>
#include <set>

#include "json.hpp"
#include "qtl/asymptotics/asymptotics.hpp"
#include "qtl/core/matrix.hpp"

namespace qtl::lie {

namespace {

constexpr double pi = std::numbers::pi;

long to_long(const Integer& x)
{
    if (!x.fits_slong_p()) fail(ErrorCode::domain, "integer does not fit in a machine word");
    return x.get_si();
}

// chi_m with a window that grows on demand
struct ChiTable {
    std::vector<long> p;
    seifert::GSeriesData g;

    const seifert::GSeriesData& upto(long mmax)
    {
        if (g.p.empty() || g.mmax < mmax) g = seifert::g_series(p, std::max(mmax, 2 * std::max(g.mmax, 256L)));
        return g;
    }
};

struct Lattice {
    int N = 0;
    long P = 1;
    std::vector<std::vector<long>> gram;  // <alpha_a, alpha_b>
    std::vector<long> height;             // <alpha_a, rho'> for the chosen positive system

    // |sum m_a alpha_a|^2 / 8P
    Rational Q(const std::vector<long>& m) const
    {
        Integer s = 0;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) s += Integer(m[a]) * m[b] * gram[a][b];
        return ratio(s, 8 * P);
    }
};

Lattice make_lattice(const RootSystemData& R, long P, const std::vector<std::vector<long>>& roots)
{
    Lattice L;
    L.N = static_cast<int>(roots.size());
    L.P = P;
    L.gram.assign(L.N, std::vector<long>(L.N));
    for (int a = 0; a < L.N; ++a)
        for (int b = 0; b < L.N; ++b) L.gram[a][b] = R.inner(roots[a], roots[b]);
    // rho' = half sum of the given system; 2<alpha, rho'> must be positive on it
    for (int a = 0; a < L.N; ++a) {
        long h = 0;
        for (int b = 0; b < L.N; ++b) h += L.gram[a][b];
        if (h <= 0) {
            std::string dir;
            for (size_t i = 0; i < roots[a].size(); ++i) dir += (i ? "," : "") + std::to_string(roots[a][i]);
            fail(ErrorCode::enumeration, "positive system has no strictly positive functional; enumeration is unbounded along (" +
                                        dir + ")");
        }
        L.height.push_back(h);  // 2 <alpha, rho'>
    }
    return L;
}

// Visits every m in Z^N, m_a >= m0 with chi_{m_a} != 0 and Q(m) <= qmax.
void enumerate_block(const Lattice& L, ChiTable& chi, long m0, const Rational& qmax,
                     const std::function<void(const std::vector<long>&, const Rational& q, const Integer& c)>& visit)
{
    if (qmax < 0) return;
    // |<v, 2 rho'>| <= |v| |2 rho'| with |v|^2 <= 8P qmax and |2 rho'|^2 = sum_a height_a
    long hsum = 0;
    for (long h : L.height) hsum += h;
    const double H = std::sqrt(8.0 * L.P * qmax.get_d() * hsum) + 1;
    std::vector<long> upper(L.N);
    long top = 0;
    for (int a = 0; a < L.N; ++a) {
        double u = (H - double(m0) * (hsum - L.height[a])) / L.height[a];
        upper[a] = static_cast<long>(std::floor(u)) + 1;
        top = std::max(top, upper[a]);
    }
    const auto& g = chi.upto(top);
    std::vector<std::vector<std::pair<long, Integer>>> support(L.N);
    for (int a = 0; a < L.N; ++a)
        for (auto it = g.chi.lower_bound(m0); it != g.chi.end() && it->first <= upper[a]; ++it)
            support[a].emplace_back(it->first, it->second);
    std::vector<long> rest(L.N + 1, 0);
    for (int a = L.N - 1; a >= 0; --a) rest[a] = rest[a + 1] + L.height[a];
    std::vector<long> m(L.N);
    std::function<void(int, double, const Integer&)> rec = [&](int a, double partial, const Integer& c) {
        if (a == L.N) {
            Rational q = L.Q(m);
            if (q <= qmax) visit(m, q, c);
            return;
        }
        for (auto& [v, x] : support[a]) {
            double next = partial + double(v) * L.height[a];
            if (next + double(m0) * rest[a + 1] > H) break;
            m[a] = v;
            rec(a + 1, next, c * x);
        }
    };
    rec(0, 0.0, Integer(1));
}

Rational frac_of(const Rational& x)
{
    Rational f = frac(x);
    f.canonicalize();
    return f;
}

// binom(y + n - 3, n - 3) as a polynomial in y
std::vector<Rational> binomial_polynomial(int n)
{
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
    return poly;
}

long weyl_order(char type, int rank)
{
    if (type == 'A') {
        long f = 1;
        for (int i = 2; i <= rank + 1; ++i) f *= i;
        return f;
    }
    long f = 1;
    for (int i = 2; i <= rank; ++i) f *= i;
    return f << (rank - 1);
}

}  // namespace

std::string RootSystemData::name() const { return std::string(1, type) + std::to_string(rank); }

Rational RootSystemData::inner(const std::vector<Rational>& x, const std::vector<Rational>& y) const
{
    Rational s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (cartan[i][j]) s += x[i] * y[j] * cartan[i][j];
    s.canonicalize();
    return s;
}

long RootSystemData::inner(const std::vector<long>& x, const std::vector<long>& y) const
{
    long s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) s += x[i] * y[j] * cartan[i][j];
    return s;
}

Rational RootSystemData::rho_norm2() const { return inner(rho, rho); }

long RootSystemData::height(int root) const
{
    long h = 0;
    for (long c : positive_roots[root]) h += c;
    return h;
}

RootSystemData root_system(char type, int rank)
{
    RootSystemData R;
    R.type = type;
    R.rank = rank;
    const bool ok = (type == 'A' && rank >= 1 && rank <= 3) || (type == 'D' && rank == 4);
    if (!ok) fail(ErrorCode::unsupported, std::string("unsupported root system ") + type + std::to_string(rank));
    R.cartan.assign(rank, std::vector<long>(rank, 0));
    for (int i = 0; i < rank; ++i) R.cartan[i][i] = 2;
    std::vector<std::pair<int, int>> edges;
    if (type == 'A')
        for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
    else
        edges = {{0, 1}, {1, 2}, {1, 3}};
    for (auto [i, j] : edges) R.cartan[i][j] = R.cartan[j][i] = -1;

    // beta + alpha_i is a root iff <beta, alpha_i> = -1 (simply laced)
    std::set<std::vector<long>> roots;
    std::vector<std::vector<long>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<long> e(rank, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto b = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            long ip = 0;
            for (int j = 0; j < rank; ++j) ip += b[j] * R.cartan[j][i];
            if (ip != -1) continue;
            auto c = b;
            ++c[i];
            if (roots.insert(c).second) queue.push_back(c);
        }
    }
    R.positive_roots.assign(roots.begin(), roots.end());
    std::stable_sort(R.positive_roots.begin(), R.positive_roots.end(), [](auto& x, auto& y) {
        long hx = 0, hy = 0;
        for (long v : x) hx += v;
        for (long v : y) hy += v;
        return hx != hy ? hx < hy : x > y;
    });

    IntMatrix C(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) C(i, j) = R.cartan[i][j];
    R.index_xy = to_long(determinant(C));
    auto Ci = inverse(C);
    R.fundamental_weights.assign(rank, std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) R.fundamental_weights[i][j] = Ci(i, j);
    R.rho.assign(rank, Rational(0));
    for (auto& a : R.positive_roots)
        for (int i = 0; i < rank; ++i) R.rho[i] += Rational(a[i], 2);
    for (auto& x : R.rho) x.canonicalize();
    std::vector<Rational> wsum(rank, Rational(0));
    for (auto& w : R.fundamental_weights)
        for (int i = 0; i < rank; ++i) wsum[i] += w[i];
    for (auto& x : wsum) x.canonicalize();
    if (wsum != R.rho) fail(ErrorCode::internal, "rho differs from the sum of fundamental weights");
    R.weyl_order = weyl_order(type, rank);
    R.dim_g = rank + 2 * R.num_positive();
    return R;
}

RootSystemData root_system(const std::string& name)
{
    if (name.size() != 2 || !std::isdigit(static_cast<unsigned char>(name[1])))
        fail(ErrorCode::invalid_input, "root system name must look like A2 or D4");
    return root_system(static_cast<char>(std::toupper(static_cast<unsigned char>(name[0]))), name[1] - '0');
}

std::vector<std::vector<long>> reflected_positive_roots(const RootSystemData& R, int i)
{
    if (i < 0 || i >= R.rank) fail(ErrorCode::invalid_input, "simple root index out of range");
    std::vector<std::vector<long>> out;
    for (auto& a : R.positive_roots) {
        // s_i(a) = a - <a, alpha_i> alpha_i
        long ip = 0;
        for (int j = 0; j < R.rank; ++j) ip += a[j] * R.cartan[j][i];
        auto b = a;
        b[i] -= ip;
        out.push_back(b);
    }
    return out;
}

Rational block_shift(const seifert::SeifertData& S, const RootSystemData& R)
{
    Rational c = Rational(R.dim_g) * seifert::phi_rational(S) * R.rho_norm2() / 2;
    c.canonicalize();
    return c;
}

LieBlockSeries homological_block(const seifert::SeifertData& S, const RootSystemData& R, const Rational& emax,
                                 const std::optional<std::vector<std::vector<long>>>& positive_roots)
{
    const auto& roots = positive_roots ? *positive_roots : R.positive_roots;
    if (static_cast<int>(roots.size()) != R.num_positive()) fail(ErrorCode::invalid_input, "wrong number of positive roots");
    LieBlockSeries out;
    out.seifert = S;
    out.roots = R;
    const Rational shift = block_shift(S, R);
    out.series.prefactor_exponent = -shift;
    out.series.emax = emax;
    auto L = make_lattice(R, S.P, roots);
    ChiTable chi{S.p, {}};
    const long m0 = seifert::g_series(S.p, 0).m0;
    enumerate_block(L, chi, m0, emax + shift, [&](const std::vector<long>&, const Rational& q, const Integer& c) {
        out.series.add(q - shift, Rational(c));
    });
    if (out.series.terms.empty()) out.series.warnings.push_back("window below the lowest exponent; series is empty");
    return out;
}

namespace {

struct TermCache {
    Lattice lattice;
    ChiTable chi;
    long m0 = 0;
    long k = 1;
    Rational shift;
    std::mutex mutex;
    double covered = -1;
    std::vector<lfunc::DirichletTerm> terms;  // b > 0, sorted

    void ensure(double hi)
    {
        if (hi <= covered) return;
        double target = std::max(hi, 2 * std::max(covered, 1.0));
        std::vector<lfunc::DirichletTerm> out;
        enumerate_block(lattice, chi, m0, shift + Rational(static_cast<long>(std::ceil(target)) + 1),
                        [&](const std::vector<long>&, const Rational& q, const Integer& c) {
                            Rational b = q - shift;
                            if (b <= 0) return;
                            out.push_back({c.get_d() * e(frac_of(b / k)), b.get_d()});
                        });
        std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.b < y.b; });
        terms = std::move(out);
        covered = target;
    }
};

}  // namespace

lfunc::LSeriesHandle lie_l_function(const seifert::SeifertData& S, const RootSystemData& R, long k, int order)
{
    if (k < 1) fail(ErrorCode::invalid_input, "level k must be positive");
    const int N = R.num_positive();
    const int n = S.n();
    const long P = S.P;
    const Rational shift = block_shift(S, R);
    auto L = make_lattice(R, P, R.positive_roots);
    const long m0 = seifert::g_series(S.p, 0).m0;

    lfunc::LSeriesHandle h;
    h.expansion.step = 2;
    h.expansion.order = order;

    if (N <= 3) {
        // m_a = me_a + 2P y_a with me_a one of the 2^n exponents and y_a >= 0
        std::vector<std::pair<long, int>> heads;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            long me = P * (n - 2);
            int sign = n % 2 ? -1 : 1;
            for (int i = 0; i < n; ++i) {
                int eps = (mask >> i) & 1 ? -1 : 1;
                me += eps * (P / S.p[i]);
                sign *= eps;
            }
            heads.emplace_back(me, sign);
        }
        auto poly = binomial_polynomial(n);
        asymptotics::Polynomial w;
        for (int a = 0; a < N; ++a)
            for (int b = a; b < N; ++b) {
                MultiIndex idx(N, 0);
                ++idx[a];
                ++idx[b];
                Rational c = a == b ? Rational(P) : Rational(P * L.gram[a][b]);
                if (L.gram[a][b] != 0) w[idx] = c;
            }
        asymptotics::ExpPolynomialProbe probe(N, w, 1e-15);
        const long K = 2 * k;
        std::map<int, Complex> total;
        std::vector<int> choice(N, 0);
        for (;;) {
            std::vector<long> me(N);
            int sign = 1;
            std::vector<Rational> alpha(N);
            for (int a = 0; a < N; ++a) {
                me[a] = heads[choice[a]].first;
                sign *= heads[choice[a]].second;
                alpha[a] = ratio(me[a], 2 * P);
            }
            asymptotics::BasicWeightFunction<Complex> W(N);
            std::vector<long> r(N, 0), m(N);
            for (;;) {
                for (int a = 0; a < N; ++a) m[a] = me[a] + 2 * P * r[a];
                Complex tw = double(sign) * e(frac_of(L.Q(m) / k));
                // expand prod_a poly(y_a)
                std::vector<unsigned> pw(N, 0);
                std::function<void(int, Rational)> expand = [&](int a, Rational c) {
                    if (a == N) {
                        std::vector<Integer> res(r.begin(), r.end()), mod(N, Integer(K));
                        W.add_term({tw * c.get_d(), pw, res, mod});
                        return;
                    }
                    for (unsigned d = 0; d < poly.size(); ++d) {
                        if (poly[d] == 0) continue;
                        pw[a] = d;
                        expand(a + 1, c * poly[d]);
                    }
                };
                expand(0, Rational(1));
                int a = N - 1;
                while (a >= 0 && ++r[a] == K) r[a--] = 0;
                if (a < 0) break;
            }
            auto ex = asymptotics::asymptotic_coefficients(W, alpha, probe, order);
            for (auto& [idx, v] : ex.coefficients) total[idx] += v;
            int a = N - 1;
            while (a >= 0 && ++choice[a] == static_cast<int>(heads.size())) choice[a--] = 0;
            if (a < 0) break;
        }
        // times zeta_k^{-shift} e^{shift t}
        const Complex rot = e(frac_of(-shift / k));
        const double c = shift.get_d();
        for (auto& [idx, v] : total) {
            double f = 1;
            for (int j = 0; idx + 2 * j <= order; ++j) {
                h.expansion.coefficients[idx + 2 * j] += rot * v * f;
                f *= c / (j + 1);
            }
        }
    } else {
        h.warnings.push_back("asymptotic expansion not built for more than three positive roots");
    }

    // split off b <= 0
    ChiTable chi{S.p, {}};
    enumerate_block(L, chi, m0, shift, [&](const std::vector<long>&, const Rational& q, const Integer& c) {
        Rational b = q - shift;
        Complex a = c.get_d() * e(frac_of(b / k));
        if (b == 0) h.constant += a;
        else h.exceptional.push_back({a, b.get_d()});
        if (N > 3) return;
        double f = 1;
        for (int j = 0; 2 * j <= order; ++j) {
            h.expansion.coefficients[2 * j] -= a * f;
            f *= -b.get_d() / (j + 1);
        }
    });

    auto cache = std::make_shared<TermCache>();
    cache->lattice = L;
    cache->chi.p = S.p;
    cache->m0 = m0;
    cache->k = k;
    cache->shift = shift;
    h.terms = [cache](double lo, double hi, const lfunc::TermSink& sink) {
        std::vector<lfunc::DirichletTerm> chunk;
        {
            std::lock_guard lock(cache->mutex);
            cache->ensure(hi);
            auto it = std::upper_bound(cache->terms.begin(), cache->terms.end(), lo,
                                       [](double x, const lfunc::DirichletTerm& t) { return x < t.b; });
            for (; it != cache->terms.end() && it->b <= hi; ++it) chunk.push_back(*it);
        }
        for (auto& t : chunk) sink(t);
    };
    double decay = 0;
    for (double hi = 1; decay == 0 && hi < 1e6; hi *= 4)
        h.terms(0.0, hi, [&](const lfunc::DirichletTerm& t) {
            if (decay == 0 || t.b < decay) decay = t.b;
        });
    h.decay = decay;
    h.abscissa = N * (n - 2) / 2.0;
    return h;
}

Complex radial_limit_oracle(const lfunc::LSeriesHandle& h, int jmin, int jmax, bool half_powers)
{
    if (jmax <= jmin) fail(ErrorCode::invalid_input, "need jmax > jmin");
    std::vector<double> u;
    std::vector<Complex> v;
    for (int j = jmin; j <= jmax; ++j) {
        double t = std::ldexp(1.0, -j);
        Complex s = lfunc::phi(h, t, 1e-17) + h.constant;
        for (auto& x : h.exceptional) s += x.a * std::exp(-x.b * t);
        u.push_back(half_powers ? std::sqrt(t) : t);
        v.push_back(s);
    }
    // Neville at 0
    const size_t n = u.size();
    for (size_t m = 1; m < n; ++m)
        for (size_t i = 0; i + m < n; ++i) v[i] = (u[i + m] * v[i] - u[i] * v[i + 1]) / (u[i + m] - u[i]);
    return v[0];
}

std::string FiniteSumReport::to_json() const
{
    nlohmann::json j;
    j["value"] = {value.real(), value.imag()};
    j["cosets"] = cosets;
    j["excluded"] = excluded;
    j["filter"] = filter == MFilter::some_root ? "some_root" : "every_root";
    return j.dump();
}

namespace {

// Summand data shared by the finite sum and its single-term entry point.
struct FiniteSumContext {
    const seifert::SeifertData& S;
    const RootSystemData& R;
    long k;
    long M;                                // 2kP: every fractional power is w^j, w = e(1/M)
    long den;                              // [X : Y]
    std::vector<std::vector<long>> cinv;   // den * <omega_i, omega_j>
    std::vector<Complex> w;

    FiniteSumContext(const seifert::SeifertData& S_, const RootSystemData& R_, long k_)
        : S(S_), R(R_), k(k_), M(2 * k_ * S_.P), den(R_.index_xy)
    {
        const int r = R.rank;
        cinv.assign(r, std::vector<long>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Rational x = R.fundamental_weights[i][j] * den;
                x.canonicalize();
                cinv[i][j] = to_long(Integer(x.get_num()));
            }
        w.resize(M);
        for (long j = 0; j < M; ++j) w[j] = std::polar(1.0, 2 * pi * double(j) / double(M));
    }

    Complex sine(long j) const  // w^j - w^{-j}
    {
        j %= M;
        if (j < 0) j += M;
        return w[j] - w[(M - j) % M];
    }

    // G(zeta_k^x) with q^{1/2p_i} = w^{x P/p_i}
    Complex G(long x) const
    {
        const long P = S.P;
        Complex top = 1;
        for (long p : S.p) top *= sine(x * (P / p));
        Complex base = sine(x * P);
        if (std::abs(base) < 1e-12 && S.n() > 2)
            fail(ErrorCode::internal, "G evaluated at a pole; the exclusion set missed it");
        return top * std::pow(base, 2 - S.n());
    }

    std::vector<long> pairings(const std::vector<long>& x) const
    {
        std::vector<long> ip;
        for (auto& a : R.positive_roots) {
            long v = 0;
            for (int i = 0; i < R.rank; ++i) v += a[i] * x[i];
            ip.push_back(v);
        }
        return ip;
    }

    // e(-|lambda|^2/2Pk) prod_alpha G(zeta_k^{<lambda, alpha>})
    Complex term(const std::vector<long>& x, const std::vector<long>& ip) const
    {
        long num = 0;
        for (int i = 0; i < R.rank; ++i)
            for (int j = 0; j < R.rank; ++j) num += x[i] * cinv[i][j] * x[j];
        Complex t = e(frac_of(ratio(-num, 2 * S.P * k * den)));
        for (long v : ip) t *= G(v);
        return t;
    }
};

}  // namespace

Complex finite_sum_term(const seifert::SeifertData& S, const RootSystemData& R, long k, const std::vector<long>& lambda)
{
    if (static_cast<int>(lambda.size()) != R.rank) fail(ErrorCode::invalid_input, "weight has the wrong rank");
    FiniteSumContext ctx(S, R, k);
    return ctx.term(lambda, ctx.pairings(lambda));
}

FiniteSumReport radial_limit_finite_sum(const seifert::SeifertData& S, const RootSystemData& R, long k, MFilter filter)
{
    if (k < 1) fail(ErrorCode::invalid_input, "level k must be positive");
    const int r = R.rank;
    const long P = S.P;
    // lambda = sum x_i omega_i; X / kPY = Z^r / (kP C) Z^r through the Smith form U A V = D
    IntMatrix A(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) A(i, j) = Integer(k * P * R.cartan[i][j]);
    auto sf = smith_normal_form(A);
    auto Uinv = inverse(sf.U);
    std::vector<long> d(r);
    for (int i = 0; i < r; ++i) d[i] = to_long(abs(sf.D(i, i)));
    std::vector<std::vector<long>> Ui(r, std::vector<long>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rational x = Uinv(i, j);
            x.canonicalize();
            if (x.get_den() != 1) fail(ErrorCode::internal, "Smith transform is not unimodular");
            Ui[i][j] = to_long(Integer(x.get_num()));
        }
    FiniteSumContext ctx(S, R, k);

    FiniteSumReport rep;
    rep.filter = filter;
    std::vector<long> y(r, 0), x(r);
    Complex sum = 0;
    for (;;) {
        for (int i = 0; i < r; ++i) {
            long v = 0;
            for (int j = 0; j < r; ++j) v += Ui[i][j] * y[j];
            x[i] = v;
        }
        ++rep.cosets;
        auto ip = ctx.pairings(x);
        int hits = 0;
        for (long v : ip) hits += (v % k == 0);
        const bool drop = filter == MFilter::some_root ? hits > 0 : hits == R.num_positive();
        if (drop) ++rep.excluded;
        else sum += ctx.term(x, ip);
        int i = r - 1;
        while (i >= 0 && ++y[i] == d[i]) y[i--] = 0;
        if (i < 0) break;
    }
    const Complex zeta8 = std::polar(1.0, pi / 4);
    Complex pref = e(frac_of(-block_shift(S, R) / k)) * std::pow(zeta8 / std::sqrt(double(k)), r) /
                   std::sqrt(double(R.index_xy)) / std::pow(double(P), r / 2.0);
    rep.value = pref * sum;
    return rep;
}

Complex wrt_g(const seifert::SeifertData& S, const RootSystemData& R, long k, LimitPath path)
{
    if (R.type != 'A' && R.type != 'D' && R.type != 'E')
        fail(ErrorCode::domain, "the WRT formula is stated for simply-laced types only");
    Complex lim;
    if (path == LimitPath::finite_sum) lim = radial_limit_finite_sum(S, R, k).value;
    else {
        if (R.num_positive() > 3) fail(ErrorCode::unsupported, "the L-function path needs at most three positive roots");
        lim = lfunc::continuation_value(lie_l_function(S, R, k, R.num_positive() > 1 ? 0 : 6), 0).value;
    }
    const Complex zeta8 = std::polar(1.0, pi / 4);
    const double sign = R.num_positive() % 2 ? -1.0 : 1.0;
    Complex pref = sign * std::sqrt(double(R.index_xy)) * std::pow(zeta8, R.dim_g) / double(R.weyl_order) *
                   std::pow(std::sqrt(double(k)) / zeta8, R.rank);
    return pref * lim;
}

}  // namespace qtl::lie

namespace qtl::lie {

Complex su2_bridge(const seifert::SeifertData& S, long k)
{
    const double s00 = std::sqrt(2.0 / k) * std::sin(pi / k);
    return 2.0 * k * s00 * e(frac_of(-seifert::phi_rational(S) / (2 * k)));
}

}  // namespace qtl::lie
