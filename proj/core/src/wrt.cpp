#include "qtl/wrt/wrt.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace qtl::wrt {

using asymptotics::AsymptoticExpansion;
using lfunc::DirichletTerm;
using lfunc::LSeriesHandle;
using plumbing::LinkingData;
using plumbing::SpincClass;

namespace {

Rational bilinear(const RatMatrix& m, const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    Rational s = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j)
            if (b[j] != 0) s += Rational(a[i] * b[j]) * m(i, j);
    }
    return s;
}

void require_ambient(const LinkingData& L, const SpincClass& c)
{
    if (static_cast<int>(c.representative.size()) != L.size() ||
        plumbing::canonical_class(L, c.representative).key != c.key)
        fail(ErrorCode::invalid_input, "Spin^c class does not belong to this plumbing");
}

// l - r in 2B Z^V
bool same_class(const RatMatrix& binv, const std::vector<Integer>& l, const std::vector<Integer>& r)
{
    const int n = binv.rows();
    for (int i = 0; i < n; ++i) {
        Rational s = 0;
        for (int j = 0; j < n; ++j)
            if (l[j] != r[j]) s += binv(i, j) * Rational(l[j] - r[j]);
        s /= 2;
        if (s.get_den() != 1) return false;
    }
    return true;
}

// Vertex coefficient of degree d >= 3 on sigma * z, z = d - 2 mod 2, z >= d - 2, as a polynomial in z.
std::vector<Rational> vertex_polynomial(int d, int sigma)
{
    std::vector<Rational> p{gppv::f_vertex(d, sigma * (d - 2))};
    for (int j = 1; j <= d - 3; ++j) {
        // multiply by ((z - d + 2)/2 + j)/j
        Rational c0 = Rational(2 * j - d + 2, 2 * j), c1 = Rational(1, 2 * j);
        c0.canonicalize();
        c1.canonicalize();
        std::vector<Rational> q(p.size() + 1, Rational(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i] * c0;
            q[i + 1] += p[i] * c1;
        }
        p = std::move(q);
    }
    return p;
}

std::vector<long> vertex_support(int d)
{
    std::vector<long> out;
    for (long v = -2; v <= 2; ++v)
        if (gppv::f_vertex(d, v) != 0) out.push_back(v);
    return out;
}

// Visits every vector with entries drawn from ranges[i].
template <class T, class Fn>
void cartesian(const std::vector<std::vector<T>>& ranges, Fn&& fn)
{
    const size_t n = ranges.size();
    for (auto& r : ranges)
        if (r.empty()) return;
    std::vector<size_t> idx(n, 0);
    std::vector<T> v(n);
    for (;;) {
        for (size_t i = 0; i < n; ++i) v[i] = ranges[i][idx[i]];
        fn(v);
        size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] < ranges[i].size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

void add_scaled(std::map<int, Complex>& acc, const std::map<int, Complex>& s, Complex c, int shift = 0)
{
    for (auto& [m, v] : s) acc[m + shift] += c * v;
}

// (sum_m s_m u^m) exp(-c u^2), truncated at order
std::map<int, Complex> times_gaussian(const std::map<int, Complex>& s, const Rational& c, int order)
{
    std::map<int, Complex> out;
    const double cd = c.get_d();
    for (auto& [m, v] : s) {
        double w = 1;
        for (int j = 0; m + 2 * j <= order; ++j) {
            out[m + 2 * j] += v * w;
            w *= -cd / (j + 1);
        }
    }
    return out;
}

struct StreamCache {
    LinkingData L;
    SpincClass b;
    long k;
    std::mutex mutex;
    std::vector<DirichletTerm> terms;  // positive exponents, sorted
    double covered = -1;

    StreamCache(LinkingData l, SpincClass c, long level) : L(std::move(l)), b(std::move(c)), k(level) {}

    void extend(double hi)
    {
        if (hi <= covered) return;
        double target = std::max(hi, 2 * std::max(covered, 1.0));
        Rational emax(static_cast<long>(std::ceil(target)));
        std::vector<DirichletTerm> out;
        for (auto& t : gppv::enumerate_terms(L, b, emax))
            if (t.exponent > 0) out.push_back({t.coeff.get_d() * e(t.exponent / Rational(k)), t.exponent.get_d()});
        std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.b < y.b; });
        terms = std::move(out);
        covered = emax.get_d();
    }
};

}  // namespace

LinkingFormValue linking_form(const LinkingData& L, const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    if (static_cast<int>(a.size()) != L.size() || static_cast<int>(b.size()) != L.size())
        fail(ErrorCode::invalid_input, "vector length does not match the plumbing");
    return {frac(bilinear(L.B().inverse(), a, b))};
}

LinkingFormValue linking_form(const LinkingData& L, const SpincClass& a, const SpincClass& b)
{
    require_ambient(L, a);
    require_ambient(L, b);
    return linking_form(L, a.representative, b.representative);
}

AsymptoticExpansion radial_expansion(const LinkingData& L, const SpincClass& b, long k, int order)
{
    if (k < 1) fail(ErrorCode::domain, "level must be positive");
    require_ambient(L, b);
    const int n = L.size();
    const auto& deg = L.delta();
    const RatMatrix& binv = L.B().inverse();
    std::vector<int> fixed, free;
    for (int i = 0; i < n; ++i) (deg[i] <= 2 ? fixed : free).push_back(i);
    const int N = static_cast<int>(free.size());
    const int F = static_cast<int>(fixed.size());

    // E(l) = pref + l^T M l / 4 with M = -B^{-1}; split into free (y) and fixed (f) blocks
    RatMatrix A(N, N), G(N, F), H(F, F);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) A(i, j) = -binv(free[i], free[j]);
        for (int j = 0; j < F; ++j) G(i, j) = -binv(free[i], fixed[j]);
    }
    for (int i = 0; i < F; ++i)
        for (int j = 0; j < F; ++j) H(i, j) = -binv(fixed[i], fixed[j]);
    const RatMatrix Ainv = N ? inverse(A) : RatMatrix();
    const Rational pref = gppv::prefactor_exponent(L);
    const Integer K = 2 * Integer(k) * L.abs_det();

    std::vector<std::vector<long>> fixed_values;
    for (int i : fixed) fixed_values.push_back(vertex_support(deg[i]));

    std::vector<std::vector<int>> signs(N, std::vector<int>{1, -1});
    std::vector<std::vector<long>> residues(N);
    for (int i = 0; i < N; ++i)
        for (long r = 0; r < to_long(K); ++r)
            if ((r - deg[free[i]]) % 2 == 0) residues[i].push_back(r);

    std::map<int, Complex> total;
    cartesian(fixed_values, [&](const std::vector<long>& fv) {
        Rational cfix = 1;
        for (int j = 0; j < F; ++j) cfix *= gppv::f_vertex(deg[fixed[j]], fv[j]);
        if (cfix == 0) return;
        std::vector<Rational> fr(fv.begin(), fv.end());
        std::vector<Rational> g = G.apply(fr);
        std::vector<Rational> alpha = N ? Ainv.apply(g) : std::vector<Rational>{};
        Rational shift = quadratic_form(H, fr);
        for (int i = 0; i < N; ++i) shift -= g[i] * alpha[i];
        const Rational c = pref + shift / 4;

        std::vector<Integer> ell(n);
        for (int j = 0; j < F; ++j) ell[fixed[j]] = fv[j];
        if (N == 0) {
            if (!same_class(binv, ell, b.representative)) return;
            add_scaled(total, times_gaussian({{0, 1.0}}, c, order), cfix.get_d() * e(c / Rational(k)));
            return;
        }
        cartesian(signs, [&](const std::vector<int>& sigma) {
            asymptotics::ComplexWeightFunction W(N);
            std::vector<std::vector<Rational>> polys(N);
            for (int i = 0; i < N; ++i) {
                W.offset[i] = deg[free[i]] - 2;
                polys[i] = vertex_polynomial(deg[free[i]], sigma[i]);
            }
            cartesian(residues, [&](const std::vector<long>& r) {
                for (int i = 0; i < N; ++i) ell[free[i]] = sigma[i] * r[i];
                if (!same_class(binv, ell, b.representative)) return;
                Complex chi = cfix.get_d() * e(gppv::term_exponent(L, ell) / Rational(k));
                std::vector<std::vector<unsigned>> powers(N);
                for (int i = 0; i < N; ++i)
                    for (unsigned p = 0; p < polys[i].size(); ++p)
                        if (polys[i][p] != 0) powers[i].push_back(p);
                cartesian(powers, [&](const std::vector<unsigned>& p) {
                    Rational c = 1;
                    for (int i = 0; i < N; ++i) c *= polys[i][p[i]];
                    W.add_term({chi * c.get_d(), p, std::vector<Integer>(r.begin(), r.end()), std::vector<Integer>(N, K)});
                });
            });
            if (W.terms.empty()) return;
            asymptotics::Polynomial w;
            for (int i = 0; i < N; ++i)
                for (int j = i; j < N; ++j) {
                    MultiIndex m(N, 0);
                    ++m[i];
                    ++m[j];
                    Rational v = (i == j ? A(i, j) : 2 * A(i, j) * sigma[i] * sigma[j]) / 4;
                    if (v != 0) w[m] = v;
                }
            std::vector<Rational> a(N);
            for (int i = 0; i < N; ++i) a[i] = alpha[i] * sigma[i];
            asymptotics::ExpPolynomialProbe probe(N, w, 1e-15);
            auto s = asymptotics::asymptotic_coefficients(W, a, probe, order);
            add_scaled(total, times_gaussian(s.coefficients, c, order), 1.0);
        });
        for (int i = 0; i < N; ++i) ell[free[i]] = 0;
    });
    AsymptoticExpansion out;
    out.step = 2;
    out.order = order;
    for (auto& [m, v] : total)
        if (m <= order) out.coefficients[m] = v;
    return out;
}

LSeriesHandle gppv_l_function(const LinkingData& L, const SpincClass& b, long k, int order)
{
    LSeriesHandle h;
    h.expansion = radial_expansion(L, b, k, order);
    // split off the non-positive exponents and remove them from the expansion
    for (auto& t : gppv::enumerate_terms(L, b, Rational(0))) {
        Complex a = t.coeff.get_d() * e(t.exponent / Rational(k));
        if (t.exponent == 0) h.constant += a;
        else h.exceptional.push_back({a, t.exponent.get_d()});
        add_scaled(h.expansion.coefficients, times_gaussian({{0, 1.0}}, t.exponent, order), -a);
    }
    auto cache = std::make_shared<StreamCache>(L, b, k);
    h.terms = [cache](double lo, double hi, const lfunc::TermSink& sink) {
        std::vector<DirichletTerm> chunk;
        {
            std::lock_guard lock(cache->mutex);
            cache->extend(hi);
            auto it = std::upper_bound(cache->terms.begin(), cache->terms.end(), lo,
                                       [](double x, const DirichletTerm& t) { return x < t.b; });
            for (; it != cache->terms.end() && it->b <= hi; ++it) chunk.push_back(*it);
        }
        for (auto& t : chunk) sink(t);
    };

    bool finite = std::all_of(L.delta().begin(), L.delta().end(), [](int d) { return d <= 2; });
    if (finite) {
        // every term has |l_I| <= 2, so the exponents are bounded by the enumeration below
        Rational bound = gppv::prefactor_exponent(L);
        for (int i = 0; i < L.size(); ++i)
            for (int j = 0; j < L.size(); ++j) bound += abs(L.B().inverse()(i, j));
        std::vector<DirichletTerm> all;
        h.terms(0.0, std::max(1.0, bound.get_d()), [&](const DirichletTerm& t) { all.push_back(t); });
        h.decay = all.empty() ? 0.0 : all.front().b;
        h.max_b = all.empty() ? 0.0 : all.back().b;
        h.abscissa = -std::numeric_limits<double>::infinity();
    } else {
        for (double hi = 1;; hi *= 2) {
            double first = 0;
            h.terms(0.0, hi, [&](const DirichletTerm& t) {
                if (first == 0) first = t.b;
            });
            if (first > 0) {
                h.decay = first;
                break;
            }
            if (hi > 1e6) fail(ErrorCode::internal, "no positive exponent found in the coset");
        }
        h.abscissa = std::max(0.0, -static_cast<double>(h.expansion.lowest()) / 2);
    }
    return h;
}

LSeriesHandle merge_handles(const std::vector<std::pair<Complex, const LSeriesHandle*>>& parts)
{
    LSeriesHandle h;
    h.expansion.step = 2;
    bool all_finite = true;
    double max_b = 0, decay = 0, absc = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<Complex, lfunc::TermStream>> streams;
    bool first = true;
    for (auto& [c, p] : parts) {
        if (c == Complex(0)) continue;
        if (first) {
            h.expansion.step = p->expansion.step;
            h.expansion.order = p->expansion.order;
            first = false;
        }
        if (p->expansion.step != h.expansion.step) fail(ErrorCode::invalid_input, "components use different expansion steps");
        h.expansion.order = std::min(h.expansion.order, p->expansion.order);
        add_scaled(h.expansion.coefficients, p->expansion.coefficients, c);
        for (auto& t : p->exceptional) h.exceptional.push_back({c * t.a, t.b});
        h.constant += c * p->constant;
        if (p->max_b) max_b = std::max(max_b, *p->max_b);
        else all_finite = false;
        if (p->decay > 0) decay = decay > 0 ? std::min(decay, p->decay) : p->decay;
        absc = std::max(absc, lfunc::abscissa(*p));
        streams.emplace_back(c, p->terms);
        for (auto& w : p->warnings) h.warnings.push_back(w);
    }
    for (auto it = h.expansion.coefficients.begin(); it != h.expansion.coefficients.end();)
        it = it->first > h.expansion.order ? h.expansion.coefficients.erase(it) : std::next(it);
    h.decay = decay;
    if (all_finite) h.max_b = max_b;
    h.abscissa = absc;
    h.terms = [streams](double lo, double hi, const lfunc::TermSink& sink) {
        for (auto& [c, s] : streams) s(lo, hi, [&](const DirichletTerm& t) { sink({c * t.a, t.b}); });
    };
    return h;
}

CombinedLFunction combined_l(const LinkingData& L, long k, CoefficientRule rule, const std::map<int, Complex>& table,
                             int order)
{
    if (k < 1) fail(ErrorCode::domain, "level must be positive");
    auto classes = plumbing::spinc_classes(L);
    auto orbits = plumbing::pm_orbit_representatives(L, classes);
    std::vector<Complex> per_class(classes.size(), 0.0);
    if (rule == CoefficientRule::s_matrix) {
        const RatMatrix& binv = L.B().inverse();
        const double norm = 2 * std::sqrt(L.abs_det().get_d());
        auto H = L.homology_elements();
        for (size_t j = 0; j < classes.size(); ++j) {
            Complex s = 0;
            for (auto& a : H) s += e(-Rational(k) * bilinear(binv, a, a) - bilinear(binv, a, classes[j].representative));
            per_class[j] = s / norm;
        }
    } else {
        for (auto& [j, c] : table) {
            if (j < 0 || j >= static_cast<int>(classes.size()))
                fail(ErrorCode::invalid_input, "coefficient table refers to class " + std::to_string(j) + " but there are " +
                                                   std::to_string(classes.size()) + " classes");
            per_class[j] = c;
        }
    }
    CombinedLFunction out;
    out.k = k;
    std::vector<std::pair<Complex, const LSeriesHandle*>> parts;
    for (auto& o : orbits) {
        Complex c = 0;
        for (int j : o.members) c += per_class[j];
        const int idx = o.representative.index;
        out.coefficients[idx] = c;
        if (std::abs(c) > 1e-14) out.components.emplace(idx, gppv_l_function(L, classes[idx], k, order));
    }
    for (auto& [idx, h] : out.components) parts.emplace_back(out.coefficients[idx], &h);
    out.merged = merge_handles(parts);
    if (parts.empty()) out.merged.expansion.order = order;
    return out;
}

std::map<int, Complex> parse_coefficient_table(const std::string& json_text)
{
    std::map<int, Complex> out;
    try {
        auto j = nlohmann::json::parse(json_text);
        for (auto& row : j.at("coeffs")) {
            int b = row.at("b").get<int>();
            auto c = row.at("c");
            if (!c.is_array() || c.size() != 2) fail(ErrorCode::invalid_input, "coefficient must be [re, im]");
            if (out.count(b)) fail(ErrorCode::invalid_input, "duplicate class " + std::to_string(b) + " in table");
            out[b] = Complex(c[0].get<double>(), c[1].get<double>());
        }
    } catch (const nlohmann::json::exception& ex) {
        fail(ErrorCode::invalid_input, std::string("malformed coefficient table: ") + ex.what());
    }
    return out;
}

Complex wrt_from_combined(const CombinedLFunction& c)
{
    Complex d = e(Rational(1, 2 * c.k)) - e(Rational(-1, 2 * c.k));
    return lfunc::continuation_value(c.merged, 0).value / d;
}

Complex wrt_invariant(const LinkingData& L, long k, int order)
{
    return wrt_from_combined(combined_l(L, k, CoefficientRule::s_matrix, {}, order));
}

EntiretyReport entirety_report(const LSeriesHandle& h, int depth)
{
    EntiretyReport r;
    const int step = h.expansion.step;
    const int lo = std::min(h.expansion.lowest(), -step * 2);
    const int hi = std::min(step * depth - 1, h.expansion.order);
    for (int m = lo; m <= hi; ++m) {
        PoleCandidate c;
        c.s = -static_cast<double>(m) / step;
        if (m >= 0 && m % step == 0) {
            c.residue = lfunc::gamma_residue(h, m).value;
        } else {
            c.l_pole = true;
            c.residue = h.expansion.coefficient(m) / std::tgamma(c.s);
            r.max_l_residue = std::max(r.max_l_residue, std::abs(c.residue));
        }
        r.candidates.push_back(c);
    }
    return r;
}

std::string EntiretyReport::to_json() const
{
    nlohmann::json j;
    j["max_l_residue"] = max_l_residue;
    auto& arr = j["candidates"] = nlohmann::json::array();
    for (auto& c : candidates)
        arr.push_back({{"s", c.s}, {"residue", {c.residue.real(), c.residue.imag()}}, {"kind", c.l_pole ? "L" : "GammaL"}});
    return j.dump();
}

Complex radial_limit_oracle(const LinkingData& L, const SpincClass& b, long k, int jmin, int jmax, bool half_powers)
{
    if (jmin > jmax) fail(ErrorCode::invalid_input, "empty extrapolation range");
    const double tmin = std::ldexp(1.0, -jmax);
    Rational emax(static_cast<long>(std::ceil(40.0 / tmin)));
    auto z = gppv::zhat_series(L, b, emax);
    std::vector<double> u;
    std::vector<Complex> y;
    for (int j = jmin; j <= jmax; ++j) {
        double t = std::ldexp(1.0, -j);
        u.push_back(half_powers ? std::sqrt(t) : t);
        y.push_back(z.evaluate_radial(k, t));
    }
    // Neville at 0
    const size_t n = u.size();
    for (size_t m = 1; m < n; ++m)
        for (size_t i = 0; i + m < n; ++i) y[i] = (u[i + m] * y[i] - u[i] * y[i + 1]) / (u[i + m] - u[i]);
    return y[0];
}

}  // namespace qtl::wrt
