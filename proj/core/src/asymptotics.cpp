#include "qtl/asymptotics/asymptotics.hpp"

#include <cmath>
#include <sstream>
#include <limits>
#include <tuple>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "qtl/core/polynomials.hpp"
#include "qtl/core/quadrature.hpp"

namespace qtl::asymptotics {

double evaluate(const Polynomial& w, const std::vector<double>& x)
{
    double s = 0;
    for (auto& [e, c] : w) {
        double term = c.get_d();
        for (size_t i = 0; i < e.size(); ++i) term *= std::pow(x[i], e[i]);
        s += term;
    }
    return s;
}

// ---------------------------------------------------------------- probes

namespace {

template <class R>
R to_scalar(const Rational& r)
{
    if constexpr (std::is_same_v<R, Real>) return to_real(r);
    else return r.get_d();
}

// Integrand of a mixed derivative: the axes in `integrated` sit at u, the others are
// differentiated at 0. exp(-w(u_I, y_J)) = exp(-w(u_I, 0)) exp(-P(y_J)) and we take
// m_J! [y^{m_J}] of the second factor, times the antiderivative kernels
// (-1)^r u^{r-1}/(r-1)! on the integrated axes.
template <class R>
R mixed_value(const Polynomial& w, int n, const MultiIndex& m, const std::vector<R>& u, const std::vector<int>& integrated)
{
    using std::exp;
    using std::pow;
    std::vector<int> free_axes;
    for (int i = 0; i < n; ++i)
        if (m[i] >= 0) free_axes.push_back(i);
    const int nj = static_cast<int>(free_axes.size());
    MultiIndex mj(nj);
    for (int a = 0; a < nj; ++a) mj[a] = m[free_axes[a]];

    R base = 0;
    TruncatedLaurent<R> p(MultiIndex(nj, 0), mj);
    for (auto& [e, c] : w) {
        R v = to_scalar<R>(c);
        for (size_t a = 0; a < integrated.size(); ++a) v *= pow(u[a], e[integrated[a]]);
        MultiIndex ej(nj);
        bool pure = true;
        for (int a = 0; a < nj; ++a) {
            ej[a] = e[free_axes[a]];
            if (ej[a] > 0) pure = false;
        }
        if (pure) base += v;
        else if (p.in_box(ej)) p.at(ej) -= v;
    }
    R g = exp(-base);
    if (nj > 0) {
        R coef = series_exp(p, R(1)).coeff(mj);
        for (int x : mj) coef *= to_scalar<R>(Rational(factorial(x)));
        g *= coef;
    }
    for (size_t a = 0; a < integrated.size(); ++a) {
        int r = -m[integrated[a]];
        g *= pow(u[a], r - 1) / to_scalar<R>(Rational(factorial(r - 1)));
        if (r % 2) g = -g;
    }
    return g;
}

std::vector<int> negative_axes(const MultiIndex& m)
{
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
        if (m[i] < 0) out.push_back(i);
    return out;
}

}  // namespace

ExpPolynomialProbe::ExpPolynomialProbe(int n, Polynomial w, double abs_tol) : n_(n), w_(std::move(w)), tol_(abs_tol)
{
    for (auto& [e, c] : w_) {
        if (static_cast<int>(e.size()) != n_) fail(ErrorCode::invalid_input, "polynomial exponent has the wrong arity");
        for (int x : e)
            if (x < 0) fail(ErrorCode::invalid_input, "polynomial exponents must be non-negative");
    }
}

double ExpPolynomialProbe::value(const std::vector<double>& x) const { return std::exp(-evaluate(w_, x)); }

bool ExpPolynomialProbe::constant_term() const
{
    for (auto& [e, c] : w_) {
        bool zero = true;
        for (int x : e) zero = zero && x == 0;
        if (zero && c != 0) return true;
    }
    return false;
}

Rational ExpPolynomialProbe::exact_derivative(const MultiIndex& m) const
{
    if (static_cast<int>(m.size()) != n_) fail(ErrorCode::invalid_input, "multi-index has the wrong arity");
    if (!negative_axes(m).empty()) fail(ErrorCode::domain, "antiderivatives have no exact form here");
    if (constant_term()) fail(ErrorCode::domain, "exact derivatives need w(0) = 0");
    TruncatedLaurent<Rational> s(MultiIndex(n_, 0), m);
    for (auto& [e, c] : w_)
        if (s.in_box(e) && e != MultiIndex(n_, 0)) s.at(e) -= c;
    Rational v = series_exp(s).coeff(m);
    for (int x : m) v *= Rational(factorial(x));
    return v;
}

double ExpPolynomialProbe::derivative(const MultiIndex& m) const
{
    if (static_cast<int>(m.size()) != n_) fail(ErrorCode::invalid_input, "multi-index has the wrong arity");
    auto integrated = negative_axes(m);
    if (integrated.empty())
        return constant_term() ? mixed_value<double>(w_, n_, m, {}, {}) : exact_derivative(m).get_d();
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second.first;
    }
    const int depth = static_cast<int>(integrated.size());
    std::vector<double> u(depth, 0.0);
    double total_error = 0;
    std::function<double(int)> nest = [&](int level) -> double {
        auto r = integrate_to_infinity<double>(
            [&](double x) {
                u[level] = x;
                return level + 1 == depth ? mixed_value<double>(w_, n_, m, u, integrated) : nest(level + 1);
            },
            0.0, tol_ / depth, 1e-14);
        if (level == 0) total_error = r.error;
        return r.value;
    };
    double v = nest(0);
    std::lock_guard lock(mutex_);
    cache_[m] = {v, total_error};
    return v;
}

Real ExpPolynomialProbe::derivative_hp(const MultiIndex& m) const
{
    if (static_cast<int>(m.size()) != n_) fail(ErrorCode::invalid_input, "multi-index has the wrong arity");
    auto integrated = negative_axes(m);
    if (integrated.empty())
        return constant_term() ? mixed_value<Real>(w_, n_, m, {}, {}) : to_real(exact_derivative(m));
    {
        std::lock_guard lock(mutex_);
        auto it = cache_hp_.find(m);
        if (it != cache_hp_.end()) return it->second;
    }
    const int depth = static_cast<int>(integrated.size());
    std::vector<Real> u(depth, Real(0));
    const Real tol = std::numeric_limits<Real>::epsilon() * 1000;
    std::function<Real(int)> nest = [&](int level) -> Real {
        boost::math::quadrature::exp_sinh<Real> integrator;
        return integrator.integrate(
            [&](const Real& x) {
                u[level] = x;
                return level + 1 == depth ? mixed_value<Real>(w_, n_, m, u, integrated) : nest(level + 1);
            },
            tol);
    };
    Real v = nest(0);
    std::lock_guard lock(mutex_);
    cache_hp_[m] = v;
    return v;
}

double ExpPolynomialProbe::error_estimate(const MultiIndex& m) const
{
    std::lock_guard lock(mutex_);
    auto it = cache_.find(m);
    return it == cache_.end() ? 0.0 : it->second.second;
}

// ---------------------------------------------------------------- expansions

Complex AsymptoticExpansion::coefficient(int m) const
{
    if (m > order) fail(ErrorCode::missing_coefficient, "asymptotic coefficient " + std::to_string(m) + " not computed");
    auto it = coefficients.find(m);
    return it == coefficients.end() ? Complex(0) : it->second;
}

Complex AsymptoticExpansion::evaluate(double x, int upto) const
{
    Complex s = 0;
    for (auto& [m, c] : coefficients)
        if (m <= upto) s += c * std::pow(x, static_cast<double>(m) / step);
    return s;
}

AsymptoticExpansion& AsymptoticExpansion::operator+=(const AsymptoticExpansion& o)
{
    if (coefficients.empty() && order == 0) {
        order = o.order;
        step = o.step;
    }
    if (step != o.step) fail(ErrorCode::invalid_input, "cannot merge expansions in different powers of t");
    order = std::min(order, o.order);
    for (auto& [m, c] : o.coefficients) coefficients[m] += c;
    for (auto it = coefficients.begin(); it != coefficients.end();)
        it = it->first > order ? coefficients.erase(it) : std::next(it);
    return *this;
}

// ---------------------------------------------------------------- phi

TruncatedLaurent<Rational> phi_factor(unsigned power, const Integer& residue, const Integer& modulus, const Integer& lower,
                                      const Rational& alpha, int hi)
{
    using S = TruncatedLaurent<Rational>;
    if (modulus == 0) {
        S s({0}, {hi});
        if (residue < lower) return s;
        Rational base = pow(Rational(residue), power);
        Rational x = Rational(residue) + alpha;
        Rational xm = 1;
        for (int m = 0; m <= hi; ++m) {
            s.at({m}) = base * xm / Rational(factorial(m));
            xm *= x;
        }
        return s;
    }
    Integer steps = ceil(Rational(lower - residue, modulus));
    Integer y0 = residue + steps * modulus;
    const int j = static_cast<int>(power);
    const int hi_g = hi + j;
    // e^{t y0}/(1 - e^{k t}) = -sum_n B_n(y0/k) k^{n-1} t^{n-1} / n!
    S g({-1}, {hi_g});
    Rational x(y0, modulus);
    x.canonicalize();
    Rational kpow(1, modulus);
    kpow.canonicalize();
    for (int n = 0; n <= hi_g + 1; ++n) {
        g.at({n - 1}) = -bernoulli_polynomial(n, x) * kpow / Rational(factorial(n));
        kpow *= Rational(modulus);
    }
    for (int d = 0; d < j; ++d) g = series_derive(g, 0);
    S ea({0}, {hi + j + 1});
    Rational am = 1;
    for (int m = 0; m <= hi + j + 1; ++m) {
        ea.at({m}) = am / Rational(factorial(m));
        am *= alpha;
    }
    return (g * ea).truncate({hi});
}

template <class C>
MultiIndex phi_lower_degrees(const BasicWeightFunction<C>& F)
{
    MultiIndex lo(F.dimension, 0);
    for (auto& t : F.terms)
        for (int i = 0; i < F.dimension; ++i)
            if (t.moduli[i] != 0) lo[i] = std::min(lo[i], -1 - static_cast<int>(t.powers[i]));
    return lo;
}

MultiIndex required_orders(const MultiIndex& lo, int max_order)
{
    int total = 0;
    for (int x : lo) total += x;
    MultiIndex hi(lo.size());
    for (size_t i = 0; i < lo.size(); ++i) hi[i] = std::max(lo[i], max_order - (total - lo[i]));
    return hi;
}

namespace {

template <class C>
C from_rational(const Rational& r)
{
    if constexpr (std::is_same_v<C, Rational>) return r;
    else return C(r.get_d());
}

}  // namespace

template <class C>
TruncatedLaurent<C> phi_series(const BasicWeightFunction<C>& F, const std::vector<Rational>& alpha, const MultiIndex& hi)
{
    const int n = F.dimension;
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(hi.size()) != n)
        fail(ErrorCode::truncation_mismatch, "alpha/order vectors do not match the weight dimension");
    MultiIndex lo = phi_lower_degrees(F);
    for (int i = 0; i < n; ++i)
        if (hi[i] < lo[i]) fail(ErrorCode::truncation_mismatch, "truncation order below the polynomial pole order");
    TruncatedLaurent<C> acc(lo, hi);

    using Key = std::tuple<int, unsigned, Integer, Integer>;
    std::map<Key, std::vector<C>> cache;
    auto factor = [&](int i, unsigned p, const Integer& a, const Integer& k) -> const std::vector<C>& {
        Integer ar = k == 0 ? a : mod(a, k);
        Key key{i, p, ar, k};
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto s = phi_factor(p, ar, k, F.offset[i], alpha[i], hi[i]);
        std::vector<C> v(hi[i] - lo[i] + 1);
        for (int d = lo[i]; d <= hi[i]; ++d) v[d - lo[i]] = from_rational<C>(s.coeff({d}));
        return cache.emplace(key, std::move(v)).first->second;
    };

    MultiIndex m(n);
    std::vector<const std::vector<C>*> fs(n);
    std::function<void(int, C)> fill = [&](int i, C prod) {
        if (i == n) {
            acc.at(m) += prod;
            return;
        }
        const auto& f = *fs[i];
        for (int d = lo[i]; d <= hi[i]; ++d) {
            const C& v = f[d - lo[i]];
            if (v == C(0)) continue;
            m[i] = d;
            fill(i + 1, prod * v);
        }
    };
    for (auto& t : F.terms) {
        if (t.coefficient == C(0)) continue;
        for (int i = 0; i < n; ++i) fs[i] = &factor(i, t.powers[i], t.residues[i], t.moduli[i]);
        fill(0, t.coefficient);
    }
    return acc;
}

template MultiIndex phi_lower_degrees(const BasicWeightFunction<Rational>&);
template MultiIndex phi_lower_degrees(const BasicWeightFunction<Complex>&);
template TruncatedLaurent<Rational> phi_series(const BasicWeightFunction<Rational>&, const std::vector<Rational>&, const MultiIndex&);
template TruncatedLaurent<Complex> phi_series(const BasicWeightFunction<Complex>&, const std::vector<Rational>&, const MultiIndex&);

// ---------------------------------------------------------------- Hadamard product

namespace {

template <class C>
AsymptoticExpansion hadamard_impl(const TruncatedLaurent<C>& phi, const SmoothProbe& f, int max_order)
{
    const int n = phi.vars();
    if (f.dimension() != n) fail(ErrorCode::invalid_input, "probe dimension differs from the series");
    const MultiIndex& lo = phi.lo();
    int total_lo = 0;
    for (int x : lo) total_lo += x;
    auto need = required_orders(lo, max_order);
    std::ostringstream missing;
    for (int i = 0; i < n; ++i)
        if (phi.hi()[i] < need[i])
            missing << " t_" << i << "^" << need[i] << " (have " << phi.hi()[i] << ")";
    if (!missing.str().empty())
        fail(ErrorCode::missing_coefficient, "series truncated too early for the requested order:" + missing.str());

    AsymptoticExpansion out;
    out.order = max_order;
    phi.for_each([&](const MultiIndex& m, const C& b) {
        int total = 0;
        for (int x : m) total += x;
        if (total > max_order || b == C(0)) return;
        Complex bc;
        if constexpr (std::is_same_v<C, Rational>) bc = b.get_d();
        else bc = b;
        double d = f.derivative(m);
        if (!std::isfinite(d)) {
            std::ostringstream os;
            os << "probe derivative unavailable at (";
            for (int i = 0; i < n; ++i) os << (i ? "," : "") << m[i];
            os << ")";
            fail(ErrorCode::missing_coefficient, os.str());
        }
        out.coefficients[total] += bc * d;
    });
    for (int m = total_lo; m <= max_order; ++m) out.coefficients.try_emplace(m, 0.0);
    return out;
}

}  // namespace

AsymptoticExpansion hadamard_product(const TruncatedLaurent<Rational>& phi, const SmoothProbe& f, int max_order)
{
    return hadamard_impl(phi, f, max_order);
}

AsymptoticExpansion hadamard_product(const TruncatedLaurent<Complex>& phi, const SmoothProbe& f, int max_order)
{
    return hadamard_impl(phi, f, max_order);
}

// ---------------------------------------------------------------- direct summation

template <class C>
Complex direct_sum_oracle(const BasicWeightFunction<C>& F, const std::vector<double>& alpha,
                          const std::function<double(const std::vector<double>&)>& f, double t, double tol, long max_extent)
{
    if (!(t > 0)) fail(ErrorCode::domain, "direct summation needs t > 0");
    const int n = F.dimension;
    struct FastTerm {
        Complex c;
        std::vector<unsigned> p;
        std::vector<long> a, k;
    };
    std::vector<FastTerm> terms;
    for (auto& term : F.terms) {
        FastTerm ft;
        if constexpr (std::is_same_v<C, Rational>) ft.c = term.coefficient.get_d();
        else ft.c = term.coefficient;
        ft.p = term.powers;
        for (int i = 0; i < n; ++i) {
            ft.a.push_back(to_long(term.residues[i]));
            ft.k.push_back(to_long(term.moduli[i]));
        }
        terms.push_back(std::move(ft));
    }
    std::vector<long> off(n);
    for (int i = 0; i < n; ++i) off[i] = to_long(F.offset[i]);

    auto weight = [&](const std::vector<long>& l) {
        Complex s = 0;
        for (auto& ft : terms) {
            double mono = 1;
            bool hit = true;
            for (int i = 0; i < n && hit; ++i) {
                if (ft.k[i] == 0) hit = l[i] == ft.a[i];
                else {
                    long r = (l[i] - ft.a[i]) % ft.k[i];
                    hit = r == 0;
                }
                if (hit && ft.p[i]) mono *= std::pow(static_cast<double>(l[i]), ft.p[i]);
            }
            if (hit) s += ft.c * mono;
        }
        return s;
    };

    auto box_sum = [&](long extent) {
        std::vector<long> l(off);
        std::vector<double> x(n);
        Complex s = 0;
        for (;;) {
            Complex w = weight(l);
            if (w != Complex(0)) {
                for (int i = 0; i < n; ++i) x[i] = t * (l[i] + alpha[i]);
                s += w * f(x);
            }
            int i = n - 1;
            while (i >= 0 && ++l[i] > off[i] + extent) {
                l[i] = off[i];
                --i;
            }
            if (i < 0) break;
        }
        return s;
    };

    long extent = std::max<long>(16, static_cast<long>(std::ceil(8.0 / t)));
    Complex prev = box_sum(extent);
    while (extent < max_extent) {
        extent *= 2;
        Complex cur = box_sum(extent);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    std::ostringstream os;
    os << "direct summation did not converge; partial sum " << prev.real() << "+" << prev.imag() << "i";
    fail(ErrorCode::convergence, os.str());
}

template Complex direct_sum_oracle(const BasicWeightFunction<Rational>&, const std::vector<double>&,
                                   const std::function<double(const std::vector<double>&)>&, double, double, long);
template Complex direct_sum_oracle(const BasicWeightFunction<Complex>&, const std::vector<double>&,
                                   const std::function<double(const std::vector<double>&)>&, double, double, long);

// ---------------------------------------------------------------- extended precision

Real RealExpansion::evaluate(const Real& x, int upto) const
{
    Real s = 0;
    for (auto& [m, c] : coefficients)
        if (m <= upto) s += c * boost::multiprecision::pow(x, m);
    return s;
}

RealExpansion hadamard_product_hp(const TruncatedLaurent<Rational>& phi, const SmoothProbe& f, int max_order)
{
    const int n = phi.vars();
    if (f.dimension() != n) fail(ErrorCode::invalid_input, "probe dimension differs from the series");
    auto need = required_orders(phi.lo(), max_order);
    for (int i = 0; i < n; ++i)
        if (phi.hi()[i] < need[i]) fail(ErrorCode::missing_coefficient, "series truncated too early for the requested order");
    RealExpansion out;
    out.order = max_order;
    phi.for_each([&](const MultiIndex& m, const Rational& b) {
        int total = 0;
        for (int x : m) total += x;
        if (total > max_order || b == 0) return;
        out.coefficients[total] += to_real(b) * f.derivative_hp(m);
    });
    return out;
}

Real direct_sum_oracle_hp(const WeightFunction& F, const std::vector<Rational>& alpha,
                          const std::function<Real(const std::vector<Real>&)>& f, const Real& t, const Real& tol,
                          long max_extent)
{
    if (!(t > 0)) fail(ErrorCode::domain, "direct summation needs t > 0");
    const int n = F.dimension;
    std::vector<Real> a(n);
    for (int i = 0; i < n; ++i) a[i] = to_real(alpha[i]);
    std::vector<long> off(n);
    for (int i = 0; i < n; ++i) off[i] = to_long(F.offset[i]);

    auto box_sum = [&](long extent) {
        std::vector<long> l(off);
        std::vector<Real> x(n);
        Real s = 0;
        for (;;) {
            std::vector<Integer> li(l.begin(), l.end());
            Rational w = F.evaluate(li);
            if (w != 0) {
                for (int i = 0; i < n; ++i) x[i] = t * (Real(l[i]) + a[i]);
                s += to_real(w) * f(x);
            }
            int i = n - 1;
            while (i >= 0 && ++l[i] > off[i] + extent) {
                l[i] = off[i];
                --i;
            }
            if (i < 0) break;
        }
        return s;
    };

    long extent = std::max<long>(16, static_cast<long>(std::ceil(8.0 / t.convert_to<double>())));
    Real prev = box_sum(extent);
    while (extent < max_extent) {
        extent *= 2;
        Real cur = box_sum(extent);
        if (abs(cur - prev) <= tol * std::max(Real(1), abs(cur))) return cur;
        prev = cur;
    }
    fail(ErrorCode::convergence, "direct summation did not converge; partial sum " + prev.str(20));
}

}  // namespace qtl::asymptotics
