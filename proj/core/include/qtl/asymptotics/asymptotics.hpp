#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qtl/asymptotics/weight_function.hpp"
#include "qtl/core/real.hpp"
#include "qtl/core/series.hpp"

namespace qtl::asymptotics {

// Multivariate polynomial with exact coefficients, keyed by exponent vector.
using Polynomial = std::map<MultiIndex, Rational>;

double evaluate(const Polynomial& w, const std::vector<double>& x);

// f on R_{>=0}^N with derivatives at the origin. A negative entry m_i = -r stands for the r-fold
// antiderivative along axis i, each step being g -> -int_x^infty g.
class SmoothProbe {
public:
    virtual ~SmoothProbe() = default;
    virtual int dimension() const = 0;
    virtual double value(const std::vector<double>& x) const = 0;
    virtual double derivative(const MultiIndex& m) const = 0;
    virtual Real derivative_hp(const MultiIndex& m) const { return Real(derivative(m)); }
    virtual bool rapid_decay() const { return true; }
    // Quadrature error estimate attached to the last antiderivative evaluation for m (0 if exact).
    virtual double error_estimate(const MultiIndex& m) const { (void)m; return 0.0; }
};

// f = exp(-w) for a polynomial w.
class ExpPolynomialProbe : public SmoothProbe {
public:
    ExpPolynomialProbe(int n, Polynomial w, double abs_tol = 1e-14);

    int dimension() const override { return n_; }
    double value(const std::vector<double>& x) const override;
    double derivative(const MultiIndex& m) const override;
    Real derivative_hp(const MultiIndex& m) const override;
    double error_estimate(const MultiIndex& m) const override;
    // Exact f^{(m)}(0) for m >= 0.
    Rational exact_derivative(const MultiIndex& m) const;
    const Polynomial& exponent() const { return w_; }

private:
    int n_;
    Polynomial w_;
    double tol_;
    mutable std::mutex mutex_;
    mutable std::map<MultiIndex, std::pair<double, double>> cache_;
    mutable std::map<MultiIndex, Real> cache_hp_;

    bool constant_term() const;
};

// User supplied value and derivative callbacks.
class CallbackProbe : public SmoothProbe {
public:
    CallbackProbe(int n, std::function<double(const std::vector<double>&)> value,
                  std::function<double(const MultiIndex&)> derivative)
        : n_(n), value_(std::move(value)), derivative_(std::move(derivative)) {}
    int dimension() const override { return n_; }
    double value(const std::vector<double>& x) const override { return value_(x); }
    double derivative(const MultiIndex& m) const override { return derivative_(m); }

private:
    int n_;
    std::function<double(const std::vector<double>&)> value_;
    std::function<double(const MultiIndex&)> derivative_;
};

struct AsymptoticExpansion {
    std::string variable = "t";
    std::map<int, Complex> coefficients;  // index m -> coefficient of t^{m/step}
    int order = 0;                        // largest index computed
    int step = 1;

    Complex coefficient(int m) const;
    int lowest() const { return coefficients.empty() ? 0 : coefficients.begin()->first; }
    // sum_{m <= upto} c_m x^m
    Complex evaluate(double x, int upto) const;
    AsymptoticExpansion& operator+=(const AsymptoticExpansion& o);
};

// Same expansion with extended-precision coefficients.
struct RealExpansion {
    std::map<int, Real> coefficients;
    int order = 0;

    Real evaluate(const Real& x, int upto) const;
};

// Lowest Laurent degree per variable of phi for this weight.
template <class C>
MultiIndex phi_lower_degrees(const BasicWeightFunction<C>& F);

// Laurent expansion at t = 0 of sum_l F(l) exp(sum_i t_i (l_i + alpha_i)), exact per variable
// up to degree hi_i.
template <class C>
TruncatedLaurent<C> phi_series(const BasicWeightFunction<C>& F, const std::vector<Rational>& alpha, const MultiIndex& hi);
template <class C>
TruncatedLaurent<C> phi_series(const BasicWeightFunction<C>& F, const std::vector<Rational>& alpha, int order)
{
    return phi_series(F, alpha, MultiIndex(F.dimension, order));
}

// Univariate factor of phi: e^{alpha t} d^j/dt^j [sum_{y >= lower, y = a mod k} e^{t y}], modulus 0 meaning y = a.
TruncatedLaurent<Rational> phi_factor(unsigned power, const Integer& residue, const Integer& modulus, const Integer& lower,
                                      const Rational& alpha, int hi);

// Coefficient of t^M is sum_{|m| = M} B_m f^{(m)}(0).
AsymptoticExpansion hadamard_product(const TruncatedLaurent<Rational>& phi, const SmoothProbe& f, int max_order);
AsymptoticExpansion hadamard_product(const TruncatedLaurent<Complex>& phi, const SmoothProbe& f, int max_order);

RealExpansion hadamard_product_hp(const TruncatedLaurent<Rational>& phi, const SmoothProbe& f, int max_order);

// Per-variable truncation order that makes every multi-index of total degree <= max_order available.
MultiIndex required_orders(const MultiIndex& lo, int max_order);

template <class C>
AsymptoticExpansion asymptotic_coefficients(const BasicWeightFunction<C>& F, const std::vector<Rational>& alpha,
                                            const SmoothProbe& f, int max_order)
{
    if (!f.rapid_decay()) fail(ErrorCode::domain, "probe is not certified to decay rapidly");
    auto hi = required_orders(phi_lower_degrees(F), max_order);
    return hadamard_product(phi_series(F, alpha, hi), f, max_order);
}

inline RealExpansion asymptotic_coefficients_hp(const WeightFunction& F, const std::vector<Rational>& alpha,
                                                const SmoothProbe& f, int max_order)
{
    if (!f.rapid_decay()) fail(ErrorCode::domain, "probe is not certified to decay rapidly");
    auto hi = required_orders(phi_lower_degrees(F), max_order);
    return hadamard_product_hp(phi_series(F, alpha, hi), f, max_order);
}

// sum_l F(l) f(t(l + alpha)) by growing boxes until successive sums agree to tol.
template <class C>
Complex direct_sum_oracle(const BasicWeightFunction<C>& F, const std::vector<double>& alpha,
                          const std::function<double(const std::vector<double>&)>& f, double t, double tol = 1e-15,
                          long max_extent = 1L << 22);

Real direct_sum_oracle_hp(const WeightFunction& F, const std::vector<Rational>& alpha,
                          const std::function<Real(const std::vector<Real>&)>& f, const Real& t, const Real& tol,
                          long max_extent = 1L << 22);

}  // namespace qtl::asymptotics
